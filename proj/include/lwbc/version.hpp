#pragma once

#include <string_view>

namespace lwbc {

inline constexpr std::string_view kToolVersion = "1.0.0";

}
