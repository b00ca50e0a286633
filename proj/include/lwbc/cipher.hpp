#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "lwbc/block.hpp"
#include "lwbc/klein.hpp"
#include "lwbc/piccolo.hpp"
#include "lwbc/simon.hpp"
#include "lwbc/speck.hpp"
#include "lwbc/twine.hpp"

namespace lwbc {

/// The closed set of implemented ciphers.
enum class CipherId { Klein80, Twine80, Piccolo80, Simon6496, Speck6496 };

struct CipherInfo {
    CipherId id;
    std::string_view name;
    unsigned key_bits;
};

/// Registry in fixed order: klein-80, twine-80, piccolo-80, simon-64-96,
/// speck-64-96.
std::span<const CipherInfo> all_ciphers();

std::string_view cipher_name(CipherId id);
std::optional<CipherId> cipher_from_name(std::string_view name);
unsigned cipher_key_bits(CipherId id);

/// Cipher-specific expanded key material. Immutable after expansion and safe
/// to share across concurrent encrypt/decrypt calls.
struct RoundKeySchedule {
    CipherId cipher{};
    std::variant<klein::KeySchedule, twine::KeySchedule, piccolo::KeySchedule,
                 simon::KeySchedule, speck::KeySchedule>
        material;
};

/// Expands `key` for `cipher`. Throws std::invalid_argument on a key-length
/// mismatch. Deterministic: equal inputs yield identical schedules.
RoundKeySchedule expand_key(CipherId cipher, const CipherKey& key);

/// Throws std::invalid_argument if the schedule was expanded for a different
/// cipher.
Block64 encrypt_block(CipherId cipher, const RoundKeySchedule& schedule, Block64 pt);
Block64 decrypt_block(CipherId cipher, const RoundKeySchedule& schedule, Block64 ct);

}
