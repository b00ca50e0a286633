#include "lwbc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lwbc::eval {

namespace {

// Reference rows in registry order: cycles, ram bytes, flash bytes.
struct ReferenceRow {
    CipherId cipher;
    std::uint64_t cycles;
    std::uint64_t ram;
    std::uint64_t flash;
};

constexpr ReferenceRow kReferenceRows[] = {
    {CipherId::Klein80, 17244, 76, 1178},
    {CipherId::Twine80, 14242, 95, 1140},
    {CipherId::Piccolo80, 16748, 76, 1691},
    {CipherId::Simon6496, 19130, 168, 1406},
    {CipherId::Speck6496, 13868, 126, 1391},
};

double positive(double v, const char* what) {
    if (!(v > 0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("device profile: ") + what +
                                    " must be strictly positive");
    return v;
}

}  // namespace

std::string_view source_name(Source s) {
    return s == Source::ReferenceTable ? "reference-table" : "host-benchmark";
}

double DeviceProfile::energy_per_cycle_j() const {
    if (energy_per_cycle_override_j) return *energy_per_cycle_override_j;
    return power_w() / frequency_hz;
}

void DeviceProfile::validate() const {
    if (energy_per_cycle_override_j) {
        positive(*energy_per_cycle_override_j, "energy_per_cycle");
        return;
    }
    positive(voltage_v, "voltage");
    positive(current_a, "current");
    positive(frequency_hz, "frequency");
}

double energy_joules(const DeviceProfile& profile, std::uint64_t cycles) {
    profile.validate();
    return profile.energy_per_cycle_j() * static_cast<double>(cycles);
}

void attach_energy(EvalRecord& rec, const DeviceProfile& profile) {
    if (rec.cycles) rec.energy_j = energy_joules(profile, rec.cycles->cycles);
}

Calibration calibrate_energy_per_cycle(
    std::span<const std::pair<std::uint64_t, double>> rows_cycles_uj) {
    if (rows_cycles_uj.empty())
        throw std::invalid_argument("calibration requires at least one (cycles, energy) row");
    double num = 0, den = 0;
    for (const auto& [cycles, uj] : rows_cycles_uj) {
        if (cycles == 0) throw std::invalid_argument("calibration rows require cycles > 0");
        double c = static_cast<double>(cycles);
        num += c * uj * 1e-6;
        den += c * c;
    }
    Calibration cal;
    cal.joules_per_cycle = num / den;
    for (const auto& [cycles, uj] : rows_cycles_uj) {
        double predicted = cal.joules_per_cycle * static_cast<double>(cycles);
        double actual = uj * 1e-6;
        if (actual != 0)
            cal.max_rel_residual =
                std::max(cal.max_rel_residual, std::abs(predicted - actual) / std::abs(actual));
    }
    return cal;
}

std::uint64_t combined_memory(const MemoryRecord& rec) {
    return rec.ram_bytes + rec.flash_bytes;
}

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::Energy: return "energy";
        case Metric::Cycles: return "cycles";
        case Metric::Ram: return "ram";
        case Metric::Flash: return "flash";
        case Metric::CombinedMemory: return "combined-memory";
    }
    return "?";
}

std::optional<Metric> metric_from_name(std::string_view name) {
    for (Metric m : {Metric::Energy, Metric::Cycles, Metric::Ram, Metric::Flash,
                     Metric::CombinedMemory})
        if (metric_name(m) == name) return m;
    return std::nullopt;
}

std::string_view metric_unit(Metric m) {
    switch (m) {
        case Metric::Energy: return "uJ";
        case Metric::Cycles: return "cycles";
        default: return "bytes";
    }
}

namespace {

// Value plus the source that produced it, for the mixed-source check.
std::pair<double, Source> metric_value(const EvalRecord& rec, Metric metric) {
    auto missing = [&rec](const char* what) {
        return std::invalid_argument(std::string(cipher_name(rec.cipher)) + ": record has no " +
                                     what);
    };
    switch (metric) {
        case Metric::Energy:
            if (!rec.energy_j || !rec.cycles) throw missing("energy value");
            return {*rec.energy_j * 1e6, rec.cycles->source};
        case Metric::Cycles:
            if (!rec.cycles) throw missing("cycle measurement");
            return {static_cast<double>(rec.cycles->cycles), rec.cycles->source};
        case Metric::Ram:
            if (!rec.memory) throw missing("memory record");
            return {static_cast<double>(rec.memory->ram_bytes), rec.memory->source};
        case Metric::Flash:
            if (!rec.memory) throw missing("memory record");
            return {static_cast<double>(rec.memory->flash_bytes), rec.memory->source};
        case Metric::CombinedMemory:
            if (!rec.memory) throw missing("memory record");
            return {static_cast<double>(combined_memory(*rec.memory)), rec.memory->source};
    }
    throw std::invalid_argument("unknown metric");
}

}  // namespace

std::vector<std::pair<CipherId, double>> rank(std::span<const EvalRecord> records, Metric metric) {
    std::vector<std::pair<CipherId, double>> out;
    out.reserve(records.size());
    std::optional<Source> seen;
    for (const EvalRecord& rec : records) {
        auto [value, source] = metric_value(rec, metric);
        if (seen && *seen != source)
            throw std::invalid_argument(
                "rank: reference-table and host-benchmark records cannot be mixed");
        seen = source;
        out.emplace_back(rec.cipher, value);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return cipher_name(a.first) < cipher_name(b.first);
    });
    return out;
}

StructuralFootprint structural_footprint(CipherId cipher) {
    StructuralFootprint fp;
    fp.cipher = cipher;
    fp.state_bytes = sizeof(Block64);
    switch (cipher) {
        case CipherId::Klein80:
            fp.round_key_bytes = sizeof(klein::KeySchedule);  // 17 x 8
            fp.constant_table_bytes = sizeof(klein::kSbox);
            break;
        case CipherId::Twine80:
            fp.round_key_bytes = sizeof(twine::KeySchedule);  // 36 x 4
            fp.constant_table_bytes = sizeof(twine::kSbox) + sizeof(twine::kShuffle);
            break;
        case CipherId::Piccolo80:
            fp.round_key_bytes = sizeof(piccolo::KeySchedule);  // 50 x 2 + 4 x 2
            fp.constant_table_bytes = sizeof(piccolo::kSbox) + sizeof(piccolo::kBytePerm);
            break;
        case CipherId::Simon6496:
            fp.round_key_bytes = sizeof(simon::KeySchedule);  // 42 x 4
            fp.constant_table_bytes = sizeof(simon::kZ);
            break;
        case CipherId::Speck6496:
            fp.round_key_bytes = sizeof(speck::KeySchedule);  // 26 x 4
            fp.constant_table_bytes = 0;  // ARX, no tables
            break;
    }
    return fp;
}

std::vector<EvalRecord> load_reference_dataset() {
    std::vector<EvalRecord> records;
    records.reserve(std::size(kReferenceRows));
    for (const ReferenceRow& row : kReferenceRows) {
        EvalRecord rec;
        rec.cipher = row.cipher;
        rec.cycles = CycleMeasurement{row.cipher, row.cycles, Source::ReferenceTable};
        rec.memory = MemoryRecord{row.cipher, row.ram, row.flash, Source::ReferenceTable};
        records.push_back(rec);
    }
    return records;
}

DeviceProfile atmega128_paper_profile() {
    DeviceProfile p;
    p.name = "atmega128-paper";
    p.voltage_v = 5.0;
    p.current_a = 0.008;
    p.frequency_hz = 8e6;
    p.energy_per_cycle_override_j = 5e-9;  // pins the implied ratio exactly
    return p;
}

std::span<const DeviceProfile> builtin_profiles() {
    static const std::vector<DeviceProfile> profiles = {atmega128_paper_profile()};
    return profiles;
}

std::vector<DeviceProfile> parse_profile_stream(std::istream& in) {
    std::vector<DeviceProfile> profiles;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (auto pos = sv.find('#'); pos != std::string_view::npos) sv = sv.substr(0, pos);
        std::istringstream fields{std::string(sv)};
        std::string name;
        if (!(fields >> name)) continue;

        auto fail = [lineno](const std::string& what) {
            return std::runtime_error("profile file line " + std::to_string(lineno) + ": " + what);
        };

        DeviceProfile p;
        p.name = name;
        std::string second;
        if (!(fields >> second)) throw fail("expected profile fields after name");
        constexpr std::string_view kOverrideKey = "energy_per_cycle_nj=";
        if (second.starts_with(kOverrideKey)) {
            try {
                p.energy_per_cycle_override_j =
                    std::stod(second.substr(kOverrideKey.size())) * 1e-9;
            } catch (const std::exception&) {
                throw fail("bad energy_per_cycle_nj value");
            }
        } else {
            try {
                p.voltage_v = std::stod(second);
            } catch (const std::exception&) {
                throw fail("bad voltage value");
            }
            if (!(fields >> p.current_a >> p.frequency_hz))
                throw fail("expected <name> <voltage_v> <current_a> <frequency_hz>");
        }
        std::string extra;
        if (fields >> extra) throw fail("unexpected trailing field '" + extra + "'");
        try {
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

std::vector<DeviceProfile> load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);
    return parse_profile_stream(in);
}

}
