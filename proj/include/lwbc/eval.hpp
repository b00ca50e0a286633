#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwbc/cipher.hpp"

namespace lwbc::eval {

/// Where a measurement came from. Reference-table numbers (Atmega128) and
/// host-benchmark numbers are incommensurable and never mix in one ranking.
enum class Source { ReferenceTable, HostBenchmark };

std::string_view source_name(Source s);

/// Supplies power and energy-per-cycle for the energy model
/// energy = power * cycles / frequency.
struct DeviceProfile {
    std::string name;
    double voltage_v = 0;
    double current_a = 0;
    double frequency_hz = 0;
    // When set, used verbatim instead of voltage*current/frequency.
    std::optional<double> energy_per_cycle_override_j;

    double power_w() const { return voltage_v * current_a; }
    double energy_per_cycle_j() const;

    /// Throws std::invalid_argument unless the profile is usable: either all
    /// of voltage/current/frequency strictly positive, or a positive
    /// energy-per-cycle override.
    void validate() const;
};

struct CycleMeasurement {
    CipherId cipher{};
    std::uint64_t cycles = 0;  // > 0
    Source source = Source::ReferenceTable;
};

struct MemoryRecord {
    CipherId cipher{};
    std::uint64_t ram_bytes = 0;
    std::uint64_t flash_bytes = 0;
    Source source = Source::ReferenceTable;
};

struct EvalRecord {
    CipherId cipher{};
    std::optional<CycleMeasurement> cycles;
    std::optional<MemoryRecord> memory;
    // Present only once cycles and a profile were supplied.
    std::optional<double> energy_j;
};

/// Host-side byte accounting derived from the pinned schedule and table
/// sizes, not from compiled binary size.
struct StructuralFootprint {
    CipherId cipher{};
    std::size_t state_bytes = 0;
    std::size_t round_key_bytes = 0;
    std::size_t constant_table_bytes = 0;
};

/// energy = power * cycles / frequency, in joules. Linear in cycles.
double energy_joules(const DeviceProfile& profile, std::uint64_t cycles);

/// Fills rec.energy_j from rec.cycles and the profile; leaves it empty when
/// there is no cycle measurement.
void attach_energy(EvalRecord& rec, const DeviceProfile& profile);

struct Calibration {
    double joules_per_cycle = 0;
    double max_rel_residual = 0;
};

/// Least-squares fit through the origin of energy (microjoules) against
/// cycles. Throws on empty input or non-positive cycle counts.
Calibration calibrate_energy_per_cycle(
    std::span<const std::pair<std::uint64_t, double>> rows_cycles_uj);

/// RAM + FLASH, the combined "public memory" measure.
std::uint64_t combined_memory(const MemoryRecord& rec);

enum class Metric { Energy, Cycles, Ram, Flash, CombinedMemory };

std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);
std::string_view metric_unit(Metric m);

/// Ascending order by metric value; ties broken by cipher name. Throws if a
/// record lacks the metric or the records mix sources.
std::vector<std::pair<CipherId, double>> rank(std::span<const EvalRecord> records, Metric metric);

StructuralFootprint structural_footprint(CipherId cipher);

/// The five built-in reference records: Atmega128 cycle counts and RAM/FLASH
/// bytes, source = reference-table.
std::vector<EvalRecord> load_reference_dataset();

/// The built-in profile reproducing the reference energies: 5 nJ/cycle,
/// exposed as 5 V * 8 mA / 8 MHz (one conventional decomposition of the
/// implied ratio).
DeviceProfile atmega128_paper_profile();

std::span<const DeviceProfile> builtin_profiles();

/// Profile file: one profile per line, `#` comments allowed. Either
///   <name> <voltage_v> <current_a> <frequency_hz>
/// or
///   <name> energy_per_cycle_nj=<value>
std::vector<DeviceProfile> parse_profile_stream(std::istream& in);
std::vector<DeviceProfile> load_profile_file(const std::string& path);

}
