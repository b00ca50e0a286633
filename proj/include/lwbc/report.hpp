#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "lwbc/bench.hpp"
#include "lwbc/eval.hpp"

namespace lwbc::report {

struct Table1Row {
    CipherId cipher{};
    std::uint64_t cycles = 0;
    double energy_uj = 0;
};

struct Table2Row {
    CipherId cipher{};
    std::uint64_t ram_bytes = 0;
    std::uint64_t flash_bytes = 0;
    std::uint64_t combined_bytes = 0;
};

// Figures 1-4 as data series: energy, RAM, FLASH, combined memory.
struct FigureSeries {
    std::string label;
    std::vector<std::pair<CipherId, double>> points;
    bool integral = false;  // format points as integers
};

struct ReportBundle {
    eval::Source source = eval::Source::ReferenceTable;
    std::string profile_name;
    std::string tool_version;
    std::string caveat;  // host mode only
    std::vector<Table1Row> table1;
    std::vector<Table2Row> table2;
    std::array<FigureSeries, 4> figures;

    /// Checks the bundle invariants: table1 and table2 cover the same
    /// ciphers, and the figure-4 series is the elementwise sum of figures
    /// 2 and 3. Throws std::logic_error on violation.
    void validate() const;
};

/// Reference-mode bundle: embedded Atmega128 dataset plus energies computed
/// from `profile`. Fully deterministic.
ReportBundle build_reference_report(const eval::DeviceProfile& profile);

/// Host-mode bundle: runs the benchmark harness (cycle counter required),
/// derives the memory table from structural footprints (RAM = state + round
/// keys, FLASH = constant tables).
ReportBundle build_host_report(const eval::DeviceProfile& profile, const bench::BenchConfig& cfg);

std::string to_csv(const ReportBundle& bundle);
std::string to_markdown(const ReportBundle& bundle);

/// Benchmark rows in the stable CSV schema
/// cipher,workload,ns_per_block,cycles_per_block,blocks_per_s,min_ns,max_ns.
std::string bench_csv(std::span<const bench::BenchResult> results);

}
