#include "lwbc/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lwbc/version.hpp"

namespace lwbc::report {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string fmt_uj(double v) { return fmt("%.2f", v); }

std::string fmt_point(const FigureSeries& s, double v) {
    if (s.integral) return std::to_string(static_cast<long long>(std::llround(v)));
    return fmt("%.2f", v);
}

const char* kCaveatHost =
    "host-benchmark cycle counts come from this machine's timestamp counter and are not "
    "comparable to the reference Atmega128 counts";

ReportBundle assemble(eval::Source source, const std::string& profile_name,
                      const std::vector<Table1Row>& t1, const std::vector<Table2Row>& t2) {
    ReportBundle b;
    b.source = source;
    b.profile_name = profile_name;
    b.tool_version = std::string(kToolVersion);
    if (source == eval::Source::HostBenchmark) b.caveat = kCaveatHost;
    b.table1 = t1;
    b.table2 = t2;

    b.figures[0].label = "energy_uj";
    for (const auto& row : t1) b.figures[0].points.emplace_back(row.cipher, row.energy_uj);
    b.figures[1] = {"ram_bytes", {}, true};
    b.figures[2] = {"flash_bytes", {}, true};
    b.figures[3] = {"combined_bytes", {}, true};
    for (const auto& row : t2) {
        b.figures[1].points.emplace_back(row.cipher, static_cast<double>(row.ram_bytes));
        b.figures[2].points.emplace_back(row.cipher, static_cast<double>(row.flash_bytes));
        b.figures[3].points.emplace_back(row.cipher, static_cast<double>(row.combined_bytes));
    }
    b.validate();
    return b;
}

}  // namespace

void ReportBundle::validate() const {
    if (table1.size() != table2.size())
        throw std::logic_error("report bundle: table sizes differ");
    for (std::size_t i = 0; i < table1.size(); ++i)
        if (table1[i].cipher != table2[i].cipher)
            throw std::logic_error("report bundle: table cipher sets differ");
    const auto& ram = figures[1].points;
    const auto& flash = figures[2].points;
    const auto& combined = figures[3].points;
    if (ram.size() != flash.size() || ram.size() != combined.size())
        throw std::logic_error("report bundle: figure series lengths differ");
    for (std::size_t i = 0; i < combined.size(); ++i)
        if (combined[i].second != ram[i].second + flash[i].second)
            throw std::logic_error("report bundle: figure 4 is not the sum of figures 2 and 3");
}

ReportBundle build_reference_report(const eval::DeviceProfile& profile) {
    profile.validate();
    std::vector<Table1Row> t1;
    std::vector<Table2Row> t2;
    for (const eval::EvalRecord& rec : eval::load_reference_dataset()) {
        Table1Row r1;
        r1.cipher = rec.cipher;
        r1.cycles = rec.cycles->cycles;
        r1.energy_uj = eval::energy_joules(profile, r1.cycles) * 1e6;
        t1.push_back(r1);
        Table2Row r2;
        r2.cipher = rec.cipher;
        r2.ram_bytes = rec.memory->ram_bytes;
        r2.flash_bytes = rec.memory->flash_bytes;
        r2.combined_bytes = eval::combined_memory(*rec.memory);
        t2.push_back(r2);
    }
    return assemble(eval::Source::ReferenceTable, profile.name, t1, t2);
}

ReportBundle build_host_report(const eval::DeviceProfile& profile, const bench::BenchConfig& cfg) {
    profile.validate();
    if (!bench::cycle_counter_available())
        throw std::runtime_error(
            "host report requires a hardware cycle counter, which this platform lacks");
    std::vector<Table1Row> t1;
    std::vector<Table2Row> t2;
    for (const bench::BenchResult& res : bench::bench_all(cfg)) {
        Table1Row r1;
        r1.cipher = res.cipher;
        r1.cycles = static_cast<std::uint64_t>(std::llround(*res.cycles_per_block));
        r1.energy_uj = eval::energy_joules(profile, r1.cycles) * 1e6;
        t1.push_back(r1);

        eval::StructuralFootprint fp = eval::structural_footprint(res.cipher);
        Table2Row r2;
        r2.cipher = res.cipher;
        r2.ram_bytes = fp.state_bytes + fp.round_key_bytes;
        r2.flash_bytes = fp.constant_table_bytes;
        r2.combined_bytes = r2.ram_bytes + r2.flash_bytes;
        t2.push_back(r2);
    }
    return assemble(eval::Source::HostBenchmark, profile.name, t1, t2);
}

std::string to_csv(const ReportBundle& bundle) {
    bundle.validate();
    std::string out;
    out += "# lwbc report\n";
    out += "# tool-version: " + bundle.tool_version + "\n";
    out += "# source: " + std::string(eval::source_name(bundle.source)) + "\n";
    out += "# profile: " + bundle.profile_name + "\n";
    if (!bundle.caveat.empty()) out += "# caveat: " + bundle.caveat + "\n";

    out += "# table-1\n";
    out += "cipher,cycles,energy_uj\n";
    for (const auto& r : bundle.table1)
        out += std::string(cipher_name(r.cipher)) + "," + std::to_string(r.cycles) + "," +
               fmt_uj(r.energy_uj) + "\n";

    out += "# table-2\n";
    out += "cipher,ram_bytes,flash_bytes,combined_bytes\n";
    for (const auto& r : bundle.table2)
        out += std::string(cipher_name(r.cipher)) + "," + std::to_string(r.ram_bytes) + "," +
               std::to_string(r.flash_bytes) + "," + std::to_string(r.combined_bytes) + "\n";

    for (std::size_t i = 0; i < bundle.figures.size(); ++i) {
        const FigureSeries& s = bundle.figures[i];
        out += "# figure-" + std::to_string(i + 1) + ": " + s.label + "\n";
        out += "cipher,value\n";
        for (const auto& [cipher, value] : s.points)
            out += std::string(cipher_name(cipher)) + "," + fmt_point(s, value) + "\n";
    }
    return out;
}

std::string to_markdown(const ReportBundle& bundle) {
    bundle.validate();
    std::string out;
    out += "# Cipher evaluation report\n\n";
    out += "- source: " + std::string(eval::source_name(bundle.source)) + "\n";
    out += "- profile: " + bundle.profile_name + "\n";
    out += "- tool version: " + bundle.tool_version + "\n";
    if (!bundle.caveat.empty()) out += "- caveat: " + bundle.caveat + "\n";

    out += "\n## Energy per block\n\n";
    out += "| cipher | cycles | energy (uJ) |\n|---|---:|---:|\n";
    for (const auto& r : bundle.table1)
        out += "| " + std::string(cipher_name(r.cipher)) + " | " + std::to_string(r.cycles) +
               " | " + fmt_uj(r.energy_uj) + " |\n";

    out += "\n## Memory\n\n";
    out += "| cipher | RAM (bytes) | FLASH (bytes) | combined (bytes) |\n|---|---:|---:|---:|\n";
    for (const auto& r : bundle.table2)
        out += "| " + std::string(cipher_name(r.cipher)) + " | " + std::to_string(r.ram_bytes) +
               " | " + std::to_string(r.flash_bytes) + " | " + std::to_string(r.combined_bytes) +
               " |\n";

    out += "\n## Figure data\n";
    for (std::size_t i = 0; i < bundle.figures.size(); ++i) {
        const FigureSeries& s = bundle.figures[i];
        out += "\n### Figure " + std::to_string(i + 1) + ": " + s.label + "\n\n";
        out += "| cipher | value |\n|---|---:|\n";
        for (const auto& [cipher, value] : s.points)
            out += "| " + std::string(cipher_name(cipher)) + " | " + fmt_point(s, value) + " |\n";
    }
    return out;
}

std::string bench_csv(std::span<const bench::BenchResult> results) {
    std::string out = "cipher,workload,ns_per_block,cycles_per_block,blocks_per_s,min_ns,max_ns\n";
    for (const bench::BenchResult& r : results) {
        out += std::string(cipher_name(r.cipher)) + "," + std::string(workload_name(r.workload));
        out += "," + fmt("%.2f", r.ns_per_block);
        out += ",";
        if (r.cycles_per_block) out += fmt("%.1f", *r.cycles_per_block);
        out += "," + fmt("%.0f", r.blocks_per_second);
        out += "," + fmt("%.2f", r.min_ns);
        out += "," + fmt("%.2f", r.max_ns);
        out += "\n";
    }
    return out;
}

}
