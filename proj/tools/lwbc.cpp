// lwbc: encrypt/decrypt blocks, run known-answer tests, benchmark the five
// ciphers, and produce energy/memory evaluation reports and rankings.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "lwbc/bench.hpp"
#include "lwbc/cipher.hpp"
#include "lwbc/eval.hpp"
#include "lwbc/kat.hpp"
#include "lwbc/report.hpp"
#include "lwbc/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitKatFailure = 1;
constexpr int kExitUsage = 2;

bool color_enabled() {
    return ::isatty(::fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string pass_tag(bool pass) {
    if (!color_enabled()) return pass ? "PASS" : "FAIL";
    return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

lwbc::CipherId parse_cipher(const std::string& name) {
    auto id = lwbc::cipher_from_name(name);
    if (!id) {
        std::string known;
        for (const auto& ci : lwbc::all_ciphers()) {
            if (!known.empty()) known += ", ";
            known += ci.name;
        }
        throw CLI::ValidationError("cipher", "unknown cipher '" + name + "' (known: " + known + ")");
    }
    return *id;
}

// --profile accepts a built-in name or a path to a profile file; when the
// file defines several profiles, --profile-name selects one.
lwbc::eval::DeviceProfile resolve_profile(const std::string& spec, const std::string& name) {
    for (const auto& p : lwbc::eval::builtin_profiles())
        if (p.name == spec) return p;
    if (std::filesystem::exists(spec)) {
        auto profiles = lwbc::eval::load_profile_file(spec);
        if (profiles.empty()) throw std::runtime_error(spec + ": no profiles defined");
        if (!name.empty()) {
            for (const auto& p : profiles)
                if (p.name == name) return p;
            throw std::runtime_error(spec + ": no profile named '" + name + "'");
        }
        if (profiles.size() > 1)
            throw std::runtime_error(spec + ": defines " + std::to_string(profiles.size()) +
                                     " profiles; pick one with --profile-name");
        return profiles.front();
    }
    throw std::runtime_error("unknown profile '" + spec +
                             "' (not a built-in name and not a readable file)");
}

struct BenchFlags {
    std::uint64_t warmup = 1000;
    std::uint64_t iterations = 100000;
    unsigned repetitions = 9;
    std::string workload = "encrypt-only";

    void attach(CLI::App* cmd) {
        cmd->add_option("--warmup", warmup, "Warmup iterations")->capture_default_str();
        cmd->add_option("--iterations", iterations, "Measured iterations per repetition")
            ->capture_default_str();
        cmd->add_option("--repetitions", repetitions, "Timed repetitions (odd; median reported)")
            ->capture_default_str();
        cmd->add_option("--workload", workload,
                        "encrypt-only, expand+encrypt or decrypt-only")
            ->capture_default_str();
    }

    lwbc::bench::BenchConfig config() const {
        lwbc::bench::BenchConfig cfg;
        cfg.warmup_iterations = warmup;
        cfg.measured_iterations = iterations;
        cfg.repetitions = repetitions;
        auto w = lwbc::bench::workload_from_name(workload);
        if (!w) throw std::runtime_error("unknown workload '" + workload + "'");
        cfg.workload = *w;
        cfg.validate();
        return cfg;
    }
};

int run_crypt(bool encrypting, const std::string& cipher_name, const std::string& key_hex,
              const std::string& block_hex) {
    lwbc::CipherId id = parse_cipher(cipher_name);
    lwbc::CipherKey key = lwbc::CipherKey::from_hex(key_hex, lwbc::cipher_key_bits(id));
    lwbc::Block64 in = lwbc::parse_hex_block(block_hex);
    lwbc::RoundKeySchedule schedule = lwbc::expand_key(id, key);
    lwbc::Block64 out = encrypting ? lwbc::encrypt_block(id, schedule, in)
                                   : lwbc::decrypt_block(id, schedule, in);
    std::cout << lwbc::format_hex_block(out) << "\n";
    return kExitOk;
}

int run_kat(const std::string& path) {
    auto vectors = lwbc::load_kat_file(path);
    auto report = lwbc::run_kats(vectors);
    for (const auto& o : report.outcomes) {
        std::cout << pass_tag(o.pass) << " " << lwbc::cipher_name(o.vector.cipher)
                  << " pt=" << lwbc::format_hex_block(o.vector.plaintext)
                  << " expected=" << lwbc::format_hex_block(o.vector.ciphertext);
        if (!o.pass)
            std::cout << " computed=" << lwbc::format_hex_block(o.computed_ciphertext)
                      << " recovered_pt=" << lwbc::format_hex_block(o.recovered_plaintext);
        std::cout << "  (" << o.vector.source << ")\n";
    }
    std::cout << report.outcomes.size() << " vectors, " << report.passed() << " passed, "
              << report.failed() << " failed\n";
    return report.all_pass() ? kExitOk : kExitKatFailure;
}

std::vector<lwbc::eval::EvalRecord> host_records(lwbc::eval::Metric metric,
                                                 const BenchFlags& bench_flags,
                                                 const lwbc::eval::DeviceProfile& profile) {
    using lwbc::eval::Metric;
    std::vector<lwbc::eval::EvalRecord> records;
    const bool needs_cycles = metric == Metric::Energy || metric == Metric::Cycles;
    std::vector<lwbc::bench::BenchResult> results;
    if (needs_cycles) {
        if (!lwbc::bench::cycle_counter_available())
            throw std::runtime_error(
                "host cycle counts need a hardware cycle counter, which this platform lacks");
        results = lwbc::bench::bench_all(bench_flags.config());
    }
    for (std::size_t i = 0; i < lwbc::all_ciphers().size(); ++i) {
        const auto& ci = lwbc::all_ciphers()[i];
        lwbc::eval::EvalRecord rec;
        rec.cipher = ci.id;
        if (needs_cycles) {
            auto cycles = static_cast<std::uint64_t>(*results[i].cycles_per_block);
            rec.cycles = lwbc::eval::CycleMeasurement{ci.id, cycles,
                                                      lwbc::eval::Source::HostBenchmark};
            lwbc::eval::attach_energy(rec, profile);
        } else {
            auto fp = lwbc::eval::structural_footprint(ci.id);
            rec.memory = lwbc::eval::MemoryRecord{
                ci.id, fp.state_bytes + fp.round_key_bytes, fp.constant_table_bytes,
                lwbc::eval::Source::HostBenchmark};
        }
        records.push_back(rec);
    }
    return records;
}

int run_recommend(const std::string& metric_name, const std::string& source,
                  const lwbc::eval::DeviceProfile& profile, const BenchFlags& bench_flags) {
    auto metric = lwbc::eval::metric_from_name(metric_name);
    if (!metric)
        throw std::runtime_error("unknown metric '" + metric_name +
                                 "' (energy, cycles, ram, flash, combined-memory)");

    std::vector<lwbc::eval::EvalRecord> records;
    if (source == "reference") {
        records = lwbc::eval::load_reference_dataset();
        for (auto& rec : records) lwbc::eval::attach_energy(rec, profile);
    } else if (source == "host") {
        records = host_records(*metric, bench_flags, profile);
    } else {
        throw std::runtime_error("unknown source '" + source + "' (reference or host)");
    }

    auto ranked = lwbc::eval::rank(records, *metric);
    char buf[64];
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& [cipher, value] = ranked[i];
        if (*metric == lwbc::eval::Metric::Energy)
            std::snprintf(buf, sizeof(buf), "%.2f", value);
        else
            std::snprintf(buf, sizeof(buf), "%.0f", value);
        std::printf("%zu. %-12s %s %s\n", i + 1, std::string(lwbc::cipher_name(cipher)).c_str(),
                    buf, std::string(lwbc::eval::metric_unit(*metric)).c_str());
    }
    if (source == "host")
        std::printf("# host-benchmark figures; not comparable to the reference table\n");
    return kExitOk;
}

int run_profiles(const std::string& path) {
    auto print = [](const lwbc::eval::DeviceProfile& p) {
        std::printf("%-18s", p.name.c_str());
        if (p.energy_per_cycle_override_j)
            std::printf(" energy_per_cycle_nj=%.3f", *p.energy_per_cycle_override_j * 1e9);
        if (p.voltage_v > 0)
            std::printf(" voltage_v=%g current_a=%g frequency_hz=%g", p.voltage_v, p.current_a,
                        p.frequency_hz);
        std::printf(" (%.3f nJ/cycle)\n", p.energy_per_cycle_j() * 1e9);
    };
    std::printf("built-in profiles:\n");
    for (const auto& p : lwbc::eval::builtin_profiles()) print(p);
    if (!path.empty()) {
        std::printf("profiles from %s:\n", path.c_str());
        for (const auto& p : lwbc::eval::load_profile_file(path)) print(p);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lightweight 64-bit block ciphers: tools, benchmarks and evaluation reports"};
    app.set_version_flag("--version", std::string(lwbc::kToolVersion));
    app.require_subcommand(1);

    std::string cipher, key_hex, block_hex;
    auto* enc = app.add_subcommand("encrypt", "Encrypt one block");
    enc->add_option("cipher", cipher)->required();
    enc->add_option("key-hex", key_hex)->required();
    enc->add_option("block-hex", block_hex)->required();
    auto* dec = app.add_subcommand("decrypt", "Decrypt one block");
    dec->add_option("cipher", cipher)->required();
    dec->add_option("key-hex", key_hex)->required();
    dec->add_option("block-hex", block_hex)->required();

    std::string kat_path;
    auto* kat = app.add_subcommand("kat", "Run a known-answer-test file");
    kat->add_option("file", kat_path, "KAT file")->required();

    BenchFlags bench_flags;
    std::string bench_cipher_name;
    auto* bench = app.add_subcommand("bench", "Benchmark block operations (CSV on stdout)");
    bench_flags.attach(bench);
    bench->add_option("--cipher", bench_cipher_name, "Limit to one cipher");

    std::string source = "reference";
    std::string profile_spec = "atmega128-paper";
    std::string profile_name;
    std::string format = "csv";
    BenchFlags report_bench_flags;
    auto* report = app.add_subcommand("report", "Emit the evaluation report");
    report->add_option("--source", source, "reference or host")->capture_default_str();
    report->add_option("--profile", profile_spec, "Built-in profile name or profile file")
        ->capture_default_str();
    report->add_option("--profile-name", profile_name, "Profile to pick from a multi-profile file");
    report->add_option("--format", format, "csv or markdown")->capture_default_str();
    report_bench_flags.attach(report);

    std::string metric = "energy";
    std::string rec_source = "reference";
    std::string rec_profile_spec = "atmega128-paper";
    std::string rec_profile_name;
    BenchFlags rec_bench_flags;
    auto* recommend = app.add_subcommand("recommend", "Rank the ciphers by a metric");
    recommend->add_option("--metric", metric, "energy, cycles, ram, flash or combined-memory")
        ->capture_default_str();
    recommend->add_option("--source", rec_source, "reference or host")->capture_default_str();
    recommend->add_option("--profile", rec_profile_spec, "Profile for energy")
        ->capture_default_str();
    recommend->add_option("--profile-name", rec_profile_name,
                          "Profile to pick from a multi-profile file");
    rec_bench_flags.attach(recommend);

    std::string profiles_path;
    auto* profiles = app.add_subcommand("profiles", "List device profiles");
    profiles->add_option("file", profiles_path, "Also list profiles from this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (enc->parsed()) return run_crypt(true, cipher, key_hex, block_hex);
        if (dec->parsed()) return run_crypt(false, cipher, key_hex, block_hex);
        if (kat->parsed()) return run_kat(kat_path);
        if (bench->parsed()) {
            auto cfg = bench_flags.config();
            std::vector<lwbc::bench::BenchResult> results;
            if (bench_cipher_name.empty()) {
                results = lwbc::bench::bench_all(cfg);
            } else {
                lwbc::CipherId id = parse_cipher(bench_cipher_name);
                std::array<std::uint8_t, 12> key_bytes{};
                for (unsigned i = 0; i < lwbc::cipher_key_bits(id) / 8; ++i)
                    key_bytes[i] = static_cast<std::uint8_t>(i * 0x11);
                lwbc::CipherKey key =
                    lwbc::CipherKey::from_bytes({key_bytes.data(), lwbc::cipher_key_bits(id) / 8});
                results.push_back(
                    lwbc::bench::bench_cipher(id, cfg, key, lwbc::parse_hex_block("0123456789abcdef")));
            }
            std::cout << lwbc::report::bench_csv(results);
            return kExitOk;
        }
        if (report->parsed()) {
            if (format != "csv" && format != "markdown")
                throw std::runtime_error("unknown format '" + format + "' (csv or markdown)");
            auto profile = resolve_profile(profile_spec, profile_name);
            lwbc::report::ReportBundle bundle;
            if (source == "reference")
                bundle = lwbc::report::build_reference_report(profile);
            else if (source == "host")
                bundle = lwbc::report::build_host_report(profile, report_bench_flags.config());
            else
                throw std::runtime_error("unknown source '" + source + "' (reference or host)");
            std::cout << (format == "csv" ? lwbc::report::to_csv(bundle)
                                          : lwbc::report::to_markdown(bundle));
            return kExitOk;
        }
        if (recommend->parsed())
            return run_recommend(metric, rec_source,
                                 resolve_profile(rec_profile_spec, rec_profile_name),
                                 rec_bench_flags);
        if (profiles->parsed()) return run_profiles(profiles_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
