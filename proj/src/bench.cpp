#include "lwbc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#define LWBC_HAVE_TSC 1
#endif

#if defined(__linux__)
#include <sched.h>
#endif

namespace lwbc::bench {

namespace {

std::atomic<bool> g_in_progress{false};

// The harness is a documented single-thread-of-control contract; trip loudly
// instead of producing garbage timings.
class ReentryGuard {
public:
    ReentryGuard() {
        if (g_in_progress.exchange(true))
            throw std::runtime_error("bench_cipher re-entered; the harness is single-threaded");
    }
    ~ReentryGuard() { g_in_progress.store(false); }
    ReentryGuard(const ReentryGuard&) = delete;
    ReentryGuard& operator=(const ReentryGuard&) = delete;
};

void try_pin_cpu_once() {
#if defined(__linux__)
    static const bool done = [] {
        cpu_set_t set;
        CPU_ZERO(&set);
        int cpu = sched_getcpu();
        if (cpu < 0) cpu = 0;
        CPU_SET(cpu, &set);
        if (sched_setaffinity(0, sizeof(set), &set) != 0)
            std::fprintf(stderr, "warning: could not pin benchmark thread to one cpu\n");
        return true;
    }();
    (void)done;
#endif
}

std::uint64_t read_tsc() {
#if defined(LWBC_HAVE_TSC)
    return __rdtsc();
#else
    return 0;
#endif
}

Block64 apply(CipherId cipher, Workload w, const RoundKeySchedule& schedule,
              const CipherKey& key, Block64 b) {
    switch (w) {
        case Workload::EncryptOnly:
            return encrypt_block(cipher, schedule, b);
        case Workload::DecryptOnly:
            return decrypt_block(cipher, schedule, b);
        case Workload::ExpandEncrypt: {
            RoundKeySchedule fresh = expand_key(cipher, key);
            return encrypt_block(cipher, fresh, b);
        }
    }
    throw std::invalid_argument("unknown workload");
}

}  // namespace

double median_of(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("median of empty sample set");
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

std::string_view workload_name(Workload w) {
    switch (w) {
        case Workload::EncryptOnly: return "encrypt-only";
        case Workload::ExpandEncrypt: return "expand+encrypt";
        case Workload::DecryptOnly: return "decrypt-only";
    }
    return "?";
}

std::optional<Workload> workload_from_name(std::string_view name) {
    for (Workload w : {Workload::EncryptOnly, Workload::ExpandEncrypt, Workload::DecryptOnly})
        if (workload_name(w) == name) return w;
    return std::nullopt;
}

void BenchConfig::validate() const {
    if (warmup_iterations < 1 || measured_iterations < 1 || repetitions < 1)
        throw std::invalid_argument("bench config counts must all be >= 1");
    if (repetitions % 2 == 0)
        throw std::invalid_argument("bench repetitions must be odd so the median is well-defined");
}

bool cycle_counter_available() {
#if defined(LWBC_HAVE_TSC)
    return true;
#else
    return false;
#endif
}

Block64 chained_iterate(CipherId cipher, const CipherKey& key, Block64 pt, std::uint64_t n,
                        Workload workload) {
    RoundKeySchedule schedule = expand_key(cipher, key);
    Block64 b = pt;
    for (std::uint64_t i = 0; i < n; ++i) b = apply(cipher, workload, schedule, key, b);
    return b;
}

BenchResult bench_cipher(CipherId cipher, const BenchConfig& cfg, const CipherKey& key,
                         Block64 pt) {
    cfg.validate();
    if (key.bits() != cipher_key_bits(cipher))
        throw std::invalid_argument("bench key length does not match cipher");
    ReentryGuard guard;
    try_pin_cpu_once();

    RoundKeySchedule schedule = expand_key(cipher, key);

    Block64 b = pt;
    for (std::uint64_t i = 0; i < cfg.warmup_iterations; ++i)
        b = apply(cipher, cfg.workload, schedule, key, b);

    std::vector<double> ns_samples;
    std::vector<double> cycle_samples;
    ns_samples.reserve(cfg.repetitions);
    Block64 chained = pt;
    for (unsigned rep = 0; rep < cfg.repetitions; ++rep) {
        // Every repetition restarts the chain from pt so all repetitions time
        // the identical sequence of block operations.
        Block64 c = pt;
        std::uint64_t tsc0 = read_tsc();
        auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t i = 0; i < cfg.measured_iterations; ++i)
            c = apply(cipher, cfg.workload, schedule, key, c);
        auto t1 = std::chrono::steady_clock::now();
        std::uint64_t tsc1 = read_tsc();

        double ns = std::chrono::duration<double, std::nano>(t1 - t0).count() /
                    static_cast<double>(cfg.measured_iterations);
        if (ns <= 0) throw std::runtime_error("timer failure: non-positive elapsed time");
        ns_samples.push_back(ns);
        if (cycle_counter_available())
            cycle_samples.push_back(static_cast<double>(tsc1 - tsc0) /
                                    static_cast<double>(cfg.measured_iterations));
        chained = c;
    }

    if (chained != chained_iterate(cipher, key, pt, cfg.measured_iterations, cfg.workload))
        throw std::runtime_error("benchmark chained-output check failed for " +
                                 std::string(cipher_name(cipher)));

    BenchResult res;
    res.cipher = cipher;
    res.workload = cfg.workload;
    res.ns_per_block = median_of(ns_samples);
    res.min_ns = *std::min_element(ns_samples.begin(), ns_samples.end());
    res.max_ns = *std::max_element(ns_samples.begin(), ns_samples.end());
    res.blocks_per_second = 1e9 / res.ns_per_block;
    if (!cycle_samples.empty()) res.cycles_per_block = median_of(cycle_samples);
    res.chained_output = chained;
    return res;
}

std::vector<BenchResult> bench_all(const BenchConfig& cfg) {
    cfg.validate();
    const Block64 pt = parse_hex_block("0123456789abcdef");
    std::vector<BenchResult> results;
    results.reserve(all_ciphers().size());
    for (const CipherInfo& ci : all_ciphers()) {
        std::array<std::uint8_t, 12> key_bytes{};
        for (unsigned i = 0; i < ci.key_bits / 8; ++i)
            key_bytes[i] = static_cast<std::uint8_t>(i * 0x11);
        CipherKey key = CipherKey::from_bytes({key_bytes.data(), ci.key_bits / 8});
        results.push_back(bench_cipher(ci.id, cfg, key, pt));
    }
    return results;
}

}
