#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lwbc/cipher.hpp"

namespace lwbc::bench {

enum class Workload { EncryptOnly, ExpandEncrypt, DecryptOnly };

std::string_view workload_name(Workload w);
std::optional<Workload> workload_from_name(std::string_view name);

struct BenchConfig {
    std::uint64_t warmup_iterations = 1000;
    std::uint64_t measured_iterations = 100000;
    unsigned repetitions = 9;  // odd, median taken
    Workload workload = Workload::EncryptOnly;

    /// Throws std::invalid_argument unless all counts are >= 1 and
    /// repetitions is odd.
    void validate() const;
};

struct BenchResult {
    CipherId cipher{};
    Workload workload = Workload::EncryptOnly;
    double ns_per_block = 0;  // median over repetitions
    // Present only when a hardware cycle counter (TSC) is available.
    std::optional<double> cycles_per_block;
    double blocks_per_second = 0;
    double min_ns = 0;
    double max_ns = 0;
    // Final block of the serial dependency chain, already verified against an
    // independently computed iterate.
    Block64 chained_output;
};

/// True when cycles_per_block will be populated on this platform.
bool cycle_counter_available();

/// Median of an odd-length sample set; invariant under sample order.
double median_of(std::vector<double> samples);

/// Recomputes the n-fold chained workload with a plain loop; used to check
/// that the timed loop really did the work.
Block64 chained_iterate(CipherId cipher, const CipherKey& key, Block64 pt, std::uint64_t n,
                        Workload workload = Workload::EncryptOnly);

/// Times the workload: warmup, then `repetitions` timed runs of
/// `measured_iterations` chained block operations; reports the median with
/// min/max dispersion. Throws std::runtime_error if the chained output fails
/// its oracle check or if called re-entrantly (the harness is strictly
/// single-threaded).
BenchResult bench_cipher(CipherId cipher, const BenchConfig& cfg, const CipherKey& key,
                         Block64 pt);

/// All five ciphers in registry order, with fixed key material (byte i of
/// each key is i * 0x11) and a fixed shared plaintext.
std::vector<BenchResult> bench_all(const BenchConfig& cfg);

}
