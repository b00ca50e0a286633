#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lwbc/cipher.hpp"

namespace lwbc {

/// One known-answer vector. `source` records which design document or
/// appendix the vector came from and is mandatory.
struct KatVector {
    CipherId cipher{};
    CipherKey key;
    Block64 plaintext;
    Block64 ciphertext;
    std::string source;
};

struct KatOutcome {
    KatVector vector;
    Block64 computed_ciphertext;   // encrypt(key, plaintext)
    Block64 recovered_plaintext;   // decrypt(key, ciphertext)
    bool pass = false;
};

struct KatReport {
    std::vector<KatOutcome> outcomes;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

/// File format: one vector per line, `#` comments and blank lines allowed:
///   <cipher-name> <key-hex> <plaintext-hex> <ciphertext-hex> <provenance...>
/// Throws std::runtime_error naming the line on any malformed entry,
/// including an empty provenance field.
std::vector<KatVector> parse_kat_stream(std::istream& in);
std::vector<KatVector> load_kat_file(const std::string& path);

/// Runs every vector. Mismatches are data in the report, not errors.
KatReport run_kats(std::span<const KatVector> vectors);

}
