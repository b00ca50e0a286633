#include "lwbc/kat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lwbc {

namespace {

std::runtime_error line_error(std::size_t line, const std::string& what) {
    return std::runtime_error("kat file line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::size_t KatReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.pass; }));
}

std::size_t KatReport::failed() const { return outcomes.size() - passed(); }

std::vector<KatVector> parse_kat_stream(std::istream& in) {
    std::vector<KatVector> vectors;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (auto pos = sv.find('#'); pos != std::string_view::npos) sv = sv.substr(0, pos);
        std::istringstream fields{std::string(sv)};
        std::string name, key_hex, pt_hex, ct_hex;
        if (!(fields >> name)) continue;  // blank or comment-only line
        if (!(fields >> key_hex >> pt_hex >> ct_hex))
            throw line_error(lineno, "expected <cipher> <key> <plaintext> <ciphertext> <provenance>");

        auto id = cipher_from_name(name);
        if (!id) throw line_error(lineno, "unknown cipher '" + name + "'");

        KatVector v;
        v.cipher = *id;
        try {
            v.key = CipherKey::from_hex(key_hex, cipher_key_bits(*id));
            v.plaintext = parse_hex_block(pt_hex);
            v.ciphertext = parse_hex_block(ct_hex);
        } catch (const std::invalid_argument& e) {
            throw line_error(lineno, e.what());
        }

        std::string provenance;
        std::getline(fields, provenance);
        auto first = provenance.find_first_not_of(" \t");
        auto last = provenance.find_last_not_of(" \t\r");
        v.source = (first == std::string::npos)
                       ? std::string{}
                       : provenance.substr(first, last - first + 1);
        if (v.source.empty()) throw line_error(lineno, "missing provenance");

        vectors.push_back(std::move(v));
    }
    return vectors;
}

std::vector<KatVector> load_kat_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open kat file: " + path);
    return parse_kat_stream(in);
}

KatReport run_kats(std::span<const KatVector> vectors) {
    KatReport report;
    report.outcomes.reserve(vectors.size());
    for (const KatVector& v : vectors) {
        RoundKeySchedule schedule = expand_key(v.cipher, v.key);
        KatOutcome o;
        o.vector = v;
        o.computed_ciphertext = encrypt_block(v.cipher, schedule, v.plaintext);
        o.recovered_plaintext = decrypt_block(v.cipher, schedule, v.ciphertext);
        o.pass = o.computed_ciphertext == v.ciphertext && o.recovered_plaintext == v.plaintext;
        report.outcomes.push_back(std::move(o));
    }
    return report;
}

}
