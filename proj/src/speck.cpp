#include "lwbc/speck.hpp"

#include <bit>
#include <stdexcept>

namespace lwbc::speck {

WordPair round(WordPair v, std::uint32_t k) {
    v.x = (std::rotr(v.x, kAlpha) + v.y) ^ k;
    v.y = std::rotl(v.y, kBeta) ^ v.x;
    return v;
}

WordPair round_inverse(WordPair v, std::uint32_t k) {
    v.y = std::rotr(v.y ^ v.x, kBeta);
    v.x = std::rotl((v.x ^ k) - v.y, kAlpha);
    return v;
}

KeySchedule expand_key(const CipherKey& key) {
    if (key.bits() != kKeyBits)
        throw std::invalid_argument("speck-64-96 requires a 96-bit key, got " +
                                    std::to_string(key.bits()) + " bits");
    // Key hex w0 || w1 || w2 maps to (l1, l0, k0) = (w0, w1, w2).
    std::uint32_t k = key.word32(2);
    std::array<std::uint32_t, kKeyWords - 1> l = {key.word32(1), key.word32(0)};

    KeySchedule ks;
    for (unsigned i = 0; i < kRounds; ++i) {
        ks.rk[i] = k;
        if (i + 1 == kRounds) break;
        std::uint32_t next_l = (k + std::rotr(l[i % 2], kAlpha)) ^ i;
        k = std::rotl(k, kBeta) ^ next_l;
        l[i % 2] = next_l;
    }
    return ks;
}

Block64 encrypt(const KeySchedule& ks, Block64 pt) {
    WordPair v = from_block(pt);
    for (std::uint32_t k : ks.rk) v = round(v, k);
    return to_block(v);
}

Block64 decrypt(const KeySchedule& ks, Block64 ct) {
    WordPair v = from_block(ct);
    for (unsigned i = kRounds; i-- > 0;) v = round_inverse(v, ks.rk[i]);
    return to_block(v);
}

}
