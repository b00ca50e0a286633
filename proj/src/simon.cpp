#include "lwbc/simon.hpp"

#include <bit>
#include <stdexcept>

namespace lwbc::simon {

namespace {

std::uint32_t feistel(std::uint32_t x) {
    return (std::rotl(x, 1) & std::rotl(x, 8)) ^ std::rotl(x, 2);
}

}  // namespace

WordPair round(WordPair v, std::uint32_t k) {
    return {v.y ^ feistel(v.x) ^ k, v.x};
}

WordPair round_inverse(WordPair v, std::uint32_t k) {
    return {v.y, v.x ^ feistel(v.y) ^ k};
}

KeySchedule expand_key(const CipherKey& key) {
    if (key.bits() != kKeyBits)
        throw std::invalid_argument("simon-64-96 requires a 96-bit key, got " +
                                    std::to_string(key.bits()) + " bits");
    KeySchedule ks;
    // Key hex w0 || w1 || w2 maps to (k2, k1, k0) = (w0, w1, w2).
    ks.rk[0] = key.word32(2);
    ks.rk[1] = key.word32(1);
    ks.rk[2] = key.word32(0);
    for (unsigned i = 0; i + kKeyWords < kRounds; ++i) {
        std::uint32_t t = std::rotr(ks.rk[i + 2], 3);
        t ^= std::rotr(t, 1);
        ks.rk[i + 3] = kConstantC ^ z_bit(i) ^ ks.rk[i] ^ t;
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
