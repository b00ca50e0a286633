#include "lwbc/klein.hpp"

#include <stdexcept>

namespace lwbc::klein {

namespace {

std::uint8_t xtime(std::uint8_t a) {
    return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0x00));
}

std::uint8_t gf256_mul(std::uint8_t a, std::uint8_t factor) {
    // factor is one of the fixed MixColumns coefficients (1,2,3,9,11,13,14).
    std::uint8_t r = 0;
    std::uint8_t p = a;
    while (factor) {
        if (factor & 1) r ^= p;
        p = xtime(p);
        factor >>= 1;
    }
    return r;
}

void mix_column(std::uint8_t c[4], const std::uint8_t m[4]) {
    // m holds the first row of the circulant coefficient matrix.
    std::uint8_t out[4];
    for (unsigned r = 0; r < 4; ++r) {
        out[r] = static_cast<std::uint8_t>(
            gf256_mul(c[0], m[(4 - r) % 4]) ^ gf256_mul(c[1], m[(5 - r) % 4]) ^
            gf256_mul(c[2], m[(6 - r) % 4]) ^ gf256_mul(c[3], m[(7 - r) % 4]));
    }
    for (unsigned r = 0; r < 4; ++r) c[r] = out[r];
}

State mix_with(State s, const std::uint8_t m[4]) {
    mix_column(s.data(), m);
    mix_column(s.data() + 4, m);
    return s;
}

std::uint8_t sub_byte(std::uint8_t b) {
    return static_cast<std::uint8_t>((kSbox[b >> 4] << 4) | kSbox[b & 0xf]);
}

// One key-schedule step: rotate both 5-byte halves left by a byte, cross the
// halves Feistel-style, XOR the round counter into the third byte of the new
// left half, and substitute the second and third bytes of the new right half.
void schedule_step(std::array<std::uint8_t, 10>& k, unsigned round) {
    std::array<std::uint8_t, 5> a, b;
    for (unsigned i = 0; i < 5; ++i) {
        a[i] = k[(i + 1) % 5];
        b[i] = k[5 + (i + 1) % 5];
    }
    for (unsigned i = 0; i < 5; ++i) {
        k[i] = b[i];
        k[5 + i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
    }
    k[2] ^= static_cast<std::uint8_t>(round);
    k[6] = sub_byte(k[6]);
    k[7] = sub_byte(k[7]);
}

std::uint64_t leftmost64(const std::array<std::uint8_t, 10>& k) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < 8; ++i) v = (v << 8) | k[i];
    return v;
}

State add_round_key(State s, std::uint64_t rk) {
    for (unsigned i = 0; i < 8; ++i)
        s[i] = static_cast<std::uint8_t>(s[i] ^ (rk >> (56 - 8 * i)));
    return s;
}

}  // namespace

State to_state(Block64 b) { return b.to_bytes(); }

Block64 from_state(const State& s) {
    return Block64::from_bytes(std::span<const std::uint8_t, 8>(s));
}

State sub_nibbles(State s) {
    for (auto& b : s) b = sub_byte(b);
    return s;
}

State rotate_nibbles(State s) {
    State out{};
    for (unsigned i = 0; i < 8; ++i) out[i] = s[(i + 2) % 8];
    return out;
}

State rotate_nibbles_inverse(State s) {
    State out{};
    for (unsigned i = 0; i < 8; ++i) out[i] = s[(i + 6) % 8];
    return out;
}

State mix_nibbles(State s) {
    static constexpr std::uint8_t kForward[4] = {0x02, 0x03, 0x01, 0x01};
    return mix_with(s, kForward);
}

State mix_nibbles_inverse(State s) {
    static constexpr std::uint8_t kInverse[4] = {0x0e, 0x0b, 0x0d, 0x09};
    return mix_with(s, kInverse);
}

KeySchedule expand_key(const CipherKey& key) {
    if (key.bits() != kKeyBits)
        throw std::invalid_argument("klein-80 requires an 80-bit key, got " +
                                    std::to_string(key.bits()) + " bits");
    std::array<std::uint8_t, 10> reg{};
    for (unsigned i = 0; i < 10; ++i) reg[i] = key.byte(i);

    KeySchedule ks;
    ks.rk[0] = leftmost64(reg);
    for (unsigned round = 1; round <= kRounds; ++round) {
        schedule_step(reg, round);
        ks.rk[round] = leftmost64(reg);
    }
    return ks;
}

Block64 encrypt(const KeySchedule& ks, Block64 pt) {
    State s = to_state(pt);
    for (unsigned round = 0; round < kRounds; ++round) {
        s = add_round_key(s, ks.rk[round]);
        s = sub_nibbles(s);
        s = rotate_nibbles(s);
        s = mix_nibbles(s);
    }
    s = add_round_key(s, ks.rk[kRounds]);
    return from_state(s);
}

Block64 decrypt(const KeySchedule& ks, Block64 ct) {
    State s = to_state(ct);
    s = add_round_key(s, ks.rk[kRounds]);
    for (unsigned round = kRounds; round-- > 0;) {
        s = mix_nibbles_inverse(s);
        s = rotate_nibbles_inverse(s);
        s = sub_nibbles(s);
        s = add_round_key(s, ks.rk[round]);
    }
    return from_state(s);
}

}
