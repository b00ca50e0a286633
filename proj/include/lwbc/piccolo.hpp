#pragma once

#include <array>
#include <cstdint>

#include "lwbc/block.hpp"

namespace lwbc::piccolo {

// Piccolo-80: generalized Feistel over four 16-bit branches, 25 rounds,
// whitening keys before the first and after the last round.
inline constexpr unsigned kRounds = 25;
inline constexpr unsigned kKeyBits = 80;
inline constexpr unsigned kRoundKeys = 50;
inline constexpr unsigned kWhiteningKeys = 4;

inline constexpr std::array<std::uint8_t, 16> kSbox = {
    0xe, 0x4, 0xb, 0x2, 0x3, 0x8, 0x0, 0x9,
    0x1, 0xa, 0x7, 0xf, 0x6, 0xc, 0x5, 0xd,
};

// Byte round-permutation: output byte i is input byte kBytePerm[i].
inline constexpr std::array<std::uint8_t, 8> kBytePerm = {2, 7, 4, 1, 6, 3, 0, 5};

/// Multiplication in GF(2^4) with reduction polynomial x^4 + x + 1.
std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b);

/// F: S-box layer, multiply by the circulant matrix (2,3,1,1) over GF(2^4),
/// S-box layer again. Bijective on 16-bit words.
std::uint16_t f(std::uint16_t w);

// Canonical hex digits 1-4 are X0, ..., 13-16 are X3.
struct State {
    std::array<std::uint16_t, 4> x{};

    friend constexpr bool operator==(const State&, const State&) = default;
};

State to_state(Block64 b);
Block64 from_state(const State& s);

/// X1 ^= F(X0) ^ rk_even; X3 ^= F(X2) ^ rk_odd; then the byte permutation
/// unless `last`.
State round_pair(State s, std::uint16_t rk_even, std::uint16_t rk_odd, bool last);
State round_pair_inverse(State s, std::uint16_t rk_even, std::uint16_t rk_odd, bool last);

/// con^80 round constants, generated from the 5-bit round counter layout
/// masked with 0f1e2d3c.
std::array<std::uint16_t, kRoundKeys> round_constants();

// Guard against transcription drift in the generated constants (XOR fold).
inline constexpr std::uint16_t kRoundConstantXor = 0x2e21;

struct KeySchedule {
    std::array<std::uint16_t, kRoundKeys> rk{};
    std::array<std::uint16_t, kWhiteningKeys> wk{};
};

KeySchedule expand_key(const CipherKey& key);

Block64 encrypt(const KeySchedule& ks, Block64 pt);
Block64 decrypt(const KeySchedule& ks, Block64 ct);

}
