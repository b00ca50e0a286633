#pragma once

#include <array>
#include <cstdint>

#include "lwbc/block.hpp"

namespace lwbc::klein {

// KLEIN-80: AES-like SPN over sixteen nibbles, 16 rounds.
inline constexpr unsigned kRounds = 16;
inline constexpr unsigned kKeyBits = 80;

// Involutive 4-bit S-box: kSbox[kSbox[x]] == x.
inline constexpr std::array<std::uint8_t, 16> kSbox = {
    0x7, 0x4, 0xa, 0x9, 0x1, 0xf, 0xb, 0x0,
    0xc, 0x3, 0x2, 0x6, 0x8, 0xe, 0xd, 0x5,
};

// State as eight bytes, most significant first; byte i packs canonical hex
// digits 2i and 2i+1.
using State = std::array<std::uint8_t, 8>;

State to_state(Block64 b);
Block64 from_state(const State& s);

/// Applies the S-box to all sixteen nibbles. Self-inverse.
State sub_nibbles(State s);

/// Rotates the eight-byte state left by two bytes (order-4 permutation).
State rotate_nibbles(State s);
State rotate_nibbles_inverse(State s);

/// Rijndael MixColumns over GF(2^8) mod x^8+x^4+x^3+x+1, applied to each
/// four-byte half. Linear and invertible.
State mix_nibbles(State s);
State mix_nibbles_inverse(State s);

struct KeySchedule {
    // 17 round keys: one per round plus the final key addition. Each is the
    // leftmost 64 bits of the evolving 80-bit key register.
    std::array<std::uint64_t, kRounds + 1> rk{};
};

KeySchedule expand_key(const CipherKey& key);

Block64 encrypt(const KeySchedule& ks, Block64 pt);
Block64 decrypt(const KeySchedule& ks, Block64 ct);

}
