#pragma once

#include <array>
#include <cstdint>

#include "lwbc/block.hpp"

namespace lwbc::twine {

// TWINE-80: generalized Feistel over sixteen 4-bit branches, 36 rounds.
inline constexpr unsigned kRounds = 36;
inline constexpr unsigned kKeyBits = 80;
inline constexpr unsigned kScheduleSteps = 35;

// State nibble Xi is canonical hex digit i.
using NibbleState = std::array<std::uint8_t, 16>;

inline constexpr std::array<std::uint8_t, 16> kSbox = {
    0xc, 0x0, 0xf, 0xa, 0x2, 0xb, 0x9, 0x5,
    0x8, 0x3, 0xd, 0x7, 0x1, 0xe, 0x6, 0x4,
};

// Branch shuffle: nibble at position h moves to position kShuffle[h].
// Even positions map to odd ones and vice versa.
inline constexpr std::array<std::uint8_t, 16> kShuffle = {
    5, 0, 1, 4, 7, 12, 3, 8, 13, 6, 9, 2, 15, 10, 11, 14,
};

/// 6-bit key-schedule constants generated by the GF(2^6) recurrence
/// (multiplication by x modulo x^6 + x + 1, starting from 1).
std::array<std::uint8_t, kScheduleSteps> round_constants();

// Guard against transcription drift in the generated constants.
inline constexpr unsigned kRoundConstantSum = 888;

struct KeySchedule {
    // Eight 4-bit subkeys per round, packed most significant nibble first.
    std::array<std::uint32_t, kRounds> rk{};
};

NibbleState to_state(Block64 b);
Block64 from_state(const NibbleState& s);

/// One round: X[2i+1] ^= S[X[2i] ^ RK[i]] for i = 0..7, then the branch
/// shuffle unless `last`. The S-box layer is an involution on the state, so
/// decryption reuses it and only the shuffle needs inverting.
NibbleState round(const NibbleState& s, std::uint32_t rk, bool last);
NibbleState round_inverse(const NibbleState& s, std::uint32_t rk, bool last);

KeySchedule expand_key(const CipherKey& key);

Block64 encrypt(const KeySchedule& ks, Block64 pt);
Block64 decrypt(const KeySchedule& ks, Block64 ct);

}
