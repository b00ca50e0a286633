#pragma once

#include <array>
#include <cstdint>

#include "lwbc/block.hpp"

namespace lwbc::speck {

// SPECK-64/96: 32-bit words, three key words, 26 rounds, rotations 8 / 3.
inline constexpr unsigned kWordBits = 32;
inline constexpr unsigned kKeyWords = 3;
inline constexpr unsigned kRounds = 26;
inline constexpr unsigned kAlpha = 8;
inline constexpr unsigned kBeta = 3;
inline constexpr unsigned kKeyBits = 96;

// Block = x || y, x being the most significant 32 bits of the canonical form.
struct WordPair {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend constexpr bool operator==(const WordPair&, const WordPair&) = default;
};

constexpr WordPair from_block(Block64 b) { return {b.hi32(), b.lo32()}; }
constexpr Block64 to_block(WordPair v) { return Block64::from_words(v.x, v.y); }

struct KeySchedule {
    std::array<std::uint32_t, kRounds> rk{};
};

// x <- (x >>> 8) + y ^ k ; y <- (y <<< 3) ^ x. Addition wraps mod 2^32.
WordPair round(WordPair v, std::uint32_t k);
WordPair round_inverse(WordPair v, std::uint32_t k);

/// Expands a 96-bit key; rk[0] is the least significant key word.
KeySchedule expand_key(const CipherKey& key);

Block64 encrypt(const KeySchedule& ks, Block64 pt);
Block64 decrypt(const KeySchedule& ks, Block64 ct);

}
