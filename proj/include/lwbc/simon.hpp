#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "lwbc/block.hpp"

namespace lwbc::simon {

// SIMON-64/96: 32-bit words, three key words, 42 rounds.
inline constexpr unsigned kWordBits = 32;
inline constexpr unsigned kKeyWords = 3;
inline constexpr unsigned kRounds = 42;
inline constexpr unsigned kKeyBits = 96;
inline constexpr std::uint32_t kConstantC = 0xfffffffc;  // 2^32 - 4
inline constexpr unsigned kZPeriod = 62;

namespace detail {
constexpr std::uint64_t pack_bits_lsb_first(std::string_view bits) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') v |= std::uint64_t{1} << i;
    return v;
}
}

// Period-62 z sequence for the 64/96 parameter set; entry i is bit i.
inline constexpr std::uint64_t kZ =
    detail::pack_bits_lsb_first("10101111011100000011010010011000101000010001111110010110110011");

constexpr unsigned z_bit(unsigned i) {
    return static_cast<unsigned>((kZ >> (i % kZPeriod)) & 1);
}

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

// (x, y) <- (y ^ (x<<<1 & x<<<8) ^ (x<<<2) ^ k, x)
WordPair round(WordPair v, std::uint32_t k);
WordPair round_inverse(WordPair v, std::uint32_t k);

/// Expands a 96-bit key; rk[0..2] are the key words, least significant first.
KeySchedule expand_key(const CipherKey& key);

Block64 encrypt(const KeySchedule& ks, Block64 pt);
Block64 decrypt(const KeySchedule& ks, Block64 ct);

}
