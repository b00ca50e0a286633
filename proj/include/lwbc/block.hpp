#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lwbc {

/// One 64-bit cipher block. The canonical text form is exactly 16 lowercase
/// hex digits, most significant nibble first.
struct Block64 {
    std::uint64_t value = 0;

    friend constexpr bool operator==(const Block64&, const Block64&) = default;

    // byte 0 / nibble 0 = most significant
    constexpr std::uint8_t byte(unsigned i) const {
        return static_cast<std::uint8_t>(value >> (56 - 8 * i));
    }
    constexpr std::uint8_t nibble(unsigned i) const {
        return static_cast<std::uint8_t>((value >> (60 - 4 * i)) & 0xf);
    }
    constexpr std::uint32_t hi32() const { return static_cast<std::uint32_t>(value >> 32); }
    constexpr std::uint32_t lo32() const { return static_cast<std::uint32_t>(value); }
    constexpr std::uint16_t word16(unsigned i) const {
        return static_cast<std::uint16_t>(value >> (48 - 16 * i));
    }

    static constexpr Block64 from_words(std::uint32_t hi, std::uint32_t lo) {
        return Block64{(std::uint64_t{hi} << 32) | lo};
    }
    static constexpr Block64 from_words16(std::uint16_t w0, std::uint16_t w1,
                                          std::uint16_t w2, std::uint16_t w3) {
        return Block64{(std::uint64_t{w0} << 48) | (std::uint64_t{w1} << 32) |
                       (std::uint64_t{w2} << 16) | w3};
    }
    static Block64 from_bytes(std::span<const std::uint8_t, 8> bytes);
    static Block64 from_nibbles(std::span<const std::uint8_t, 16> nibbles);

    std::array<std::uint8_t, 8> to_bytes() const;
    std::array<std::uint8_t, 16> to_nibbles() const;
};

/// Parses 16 hex digits (case-insensitive, optional "0x" prefix) into a block.
/// Throws std::invalid_argument naming the offending position.
Block64 parse_hex_block(std::string_view text);

/// Canonical form: 16 lowercase hex digits, most significant nibble first.
std::string format_hex_block(Block64 b);

/// 80- or 96-bit key material, length-tagged. Keys are accepted only at
/// exactly the requested length; there is no padding or truncation.
class CipherKey {
public:
    CipherKey() = default;

    /// Length inferred from the digit count (20 -> 80-bit, 24 -> 96-bit).
    static CipherKey from_hex(std::string_view hex);
    /// Rejects any digit count other than expect_bits / 4.
    static CipherKey from_hex(std::string_view hex, unsigned expect_bits);
    static CipherKey from_bytes(std::span<const std::uint8_t> bytes);

    unsigned bits() const { return bits_; }
    std::size_t size_bytes() const { return bits_ / 8; }
    std::span<const std::uint8_t> bytes() const { return {bytes_.data(), size_bytes()}; }

    // byte/nibble/word 0 = most significant, matching the hex form
    std::uint8_t byte(unsigned i) const { return bytes_[i]; }
    std::uint8_t nibble(unsigned i) const {
        return (i % 2 == 0) ? bytes_[i / 2] >> 4 : bytes_[i / 2] & 0xf;
    }
    std::uint16_t word16(unsigned i) const {
        return static_cast<std::uint16_t>((bytes_[2 * i] << 8) | bytes_[2 * i + 1]);
    }
    std::uint32_t word32(unsigned i) const {
        return (std::uint32_t{bytes_[4 * i]} << 24) | (std::uint32_t{bytes_[4 * i + 1]} << 16) |
               (std::uint32_t{bytes_[4 * i + 2]} << 8) | bytes_[4 * i + 3];
    }

    std::string to_hex() const;

    friend bool operator==(const CipherKey&, const CipherKey&) = default;

private:
    std::array<std::uint8_t, 12> bytes_{};
    unsigned bits_ = 0;
};

}
