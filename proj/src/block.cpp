#include "lwbc/block.hpp"

#include <stdexcept>

namespace lwbc {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

char hex_digit(unsigned v) { return "0123456789abcdef"[v & 0xf]; }

// Parses exactly `digits.size()` hex digits into nibble values. `offset` is
// the position of digits[0] in the original text, used in error messages.
void parse_digits(std::string_view digits, std::size_t offset, std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        int v = hex_value(digits[i]);
        if (v < 0)
            throw std::invalid_argument("invalid hex digit '" + std::string(1, digits[i]) +
                                        "' at position " + std::to_string(offset + i));
        out[i] = static_cast<std::uint8_t>(v);
    }
}

std::string_view strip_0x(std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        return text.substr(2);
    return text;
}

}  // namespace

Block64 Block64::from_bytes(std::span<const std::uint8_t, 8> bytes) {
    std::uint64_t v = 0;
    for (std::uint8_t b : bytes) v = (v << 8) | b;
    return Block64{v};
}

Block64 Block64::from_nibbles(std::span<const std::uint8_t, 16> nibbles) {
    std::uint64_t v = 0;
    for (std::uint8_t n : nibbles) v = (v << 4) | (n & 0xf);
    return Block64{v};
}

std::array<std::uint8_t, 8> Block64::to_bytes() const {
    std::array<std::uint8_t, 8> out{};
    for (unsigned i = 0; i < 8; ++i) out[i] = byte(i);
    return out;
}

std::array<std::uint8_t, 16> Block64::to_nibbles() const {
    std::array<std::uint8_t, 16> out{};
    for (unsigned i = 0; i < 16; ++i) out[i] = nibble(i);
    return out;
}

Block64 parse_hex_block(std::string_view text) {
    std::string_view digits = strip_0x(text);
    if (digits.size() != 16)
        throw std::invalid_argument("block hex must be exactly 16 digits, got " +
                                    std::to_string(digits.size()));
    std::array<std::uint8_t, 16> nibbles{};
    parse_digits(digits, text.size() - digits.size(), nibbles);
    return Block64::from_nibbles(nibbles);
}

std::string format_hex_block(Block64 b) {
    std::string out(16, '0');
    for (unsigned i = 0; i < 16; ++i) out[i] = hex_digit(b.nibble(i));
    return out;
}

CipherKey CipherKey::from_hex(std::string_view hex) {
    std::string_view digits = strip_0x(hex);
    if (digits.size() != 20 && digits.size() != 24)
        throw std::invalid_argument("key hex must be 20 digits (80-bit) or 24 digits (96-bit), got " +
                                    std::to_string(digits.size()));
    return from_hex(hex, static_cast<unsigned>(digits.size()) * 4);
}

CipherKey CipherKey::from_hex(std::string_view hex, unsigned expect_bits) {
    if (expect_bits != 80 && expect_bits != 96)
        throw std::invalid_argument("unsupported key length: " + std::to_string(expect_bits) +
                                    " bits");
    std::string_view digits = strip_0x(hex);
    if (digits.size() != expect_bits / 4)
        throw std::invalid_argument("key hex must be " + std::to_string(expect_bits / 4) +
                                    " digits for a " + std::to_string(expect_bits) +
                                    "-bit key, got " + std::to_string(digits.size()));
    std::array<std::uint8_t, 24> nibbles{};
    parse_digits(digits, hex.size() - digits.size(),
                 std::span<std::uint8_t>(nibbles.data(), digits.size()));
    CipherKey key;
    key.bits_ = expect_bits;
    for (std::size_t i = 0; i < digits.size() / 2; ++i)
        key.bytes_[i] = static_cast<std::uint8_t>((nibbles[2 * i] << 4) | nibbles[2 * i + 1]);
    return key;
}

CipherKey CipherKey::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != 10 && bytes.size() != 12)
        throw std::invalid_argument("key must be 10 or 12 bytes, got " +
                                    std::to_string(bytes.size()));
    CipherKey key;
    key.bits_ = static_cast<unsigned>(bytes.size()) * 8;
    for (std::size_t i = 0; i < bytes.size(); ++i) key.bytes_[i] = bytes[i];
    return key;
}

std::string CipherKey::to_hex() const {
    std::string out;
    out.reserve(bits_ / 4);
    for (unsigned i = 0; i < bits_ / 4; ++i) out.push_back(hex_digit(nibble(i)));
    return out;
}

}
