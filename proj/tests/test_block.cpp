#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lwbc/block.hpp"

using namespace lwbc;

TEST_CASE("block hex parsing basics") {
    CHECK(parse_hex_block("0000000000000000").value == 0);
    CHECK(parse_hex_block("ffffffffffffffff").value == 0xffffffffffffffffull);
    CHECK(parse_hex_block("0123456789abcdef").value == 0x0123456789abcdefull);
    CHECK(parse_hex_block("0123456789ABCDEF").value == 0x0123456789abcdefull);
    CHECK(parse_hex_block("0x0123456789abcdef").value == 0x0123456789abcdefull);

    // first digit is the most significant nibble
    Block64 b = parse_hex_block("0123456789abcdef");
    auto bytes = b.to_bytes();
    CHECK(bytes[0] == 0x01);
    CHECK(bytes[7] == 0xef);
}

TEST_CASE("block hex parse errors carry position") {
    CHECK_THROWS_WITH_AS(parse_hex_block("0123"), doctest::Contains("16 digits"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_hex_block("0123456789abcdefff"), doctest::Contains("16 digits"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_hex_block("0123456789abcdeg"), doctest::Contains("position 15"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_hex_block("0x0123456x89abcdef"), doctest::Contains("position 9"),
                         std::invalid_argument);
}

TEST_CASE("block hex round-trips") {
    std::mt19937_64 rng(0xb10c);
    for (int i = 0; i < 10000; ++i) {
        Block64 b{rng()};
        CHECK(parse_hex_block(format_hex_block(b)) == b);
    }
    CHECK(format_hex_block(Block64{0x0123456789abcdefull}) == "0123456789abcdef");
}

TEST_CASE("block word and nibble views agree") {
    Block64 b = parse_hex_block("0123456789abcdef");
    CHECK(b.hi32() == 0x01234567u);
    CHECK(b.lo32() == 0x89abcdefu);
    CHECK(b.word16(0) == 0x0123);
    CHECK(b.word16(3) == 0xcdef);
    CHECK(b.nibble(0) == 0x0);
    CHECK(b.nibble(15) == 0xf);
    CHECK(Block64::from_words(b.hi32(), b.lo32()) == b);
    CHECK(Block64::from_words16(0x0123, 0x4567, 0x89ab, 0xcdef) == b);
    auto nibbles = b.to_nibbles();
    CHECK(Block64::from_nibbles(nibbles) == b);
}

TEST_CASE("cipher key lengths are enforced") {
    CHECK(CipherKey::from_hex("00112233445566778899").bits() == 80);
    CHECK(CipherKey::from_hex("131211100b0a090803020100").bits() == 96);
    CHECK_THROWS_AS(CipherKey::from_hex("001122"), std::invalid_argument);
    CHECK_THROWS_AS(CipherKey::from_hex("00112233445566778899", 96), std::invalid_argument);
    CHECK_THROWS_AS(CipherKey::from_hex("131211100b0a090803020100", 80), std::invalid_argument);
    CHECK_THROWS_AS(CipherKey::from_hex("00112233445566778899", 64), std::invalid_argument);
    CHECK_THROWS_WITH_AS(CipherKey::from_hex("0011223344556677889z"),
                         doctest::Contains("position 19"), std::invalid_argument);
}

TEST_CASE("cipher key accessors") {
    CipherKey k = CipherKey::from_hex("00112233445566778899");
    CHECK(k.byte(0) == 0x00);
    CHECK(k.byte(9) == 0x99);
    CHECK(k.nibble(1) == 0x0);
    CHECK(k.nibble(2) == 0x1);
    CHECK(k.word16(0) == 0x0011);
    CHECK(k.word16(4) == 0x8899);
    CHECK(k.to_hex() == "00112233445566778899");

    CipherKey k96 = CipherKey::from_hex("131211100b0a090803020100");
    CHECK(k96.word32(0) == 0x13121110u);
    CHECK(k96.word32(2) == 0x03020100u);
    CHECK(k96.to_hex() == "131211100b0a090803020100");

    std::array<std::uint8_t, 10> bytes{};
    for (unsigned i = 0; i < 10; ++i) bytes[i] = std::uint8_t(i);
    CHECK(CipherKey::from_bytes(bytes).to_hex() == "00010203040506070809");
}
