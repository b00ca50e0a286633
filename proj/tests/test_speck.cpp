#include <doctest.h>

#include <bit>
#include <random>

#include "lwbc/speck.hpp"
#include "oracle.hpp"

using namespace lwbc;

namespace {

// Zero-key schedule recorded from the straight-line reference in oracle.cpp.
constexpr std::uint32_t kZeroKeySchedule[26] = {
    0x00000000, 0x00000000, 0x00000001, 0x0000000b, 0x01000050, 0x0c0002d4,
    0x74011471, 0x680db7fc, 0x794c071a, 0x3b7434f5, 0xef0cf10d, 0x6d998d7c,
    0x7d02513a, 0x780ac6e0, 0x914aa214, 0x4e8faac9, 0x119d911b, 0xf38ee31d,
    0xd883db1a, 0x5a1de541, 0x9f8df01d, 0xcb4473a2, 0xb8b04b7f, 0xc3652c99,
    0x366ea4b6, 0x2900a984,
};

}  // namespace

TEST_CASE("speck round zero cases") {
    CHECK(speck::round({0, 0}, 0) == speck::WordPair{0, 0});
    CHECK(speck::round({0, 0}, 0xffffffff) == speck::WordPair{0xffffffff, 0xffffffff});
}

TEST_CASE("speck round inverse undoes the round") {
    std::mt19937_64 rng(0x5bec);
    for (int i = 0; i < 10000; ++i) {
        speck::WordPair v{std::uint32_t(rng()), std::uint32_t(rng())};
        std::uint32_t k = std::uint32_t(rng());
        CHECK(speck::round_inverse(speck::round(v, k), k) == v);
    }
}

TEST_CASE("rotation identities") {
    std::mt19937_64 rng(0x401);
    for (int i = 0; i < 1000; ++i) {
        std::uint32_t v = std::uint32_t(rng());
        for (unsigned r : {1u, 2u, 3u, 8u}) CHECK(std::rotl(v, r) == std::rotr(v, 32 - r));
    }
}

TEST_CASE("speck zero-key schedule matches frozen oracle output") {
    auto ks = speck::expand_key(CipherKey::from_hex("000000000000000000000000"));
    CHECK(ks.rk[0] == 0);  // round key 0 is the initial key word
    for (unsigned i = 0; i < speck::kRounds; ++i) CHECK(ks.rk[i] == kZeroKeySchedule[i]);
}

TEST_CASE("speck schedule starts at the least significant key word") {
    auto ks = speck::expand_key(CipherKey::from_hex("131211100b0a090803020100"));
    CHECK(ks.rk[0] == 0x03020100u);
}

TEST_CASE("speck key length is enforced") {
    CHECK_THROWS_AS(speck::expand_key(CipherKey::from_hex("00112233445566778899")),
                    std::invalid_argument);
}

TEST_CASE("speck official test vector") {
    auto ks = speck::expand_key(CipherKey::from_hex("131211100b0a090803020100"));
    Block64 pt = parse_hex_block("74614620736e6165");
    Block64 ct = parse_hex_block("9f7952ec4175946c");
    CHECK(speck::encrypt(ks, pt) == ct);
    CHECK(speck::decrypt(ks, ct) == pt);
}

TEST_CASE("speck agrees with the straight-line reference") {
    std::mt19937_64 rng(0x5bec2);
    for (int i = 0; i < 2000; ++i) {
        std::uint8_t kb[12];
        for (auto& b : kb) b = std::uint8_t(rng());
        CipherKey key = CipherKey::from_bytes(kb);
        Block64 pt{rng()};
        std::uint8_t out[8];
        oracle::speck64_96_encrypt(kb, pt.to_bytes().data(), out);
        auto ks = speck::expand_key(key);
        CHECK(speck::encrypt(ks, pt) == Block64::from_bytes(std::span<const std::uint8_t, 8>(out)));
    }
}
