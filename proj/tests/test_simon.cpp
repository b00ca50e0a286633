#include <doctest.h>

#include <bit>
#include <random>

#include "lwbc/simon.hpp"
#include "oracle.hpp"

using namespace lwbc;

namespace {

// Zero-key schedule recorded from the straight-line reference in oracle.cpp.
constexpr std::uint32_t kZeroKeySchedule[42] = {
    0x00000000, 0x00000000, 0x00000000, 0xfffffffd, 0x9ffffffc, 0xa5fffffd,
    0x6ee00001, 0x5b320001, 0x64d56000, 0x9bc805fc, 0xfe087f1c, 0xcb0b17ee,
    0x51e62982, 0x6ed52749, 0x8fc31e8e, 0x971d8447, 0x1ab8b079, 0xc2c07c7a,
    0x9c9673f3, 0xaf1ce6c4, 0xe22dd132, 0x110eeb3b, 0x83d22aed, 0x7595493d,
    0x971ae972, 0x07bf26a8, 0x0ae6a07e, 0x4917a887, 0x65f356cc, 0xbff80037,
    0x3ae8d77f, 0x8eff3ea9, 0xe937ebf4, 0x16a2ab42, 0x12bebe89, 0xa5b42830,
    0xf7b0933b, 0x2ccc5a20, 0x5d1e992a, 0xe63d5670, 0xc197da75, 0x46cae03f,
};

}  // namespace

TEST_CASE("simon round zero cases") {
    CHECK(simon::round({0, 0}, 0) == simon::WordPair{0, 0});
    // with x = 0 the nonlinear term vanishes and the halves just swap
    std::mt19937_64 rng(0x5140);
    for (int i = 0; i < 100; ++i) {
        std::uint32_t y = std::uint32_t(rng());
        CHECK(simon::round({0, y}, 0) == simon::WordPair{y, 0});
    }
}

TEST_CASE("simon double-round swap involution") {
    // round, swap, round, swap returns the input
    std::mt19937_64 rng(0x5141);
    for (int i = 0; i < 10000; ++i) {
        simon::WordPair v{std::uint32_t(rng()), std::uint32_t(rng())};
        std::uint32_t k = std::uint32_t(rng());
        simon::WordPair w = simon::round(v, k);
        w = simon::round({w.y, w.x}, k);
        CHECK(simon::WordPair{w.y, w.x} == v);
        CHECK(simon::round_inverse(simon::round(v, k), k) == v);
    }
}

TEST_CASE("simon z sequence checksum") {
    unsigned ones = 0;
    for (unsigned i = 0; i < simon::kZPeriod; ++i) ones += simon::z_bit(i);
    CHECK(ones == 31);
    CHECK(simon::z_bit(0) == 1);
    CHECK(simon::z_bit(1) == 0);
    CHECK(simon::z_bit(61) == 1);
    CHECK(simon::z_bit(62) == simon::z_bit(0));  // period wrap
    CHECK(simon::kConstantC == 0xfffffffcu);
}

TEST_CASE("simon zero-key schedule matches frozen oracle output") {
    auto ks = simon::expand_key(CipherKey::from_hex("000000000000000000000000"));
    CHECK(ks.rk[3] == (simon::kConstantC ^ simon::z_bit(0)));  // all key terms vanish
    for (unsigned i = 0; i < simon::kRounds; ++i) CHECK(ks.rk[i] == kZeroKeySchedule[i]);
}

TEST_CASE("simon schedule starts with the key words") {
    auto ks = simon::expand_key(CipherKey::from_hex("131211100b0a090803020100"));
    CHECK(ks.rk[0] == 0x03020100u);
    CHECK(ks.rk[1] == 0x0b0a0908u);
    CHECK(ks.rk[2] == 0x13121110u);
}

TEST_CASE("simon key length is enforced") {
    CHECK_THROWS_AS(simon::expand_key(CipherKey::from_hex("00112233445566778899")),
                    std::invalid_argument);
}

TEST_CASE("simon official test vector") {
    auto ks = simon::expand_key(CipherKey::from_hex("131211100b0a090803020100"));
    Block64 pt = parse_hex_block("6f7220676e696c63");
    Block64 ct = parse_hex_block("5ca2e27f111a8fc8");
    CHECK(simon::encrypt(ks, pt) == ct);
    CHECK(simon::decrypt(ks, ct) == pt);
}

TEST_CASE("simon agrees with the straight-line reference") {
    std::mt19937_64 rng(0x5142);
    for (int i = 0; i < 2000; ++i) {
        std::uint8_t kb[12];
        for (auto& b : kb) b = std::uint8_t(rng());
        CipherKey key = CipherKey::from_bytes(kb);
        Block64 pt{rng()};
        std::uint8_t out[8];
        oracle::simon64_96_encrypt(kb, pt.to_bytes().data(), out);
        auto ks = simon::expand_key(key);
        CHECK(simon::encrypt(ks, pt) == Block64::from_bytes(std::span<const std::uint8_t, 8>(out)));
    }
}
