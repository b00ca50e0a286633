#include <doctest.h>

#include <algorithm>
#include <random>

#include "lwbc/twine.hpp"
#include "oracle.hpp"

using namespace lwbc;

namespace {

// Zero-key schedule recorded from the straight-line reference in oracle.cpp.
constexpr std::uint32_t kZeroKeySchedule[36] = {
    0x00000000, 0x0000001c, 0x00000021, 0x00000080, 0x00c0001c, 0x00100001,
    0x0c0000ce, 0x01c000e0, 0x00100c79, 0x0de0012c, 0x0d0c000f, 0x01910d24,
    0x06c00dc2, 0x00fdc117, 0x034d169a, 0x0e21007d, 0xc476d3a3, 0x1ba0dead,
    0x03d314af, 0xdb3e6ba2, 0xd9d4032e, 0x1dfb3bdc, 0x6d23e9f6, 0x04eb4de0,
    0x38c9bdf7, 0xed6d34ac, 0x4a0db80d, 0xbf749de1, 0x3bc8da1d, 0xb3dddfa6,
    0x991a4b74, 0xd7df831b, 0xde6bd917, 0x4643a720, 0x83b9fe8e, 0xd577b670,
};

const CipherKey kKatKey = CipherKey::from_hex("00112233445566778899");
const Block64 kKatPt = parse_hex_block("0123456789abcdef");
const Block64 kKatCt = parse_hex_block("7c1f0f80b1df9c28");

}  // namespace

TEST_CASE("twine sbox and shuffle are bijections") {
    auto sorted_sbox = twine::kSbox;
    std::sort(sorted_sbox.begin(), sorted_sbox.end());
    auto sorted_perm = twine::kShuffle;
    std::sort(sorted_perm.begin(), sorted_perm.end());
    for (unsigned i = 0; i < 16; ++i) {
        CHECK(sorted_sbox[i] == i);
        CHECK(sorted_perm[i] == i);
    }
}

TEST_CASE("twine shuffle swaps parity classes") {
    // every even position maps to an odd one and vice versa
    for (unsigned h = 0; h < 16; ++h) CHECK((h + twine::kShuffle[h]) % 2 == 1);
}

TEST_CASE("twine round constants match the published table") {
    // literal table transcribed in oracle.cpp vs the generated recurrence
    static constexpr std::uint8_t kLiteral[35] = {
        0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x03, 0x06, 0x0c, 0x18, 0x30, 0x23,
        0x05, 0x0a, 0x14, 0x28, 0x13, 0x26, 0x0f, 0x1e, 0x3c, 0x3b, 0x35, 0x29,
        0x11, 0x22, 0x07, 0x0e, 0x1c, 0x38, 0x33, 0x25, 0x09, 0x12, 0x24};
    auto generated = twine::round_constants();
    unsigned sum = 0;
    for (unsigned i = 0; i < twine::kScheduleSteps; ++i) {
        CHECK(generated[i] == kLiteral[i]);
        sum += generated[i];
    }
    CHECK(sum == twine::kRoundConstantSum);
}

TEST_CASE("twine round on the zero state") {
    twine::NibbleState zero{};
    auto out = twine::round(zero, 0, /*last=*/true);
    for (unsigned i = 0; i < 16; ++i) {
        if (i % 2 == 0)
            CHECK(out[i] == 0);
        else
            CHECK(out[i] == twine::kSbox[0]);
    }
}

TEST_CASE("twine round inverse undoes the round") {
    std::mt19937_64 rng(0x791e);
    for (int i = 0; i < 10000; ++i) {
        twine::NibbleState s{};
        for (auto& n : s) n = rng() & 0xf;
        std::uint32_t rk = std::uint32_t(rng());
        bool last = rng() & 1;
        CHECK(twine::round_inverse(twine::round(s, rk, last), rk, last) == s);
    }
}

TEST_CASE("twine round-1 state of the official vector") {
    // recorded from the stepwise straight-line reference
    auto ks = twine::expand_key(kKatKey);
    auto s1 = twine::round(twine::to_state(kKatPt), ks.rk[0], false);
    CHECK(twine::from_state(s1) == parse_hex_block("d25690f4caaec86c"));

    std::uint8_t kb[10], pb[8];
    for (unsigned i = 0; i < 10; ++i) kb[i] = kKatKey.byte(i);
    auto pt_bytes = kKatPt.to_bytes();
    std::copy(pt_bytes.begin(), pt_bytes.end(), pb);
    auto oracle_state = oracle::twine_round1_state(kb, pb);
    CHECK(s1 == oracle_state);
}

TEST_CASE("twine zero-key schedule matches frozen oracle output") {
    auto ks = twine::expand_key(CipherKey::from_hex("00000000000000000000"));
    for (unsigned r = 0; r < twine::kRounds; ++r) CHECK(ks.rk[r] == kZeroKeySchedule[r]);

    auto again = twine::expand_key(CipherKey::from_hex("00000000000000000000"));
    CHECK(again.rk == ks.rk);  // deterministic
}

TEST_CASE("twine key length is enforced") {
    CHECK_THROWS_AS(twine::expand_key(CipherKey::from_hex("131211100b0a090803020100")),
                    std::invalid_argument);
}

TEST_CASE("twine official test vector") {
    auto ks = twine::expand_key(kKatKey);
    CHECK(twine::encrypt(ks, kKatPt) == kKatCt);
    CHECK(twine::decrypt(ks, kKatCt) == kKatPt);
}

TEST_CASE("twine zero-key zero-plaintext golden") {
    auto ks = twine::expand_key(CipherKey::from_hex("00000000000000000000"));
    CHECK(twine::encrypt(ks, Block64{0}) == parse_hex_block("7393c133cde3f8db"));
}

TEST_CASE("twine agrees with the straight-line reference") {
    std::mt19937_64 rng(0x791f);
    for (int i = 0; i < 2000; ++i) {
        std::uint8_t kb[10];
        for (auto& b : kb) b = std::uint8_t(rng());
        CipherKey key = CipherKey::from_bytes(kb);
        Block64 pt{rng()};
        std::uint8_t out[8];
        oracle::twine80_encrypt(kb, pt.to_bytes().data(), out);
        auto ks = twine::expand_key(key);
        CHECK(twine::encrypt(ks, pt) == Block64::from_bytes(std::span<const std::uint8_t, 8>(out)));
    }
}
