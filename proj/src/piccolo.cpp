#include "lwbc/piccolo.hpp"

#include <stdexcept>

namespace lwbc::piccolo {

namespace {

constexpr std::array<std::uint8_t, 8> invert_perm(const std::array<std::uint8_t, 8>& p) {
    std::array<std::uint8_t, 8> inv{};
    for (unsigned i = 0; i < 8; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

constexpr std::array<std::uint8_t, 8> kBytePermInv = invert_perm(kBytePerm);

std::array<std::uint8_t, 8> state_bytes(const State& s) {
    std::array<std::uint8_t, 8> b{};
    for (unsigned i = 0; i < 4; ++i) {
        b[2 * i] = static_cast<std::uint8_t>(s.x[i] >> 8);
        b[2 * i + 1] = static_cast<std::uint8_t>(s.x[i]);
    }
    return b;
}

State state_from_bytes(const std::array<std::uint8_t, 8>& b) {
    State s;
    for (unsigned i = 0; i < 4; ++i)
        s.x[i] = static_cast<std::uint16_t>((b[2 * i] << 8) | b[2 * i + 1]);
    return s;
}

State permute(const State& s, const std::array<std::uint8_t, 8>& perm) {
    const auto in = state_bytes(s);
    std::array<std::uint8_t, 8> out{};
    for (unsigned i = 0; i < 8; ++i) out[i] = in[perm[i]];
    return state_from_bytes(out);
}

const std::array<std::uint16_t, kRoundKeys>& checked_constants() {
    static const auto constants = [] {
        auto con = round_constants();
        std::uint16_t fold = 0;
        for (std::uint16_t c : con) fold ^= c;
        if (fold != kRoundConstantXor)
            throw std::logic_error("piccolo round-constant generation drifted");
        return con;
    }();
    return constants;
}

}  // namespace

std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    for (unsigned i = 0; i < 4; ++i) {
        if (b & 1) r ^= a;
        bool carry = (a & 0x8) != 0;
        a = static_cast<std::uint8_t>((a << 1) & 0xf);
        if (carry) a ^= 0x3;  // x^4 = x + 1
        b >>= 1;
    }
    return r;
}

std::uint16_t f(std::uint16_t w) {
    std::uint8_t n[4];
    for (unsigned i = 0; i < 4; ++i) n[i] = kSbox[(w >> (12 - 4 * i)) & 0xf];
    // Circulant matrix rows (2,3,1,1), (1,2,3,1), (1,1,2,3), (3,1,1,2).
    static constexpr std::uint8_t m[4][4] = {
        {2, 3, 1, 1}, {1, 2, 3, 1}, {1, 1, 2, 3}, {3, 1, 1, 2}};
    std::uint8_t out[4];
    for (unsigned r = 0; r < 4; ++r) {
        std::uint8_t acc = 0;
        for (unsigned c = 0; c < 4; ++c) acc ^= gf16_mul(m[r][c], n[c]);
        out[r] = kSbox[acc];
    }
    return static_cast<std::uint16_t>((out[0] << 12) | (out[1] << 8) | (out[2] << 4) | out[3]);
}

State to_state(Block64 b) {
    return {{b.word16(0), b.word16(1), b.word16(2), b.word16(3)}};
}

Block64 from_state(const State& s) {
    return Block64::from_words16(s.x[0], s.x[1], s.x[2], s.x[3]);
}

State round_pair(State s, std::uint16_t rk_even, std::uint16_t rk_odd, bool last) {
    s.x[1] = static_cast<std::uint16_t>(s.x[1] ^ f(s.x[0]) ^ rk_even);
    s.x[3] = static_cast<std::uint16_t>(s.x[3] ^ f(s.x[2]) ^ rk_odd);
    if (!last) s = permute(s, kBytePerm);
    return s;
}

State round_pair_inverse(State s, std::uint16_t rk_even, std::uint16_t rk_odd, bool last) {
    if (!last) s = permute(s, kBytePermInv);
    s.x[1] = static_cast<std::uint16_t>(s.x[1] ^ f(s.x[0]) ^ rk_even);
    s.x[3] = static_cast<std::uint16_t>(s.x[3] ^ f(s.x[2]) ^ rk_odd);
    return s;
}

std::array<std::uint16_t, kRoundKeys> round_constants() {
    std::array<std::uint16_t, kRoundKeys> con{};
    for (unsigned i = 0; i < kRounds; ++i) {
        std::uint32_t c = i + 1;  // 5-bit round counter
        std::uint32_t v = ((c << 27) | (c << 17) | (c << 10) | c) ^ 0x0f1e2d3c;
        con[2 * i] = static_cast<std::uint16_t>(v >> 16);
        con[2 * i + 1] = static_cast<std::uint16_t>(v);
    }
    return con;
}

KeySchedule expand_key(const CipherKey& key) {
    if (key.bits() != kKeyBits)
        throw std::invalid_argument("piccolo-80 requires an 80-bit key, got " +
                                    std::to_string(key.bits()) + " bits");
    const auto& con = checked_constants();

    std::uint16_t k[5];
    for (unsigned i = 0; i < 5; ++i) k[i] = key.word16(i);
    auto hi = [](std::uint16_t w) { return static_cast<std::uint16_t>(w & 0xff00); };
    auto lo = [](std::uint16_t w) { return static_cast<std::uint16_t>(w & 0x00ff); };

    KeySchedule ks;
    ks.wk[0] = static_cast<std::uint16_t>(hi(k[0]) | lo(k[1]));
    ks.wk[1] = static_cast<std::uint16_t>(hi(k[1]) | lo(k[0]));
    ks.wk[2] = static_cast<std::uint16_t>(hi(k[4]) | lo(k[3]));
    ks.wk[3] = static_cast<std::uint16_t>(hi(k[3]) | lo(k[4]));

    for (unsigned i = 0; i < kRounds; ++i) {
        std::uint16_t a, b;
        switch (i % 5) {
            case 0:
            case 2:
                a = k[2], b = k[3];
                break;
            case 1:
            case 4:
                a = k[0], b = k[1];
                break;
            default:  // i % 5 == 3
                a = k[4], b = k[4];
                break;
        }
        ks.rk[2 * i] = static_cast<std::uint16_t>(con[2 * i] ^ a);
        ks.rk[2 * i + 1] = static_cast<std::uint16_t>(con[2 * i + 1] ^ b);
    }
    return ks;
}

Block64 encrypt(const KeySchedule& ks, Block64 pt) {
    State s = to_state(pt);
    s.x[0] ^= ks.wk[0];
    s.x[2] ^= ks.wk[1];
    for (unsigned i = 0; i < kRounds; ++i)
        s = round_pair(s, ks.rk[2 * i], ks.rk[2 * i + 1], i + 1 == kRounds);
    s.x[0] ^= ks.wk[2];
    s.x[2] ^= ks.wk[3];
    return from_state(s);
}

Block64 decrypt(const KeySchedule& ks, Block64 ct) {
    State s = to_state(ct);
    s.x[0] ^= ks.wk[2];
    s.x[2] ^= ks.wk[3];
    for (unsigned i = kRounds; i-- > 0;)
        s = round_pair_inverse(s, ks.rk[2 * i], ks.rk[2 * i + 1], i + 1 == kRounds);
    s.x[0] ^= ks.wk[0];
    s.x[2] ^= ks.wk[1];
    return from_state(s);
}

}
