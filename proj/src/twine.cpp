#include "lwbc/twine.hpp"

#include <stdexcept>

namespace lwbc::twine {

namespace {

constexpr std::array<std::uint8_t, 16> invert_perm(const std::array<std::uint8_t, 16>& p) {
    std::array<std::uint8_t, 16> inv{};
    for (unsigned i = 0; i < 16; ++i) inv[p[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

constexpr std::array<std::uint8_t, 16> kShuffleInv = invert_perm(kShuffle);

std::uint8_t rk_nibble(std::uint32_t rk, unsigned j) {
    return static_cast<std::uint8_t>((rk >> (28 - 4 * j)) & 0xf);
}

void sbox_layer(NibbleState& s, std::uint32_t rk) {
    for (unsigned i = 0; i < 8; ++i)
        s[2 * i + 1] = static_cast<std::uint8_t>(s[2 * i + 1] ^ kSbox[s[2 * i] ^ rk_nibble(rk, i)]);
}

const std::array<std::uint8_t, kScheduleSteps>& checked_constants() {
    static const auto constants = [] {
        auto con = round_constants();
        unsigned sum = 0;
        for (std::uint8_t c : con) sum += c;
        if (sum != kRoundConstantSum)
            throw std::logic_error("twine round-constant generation drifted");
        return con;
    }();
    return constants;
}

}  // namespace

std::array<std::uint8_t, kScheduleSteps> round_constants() {
    std::array<std::uint8_t, kScheduleSteps> con{};
    std::uint8_t c = 0x01;
    for (unsigned i = 0; i < kScheduleSteps; ++i) {
        con[i] = c;
        c = static_cast<std::uint8_t>(c << 1);
        if (c & 0x40) c = static_cast<std::uint8_t>((c & 0x3f) ^ 0x03);  // x^6 = x + 1
    }
    return con;
}

NibbleState to_state(Block64 b) { return b.to_nibbles(); }

Block64 from_state(const NibbleState& s) {
    return Block64::from_nibbles(std::span<const std::uint8_t, 16>(s));
}

NibbleState round(const NibbleState& s, std::uint32_t rk, bool last) {
    NibbleState t = s;
    sbox_layer(t, rk);
    if (last) return t;
    NibbleState out{};
    for (unsigned h = 0; h < 16; ++h) out[kShuffle[h]] = t[h];
    return out;
}

NibbleState round_inverse(const NibbleState& s, std::uint32_t rk, bool last) {
    NibbleState t = s;
    if (!last) {
        NibbleState undone{};
        for (unsigned h = 0; h < 16; ++h) undone[kShuffleInv[h]] = t[h];
        t = undone;
    }
    sbox_layer(t, rk);
    return t;
}

KeySchedule expand_key(const CipherKey& key) {
    if (key.bits() != kKeyBits)
        throw std::invalid_argument("twine-80 requires an 80-bit key, got " +
                                    std::to_string(key.bits()) + " bits");
    const auto& con = checked_constants();

    // 20-nibble key register WK0..WK19, WKi = key hex digit i.
    std::array<std::uint8_t, 20> wk{};
    for (unsigned i = 0; i < 20; ++i) wk[i] = key.nibble(i);

    KeySchedule ks;
    auto extract = [&wk] {
        const std::uint8_t n[8] = {wk[1], wk[3], wk[4], wk[6], wk[13], wk[14], wk[15], wk[16]};
        std::uint32_t rk = 0;
        for (std::uint8_t v : n) rk = (rk << 4) | v;
        return rk;
    };

    for (unsigned r = 0; r < kScheduleSteps; ++r) {
        ks.rk[r] = extract();
        wk[1] ^= kSbox[wk[0]];
        wk[4] ^= kSbox[wk[16]];
        wk[7] ^= static_cast<std::uint8_t>(con[r] >> 3);
        wk[19] ^= static_cast<std::uint8_t>(con[r] & 0x7);
        // Rot4: first four nibbles rotate left by one nibble.
        std::uint8_t t = wk[0];
        wk[0] = wk[1];
        wk[1] = wk[2];
        wk[2] = wk[3];
        wk[3] = t;
        // Rot16: whole register rotates left by four nibbles.
        std::array<std::uint8_t, 20> rot{};
        for (unsigned i = 0; i < 20; ++i) rot[i] = wk[(i + 4) % 20];
        wk = rot;
    }
    ks.rk[kScheduleSteps] = extract();
    return ks;
}

Block64 encrypt(const KeySchedule& ks, Block64 pt) {
    NibbleState s = to_state(pt);
    for (unsigned r = 0; r < kRounds; ++r) s = round(s, ks.rk[r], r + 1 == kRounds);
    return from_state(s);
}

Block64 decrypt(const KeySchedule& ks, Block64 ct) {
    NibbleState s = to_state(ct);
    for (unsigned r = kRounds; r-- > 0;) s = round_inverse(s, ks.rk[r], r + 1 == kRounds);
    return from_state(s);
}

}
