#include "lwbc/cipher.hpp"

#include <stdexcept>

namespace lwbc {

namespace {

constexpr CipherInfo kRegistry[] = {
    {CipherId::Klein80, "klein-80", 80},
    {CipherId::Twine80, "twine-80", 80},
    {CipherId::Piccolo80, "piccolo-80", 80},
    {CipherId::Simon6496, "simon-64-96", 96},
    {CipherId::Speck6496, "speck-64-96", 96},
};

const CipherInfo& info(CipherId id) {
    for (const auto& ci : kRegistry)
        if (ci.id == id) return ci;
    throw std::invalid_argument("unknown cipher id");
}

void require_match(CipherId cipher, const RoundKeySchedule& schedule) {
    if (schedule.cipher != cipher)
        throw std::invalid_argument("schedule was expanded for " +
                                    std::string(cipher_name(schedule.cipher)) + ", not " +
                                    std::string(cipher_name(cipher)));
}

}  // namespace

std::span<const CipherInfo> all_ciphers() { return kRegistry; }

std::string_view cipher_name(CipherId id) { return info(id).name; }

std::optional<CipherId> cipher_from_name(std::string_view name) {
    for (const auto& ci : kRegistry)
        if (ci.name == name) return ci.id;
    return std::nullopt;
}

unsigned cipher_key_bits(CipherId id) { return info(id).key_bits; }

RoundKeySchedule expand_key(CipherId cipher, const CipherKey& key) {
    RoundKeySchedule s;
    s.cipher = cipher;
    switch (cipher) {
        case CipherId::Klein80:
            s.material = klein::expand_key(key);
            break;
        case CipherId::Twine80:
            s.material = twine::expand_key(key);
            break;
        case CipherId::Piccolo80:
            s.material = piccolo::expand_key(key);
            break;
        case CipherId::Simon6496:
            s.material = simon::expand_key(key);
            break;
        case CipherId::Speck6496:
            s.material = speck::expand_key(key);
            break;
    }
    return s;
}

Block64 encrypt_block(CipherId cipher, const RoundKeySchedule& schedule, Block64 pt) {
    require_match(cipher, schedule);
    switch (cipher) {
        case CipherId::Klein80:
            return klein::encrypt(std::get<klein::KeySchedule>(schedule.material), pt);
        case CipherId::Twine80:
            return twine::encrypt(std::get<twine::KeySchedule>(schedule.material), pt);
        case CipherId::Piccolo80:
            return piccolo::encrypt(std::get<piccolo::KeySchedule>(schedule.material), pt);
        case CipherId::Simon6496:
            return simon::encrypt(std::get<simon::KeySchedule>(schedule.material), pt);
        case CipherId::Speck6496:
            return speck::encrypt(std::get<speck::KeySchedule>(schedule.material), pt);
    }
    throw std::invalid_argument("unknown cipher id");
}

Block64 decrypt_block(CipherId cipher, const RoundKeySchedule& schedule, Block64 ct) {
    require_match(cipher, schedule);
    switch (cipher) {
        case CipherId::Klein80:
            return klein::decrypt(std::get<klein::KeySchedule>(schedule.material), ct);
        case CipherId::Twine80:
            return twine::decrypt(std::get<twine::KeySchedule>(schedule.material), ct);
        case CipherId::Piccolo80:
            return piccolo::decrypt(std::get<piccolo::KeySchedule>(schedule.material), ct);
        case CipherId::Simon6496:
            return simon::decrypt(std::get<simon::KeySchedule>(schedule.material), ct);
        case CipherId::Speck6496:
            return speck::decrypt(std::get<speck::KeySchedule>(schedule.material), ct);
    }
    throw std::invalid_argument("unknown cipher id");
}

}
