#pragma once

// Straight-line reference implementations of the five ciphers, transcribed
// directly from the design documents and kept independent of the library
// code paths (literal constant tables where the library generates them,
// on-the-fly key schedules where the library precomputes). Test-only.

#include <array>
#include <cstdint>

namespace oracle {

// Keys and blocks as big-endian byte arrays matching the canonical hex form.
void speck64_96_encrypt(const std::uint8_t key[12], const std::uint8_t in[8],
                        std::uint8_t out[8]);
void simon64_96_encrypt(const std::uint8_t key[12], const std::uint8_t in[8],
                        std::uint8_t out[8]);
void twine80_encrypt(const std::uint8_t key[10], const std::uint8_t in[8], std::uint8_t out[8]);
void piccolo80_encrypt(const std::uint8_t key[10], const std::uint8_t in[8], std::uint8_t out[8]);
void klein80_encrypt(const std::uint8_t key[10], const std::uint8_t in[8], std::uint8_t out[8]);

// Independent arithmetic routes.
std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b);   // multiply then long-divide
std::uint8_t gf256_mul(std::uint8_t a, std::uint8_t b);  // Rijndael polynomial
std::uint16_t piccolo_f(std::uint16_t w);

// TWINE state (16 nibbles) after the first round of an encryption.
std::array<std::uint8_t, 16> twine_round1_state(const std::uint8_t key[10],
                                                const std::uint8_t in[8]);

// Expanded schedules, for freezing golden values.
std::array<std::uint32_t, 26> speck_schedule(const std::uint8_t key[12]);
std::array<std::uint32_t, 42> simon_schedule(const std::uint8_t key[12]);
std::array<std::uint32_t, 36> twine_schedule(const std::uint8_t key[10]);
void piccolo_schedule(const std::uint8_t key[10], std::uint16_t rk[50], std::uint16_t wk[4]);
std::array<std::uint64_t, 17> klein_schedule(const std::uint8_t key[10]);

}
