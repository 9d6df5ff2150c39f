#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stegmatch/bitstream.hpp"
#include "stegmatch/image.hpp"

namespace stegmatch {

enum class Algorithm {
    WeightedMatching,  // LSB stores whether the secret bit matches the majority of bits 1-3
    SimpleLsb,         // LSB stores the secret bit directly
};

std::string algorithm_name(Algorithm alg);

struct EmbedResult {
    RgbImage stego;
    std::uint64_t bits_embedded = 0;       // includes the 32 header bits
    std::uint64_t channel_bytes_used = 0;  // always equals bits_embedded
    std::uint64_t lsb_flips = 0;           // channel bytes whose LSB changed vs the cover
};

/// Majority value among bit positions 1, 2, 3 (LSB is position 0).
/// Three bits always have a strict majority; there is no tie case.
bool majority_bit(std::uint8_t byte);

/// Maximum payload in bytes: one stream bit per channel byte, minus the
/// 32-bit header. Zero when the image has fewer than 32 channel bytes.
std::uint64_t capacity(const RgbImage& img);

/// Writes stream bits into the LSBs of successive channel bytes, starting at
/// byte 0. No header is involved. Returns the number of LSB flips.
/// Throws CapacityError when the stream is longer than the byte span.
std::uint64_t embed_stream(std::span<std::uint8_t> channel_bytes,
                           const BitStream& stream, Algorithm alg);

/// Recovers bit_count stream bits from successive channel bytes.
/// Throws CorruptStegoError when bit_count exceeds the span length.
BitStream extract_stream(std::span<const std::uint8_t> channel_bytes,
                         std::size_t bit_count, Algorithm alg);

/// Embeds header-then-payload into a copy of the cover; the cover itself is
/// never mutated. Throws CapacityError when 32 + 8*payload.size() exceeds
/// the number of channel bytes.
EmbedResult embed(const RgbImage& cover, std::span<const std::uint8_t> payload,
                  Algorithm alg);
EmbedResult embed_weighted(const RgbImage& cover, std::span<const std::uint8_t> payload);
EmbedResult embed_lsb(const RgbImage& cover, std::span<const std::uint8_t> payload);

/// Blind extraction: header first, then exactly the payload it announces.
/// Throws CorruptStegoError when the decoded length cannot fit the image.
std::vector<std::uint8_t> extract(const RgbImage& stego, Algorithm alg);
std::vector<std::uint8_t> extract_weighted(const RgbImage& stego);
std::vector<std::uint8_t> extract_lsb(const RgbImage& stego);

}  // namespace stegmatch
