#include "stegmatch/bitstream.hpp"

#include <string>

#include "stegmatch/errors.hpp"

namespace stegmatch {

BitStream::BitStream(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw StreamError("bit value must be 0 or 1, got " + std::to_string(b));
        }
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

void BitStream::append(const BitStream& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitStream bytes_to_bits(std::span<const std::uint8_t> payload) {
    BitStream out;
    out.reserve(payload.size() * 8);
    for (std::uint8_t byte : payload) {
        for (int i = 7; i >= 0; --i) {
            out.push_back((byte >> i) & 1);
        }
    }
    return out;
}

std::vector<std::uint8_t> bits_to_bytes(const BitStream& bits) {
    if (bits.size() % 8 != 0) {
        throw StreamError("malformed stream: " + std::to_string(bits.size()) +
                          " bits is not a multiple of 8");
    }
    std::vector<std::uint8_t> out;
    out.reserve(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        std::uint8_t byte = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            byte = static_cast<std::uint8_t>((byte << 1) | (bits[i + j] ? 1 : 0));
        }
        out.push_back(byte);
    }
    return out;
}

BitStream encode_header(std::uint64_t payload_len_bytes) {
    if (payload_len_bytes > kMaxPayloadBytes) {
        throw StreamError("header overflow: payload length " +
                          std::to_string(payload_len_bytes) + " exceeds 2^32 - 1 bytes");
    }
    BitStream out;
    out.reserve(kHeaderBits);
    for (int i = static_cast<int>(kHeaderBits) - 1; i >= 0; --i) {
        out.push_back((payload_len_bytes >> i) & 1);
    }
    return out;
}

std::uint32_t decode_header(const BitStream& bits) {
    if (bits.size() != kHeaderBits) {
        throw StreamError("malformed header: expected 32 bits, got " +
                          std::to_string(bits.size()));
    }
    std::uint32_t value = 0;
    for (std::size_t i = 0; i < kHeaderBits; ++i) {
        value = (value << 1) | (bits[i] ? 1u : 0u);
    }
    return value;
}

}  // namespace stegmatch
