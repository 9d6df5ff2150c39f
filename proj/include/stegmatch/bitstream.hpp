#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace stegmatch {

/// Ordered sequence of bits. Stored one byte per bit; every element is 0 or 1.
class BitStream {
public:
    BitStream() = default;
    BitStream(std::initializer_list<int> bits);

    void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
    void append(const BitStream& other);
    void reserve(std::size_t n) { bits_.reserve(n); }

    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }

    friend bool operator==(const BitStream&, const BitStream&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Width of the payload-length header and the largest length it can carry.
inline constexpr std::size_t kHeaderBits = 32;
inline constexpr std::uint64_t kMaxPayloadBytes = 0xFFFFFFFFull;

/// Payload bytes to bits, most-significant bit of each byte first.
BitStream bytes_to_bits(std::span<const std::uint8_t> payload);

/// Inverse of bytes_to_bits. Throws StreamError unless size is a multiple of 8.
std::vector<std::uint8_t> bits_to_bytes(const BitStream& bits);

/// 32-bit unsigned big-endian encoding of a payload length in bytes.
/// Throws StreamError when the length exceeds kMaxPayloadBytes.
BitStream encode_header(std::uint64_t payload_len_bytes);

/// Inverse of encode_header. Throws StreamError unless exactly 32 bits.
std::uint32_t decode_header(const BitStream& bits);

}  // namespace stegmatch
