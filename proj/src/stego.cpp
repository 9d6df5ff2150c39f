#include "stegmatch/stego.hpp"

#include "stegmatch/errors.hpp"

namespace stegmatch {

std::string algorithm_name(Algorithm alg) {
    return alg == Algorithm::WeightedMatching ? "weighted-matching" : "simple-lsb";
}

bool majority_bit(std::uint8_t byte) {
    const int ones = ((byte >> 1) & 1) + ((byte >> 2) & 1) + ((byte >> 3) & 1);
    return ones >= 2;
}

std::uint64_t capacity(const RgbImage& img) {
    const std::uint64_t channel_bytes = img.channels.size();
    if (channel_bytes < kHeaderBits) {
        return 0;
    }
    return (channel_bytes - kHeaderBits) / 8;
}

std::uint64_t embed_stream(std::span<std::uint8_t> channel_bytes,
                           const BitStream& stream, Algorithm alg) {
    if (stream.size() > channel_bytes.size()) {
        throw CapacityError(stream.size(), channel_bytes.size());
    }
    std::uint64_t flips = 0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const std::uint8_t cover_byte = channel_bytes[i];
        bool lsb;
        if (alg == Algorithm::WeightedMatching) {
            // LSB is the match indicator: 1 iff the secret bit equals the
            // majority of bits 1-3. Those bits are never touched, so the
            // indicator stays readable without the cover.
            lsb = (stream[i] == majority_bit(cover_byte));
        } else {
            lsb = stream[i];
        }
        const auto stego_byte =
            static_cast<std::uint8_t>((cover_byte & 0xFEu) | (lsb ? 1u : 0u));
        flips += (stego_byte != cover_byte) ? 1 : 0;
        channel_bytes[i] = stego_byte;
    }
    return flips;
}

BitStream extract_stream(std::span<const std::uint8_t> channel_bytes,
                         std::size_t bit_count, Algorithm alg) {
    if (bit_count > channel_bytes.size()) {
        throw CorruptStegoError("stego image too small: need " +
                                std::to_string(bit_count) + " channel bytes, have " +
                                std::to_string(channel_bytes.size()));
    }
    BitStream out;
    out.reserve(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i) {
        const std::uint8_t byte = channel_bytes[i];
        const bool lsb = (byte & 1u) != 0;
        bool bit;
        if (alg == Algorithm::WeightedMatching) {
            const bool majority = majority_bit(byte);
            bit = lsb ? majority : !majority;
        } else {
            bit = lsb;
        }
        out.push_back(bit);
    }
    return out;
}

EmbedResult embed(const RgbImage& cover, std::span<const std::uint8_t> payload,
                  Algorithm alg) {
    const std::uint64_t required = kHeaderBits + 8ull * payload.size();
    const std::uint64_t available = cover.channels.size();
    if (required > available) {
        throw CapacityError(required, available);
    }

    BitStream stream = encode_header(payload.size());
    stream.reserve(required);
    stream.append(bytes_to_bits(payload));

    EmbedResult result;
    result.stego = cover;
    result.lsb_flips = embed_stream(result.stego.channels, stream, alg);
    result.bits_embedded = stream.size();
    result.channel_bytes_used = stream.size();
    return result;
}

EmbedResult embed_weighted(const RgbImage& cover, std::span<const std::uint8_t> payload) {
    return embed(cover, payload, Algorithm::WeightedMatching);
}

EmbedResult embed_lsb(const RgbImage& cover, std::span<const std::uint8_t> payload) {
    return embed(cover, payload, Algorithm::SimpleLsb);
}

std::vector<std::uint8_t> extract(const RgbImage& stego, Algorithm alg) {
    const std::span<const std::uint8_t> bytes{stego.channels};
    if (bytes.size() < kHeaderBits) {
        throw CorruptStegoError("stego image too small to hold a length header");
    }
    const std::uint32_t payload_len =
        decode_header(extract_stream(bytes.first(kHeaderBits), kHeaderBits, alg));

    // Bounds-check the decoded length before allocating anything.
    const std::uint64_t payload_bits = 8ull * payload_len;
    if (payload_bits > bytes.size() - kHeaderBits) {
        throw CorruptStegoError("corrupt stego: decoded payload length " +
                                std::to_string(payload_len) +
                                " bytes exceeds image capacity");
    }
    const BitStream payload_stream = extract_stream(
        bytes.subspan(kHeaderBits), static_cast<std::size_t>(payload_bits), alg);
    return bits_to_bytes(payload_stream);
}

std::vector<std::uint8_t> extract_weighted(const RgbImage& stego) {
    return extract(stego, Algorithm::WeightedMatching);
}

std::vector<std::uint8_t> extract_lsb(const RgbImage& stego) {
    return extract(stego, Algorithm::SimpleLsb);
}

}  // namespace stegmatch
