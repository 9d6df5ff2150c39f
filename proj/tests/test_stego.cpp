#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "stegmatch/errors.hpp"
#include "stegmatch/stego.hpp"
#include "test_util.hpp"

using namespace stegmatch;

namespace {

// Brute-force oracle: count set bits among positions 1-3, majority iff >= 2.
bool majority_oracle(std::uint8_t b) {
    int ones = 0;
    for (int pos = 1; pos <= 3; ++pos) {
        if ((b >> pos) & 1) ++ones;
    }
    return ones >= 2;
}

// Independent reimplementation of weighted-matching stream embedding,
// written against the procedure rather than sharing code with the library.
std::vector<std::uint8_t> weighted_embed_oracle(std::vector<std::uint8_t> bytes,
                                                const BitStream& stream) {
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const bool match = (stream[i] == majority_oracle(bytes[i]));
        bytes[i] = static_cast<std::uint8_t>((bytes[i] & ~1u) | (match ? 1u : 0u));
    }
    return bytes;
}

}  // namespace

TEST_CASE("majority_bit matches the spec examples") {
    CHECK(majority_bit(0b00000000) == false);
    CHECK(majority_bit(0b00001110) == true);
    CHECK(majority_bit(0b10010101) == false);  // bits 1-3 are 0,1,0
}

TEST_CASE("majority_bit agrees with the brute-force oracle on all 256 bytes") {
    for (int b = 0; b < 256; ++b) {
        CHECK(majority_bit(static_cast<std::uint8_t>(b)) ==
              majority_oracle(static_cast<std::uint8_t>(b)));
    }
}

TEST_CASE("weighted stream embedding follows the match-indicator rule") {
    // Hand trace: majorities are 0,1,0; all three stream bits mismatch,
    // so every LSB is set to 0.
    std::vector<std::uint8_t> bytes = {0b10010101, 0b00001101, 0b11001001};
    const std::uint64_t flips = embed_stream(bytes, BitStream{1, 0, 1},
                                             Algorithm::WeightedMatching);
    CHECK(bytes == std::vector<std::uint8_t>{0b10010100, 0b00001100, 0b11001000});
    CHECK(flips == 3);

    // All three match: LSBs set to 1, which they already are.
    bytes = {0b10010101, 0b00001101, 0b11001001};
    const std::uint64_t flips2 = embed_stream(bytes, BitStream{0, 1, 0},
                                              Algorithm::WeightedMatching);
    CHECK(bytes == std::vector<std::uint8_t>{0b10010101, 0b00001101, 0b11001001});
    CHECK(flips2 == 0);
}

TEST_CASE("weighted stream extraction inverts the hand trace") {
    const std::vector<std::uint8_t> bytes = {0b10010100, 0b00001100, 0b11001000};
    CHECK(extract_stream(bytes, 3, Algorithm::WeightedMatching) == BitStream{1, 0, 1});
}

TEST_CASE("weighted embedding agrees with an independent reimplementation") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint8_t> bytes(256);
        for (auto& b : bytes) b = static_cast<std::uint8_t>(byte(rng));
        BitStream stream;
        std::uniform_int_distribution<int> bit(0, 1);
        for (int i = 0; i < 200; ++i) stream.push_back(bit(rng) != 0);

        std::vector<std::uint8_t> mine = bytes;
        embed_stream(mine, stream, Algorithm::WeightedMatching);
        CHECK(mine == weighted_embed_oracle(bytes, stream));
    }
}

TEST_CASE("simple LSB insertion reproduces the eight-carrier-byte example") {
    std::vector<std::uint8_t> carrier = {0b10010101, 0b00001101, 0b11001000,
                                         0b10010110, 0b00001111, 0b11001011,
                                         0b10011111, 0b00010000};
    const std::vector<std::uint8_t> f = {0x46};  // 'F' = 01000110
    embed_stream(carrier, bytes_to_bits(f), Algorithm::SimpleLsb);
    CHECK(carrier == std::vector<std::uint8_t>{0b10010100, 0b00001101, 0b11001000,
                                               0b10010110, 0b00001110, 0b11001011,
                                               0b10011111, 0b00010000});
    CHECK(extract_stream(carrier, 8, Algorithm::SimpleLsb) == bytes_to_bits(f));
}

TEST_CASE("LSB write is idempotent when the bit already matches") {
    std::vector<std::uint8_t> bytes = {0b00000001, 0b00000000};
    const std::uint64_t flips = embed_stream(bytes, BitStream{1, 0}, Algorithm::SimpleLsb);
    CHECK(bytes == std::vector<std::uint8_t>{0b00000001, 0b00000000});
    CHECK(flips == 0);
}

TEST_CASE("stream ops bounds-check their spans") {
    std::vector<std::uint8_t> three(3, 0);
    BitStream four{1, 0, 1, 0};
    CHECK_THROWS_AS(embed_stream(three, four, Algorithm::SimpleLsb), CapacityError);
    CHECK_THROWS_AS(extract_stream(three, 4, Algorithm::SimpleLsb), CorruptStegoError);
}

TEST_CASE("capacity accounts for the 32-bit header") {
    CHECK(capacity(testutil::constant_image(512, 512, 0)) == 98300);
    CHECK(capacity(testutil::constant_image(256, 256, 0)) == 24572);
    CHECK(capacity(testutil::constant_image(3, 3, 0)) == 0);   // 27 bytes < header
    CHECK(capacity(testutil::constant_image(4, 3, 0)) == 0);   // 36 bytes: header fits, 0 payload
    CHECK(capacity(testutil::constant_image(10, 4, 0)) == 11); // (120-32)/8
}

TEST_CASE("embed rejects payloads beyond capacity, reporting both sizes") {
    const auto cover = testutil::constant_image(4, 4, 128);  // 48 channel bytes
    std::vector<std::uint8_t> payload(3);                    // needs 32+24 = 56 bits
    try {
        embed(cover, payload, Algorithm::WeightedMatching);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.required_bits() == 56);
        CHECK(e.available_bits() == 48);
    }
    // 2 bytes fit exactly: 32 + 16 = 48.
    CHECK_NOTHROW(embed(cover, std::vector<std::uint8_t>(2), Algorithm::WeightedMatching));
}

TEST_CASE("round trip over randomized covers and payload sizes") {
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<std::uint32_t> dim(1, 48);
    for (const auto alg : {Algorithm::WeightedMatching, Algorithm::SimpleLsb}) {
        int done = 0;
        while (done < 120) {
            const std::uint32_t w = dim(rng);
            const std::uint32_t h = dim(rng);
            RgbImage cover;
            switch (done % 3) {
                case 0: cover = testutil::uniform_image(rng, w, h); break;
                case 1:
                    cover = testutil::constant_image(
                        w, h, static_cast<std::uint8_t>(rng() & 0xFF));
                    break;
                default: cover = testutil::gradient_image(w, h); break;
            }
            const std::uint64_t cap = capacity(cover);
            if (cover.channels.size() < 32) {
                CHECK_THROWS_AS(embed(cover, {}, alg), CapacityError);
                ++done;
                continue;
            }
            std::uniform_int_distribution<std::uint64_t> plen(0, cap);
            const auto payload = testutil::random_payload(
                rng, static_cast<std::size_t>(plen(rng)));
            const EmbedResult result = embed(cover, payload, alg);
            CHECK(extract(result.stego, alg) == payload);
            ++done;
        }
    }
}

TEST_CASE("distortion is confined to the LSBs of the used prefix") {
    std::mt19937_64 rng(606);
    for (const auto alg : {Algorithm::WeightedMatching, Algorithm::SimpleLsb}) {
        const auto cover = testutil::uniform_image(rng, 40, 40);
        const auto payload = testutil::random_payload(rng, 100);
        const EmbedResult result = embed(cover, payload, alg);

        CHECK(result.bits_embedded == 32 + 8 * payload.size());
        CHECK(result.channel_bytes_used == result.bits_embedded);
        CHECK(result.lsb_flips <= result.channel_bytes_used);

        std::uint64_t flips = 0;
        for (std::size_t i = 0; i < cover.channels.size(); ++i) {
            const std::uint8_t a = cover.channels[i];
            const std::uint8_t b = result.stego.channels[i];
            CHECK((a ^ b) <= 1);  // bits 1-7 untouched, diff at most the LSB
            if (i >= result.bits_embedded) CHECK(a == b);
            flips += (a != b) ? 1 : 0;
        }
        CHECK(flips == result.lsb_flips);
    }
}

TEST_CASE("embedding is deterministic and never mutates the cover") {
    std::mt19937_64 rng(707);
    const auto cover = testutil::uniform_image(rng, 16, 16);
    const auto snapshot = cover.channels;
    const auto payload = testutil::random_payload(rng, 50);

    const auto first = embed(cover, payload, Algorithm::WeightedMatching);
    const auto second = embed(cover, payload, Algorithm::WeightedMatching);
    CHECK(cover.channels == snapshot);
    CHECK(first.stego.channels == second.stego.channels);
    CHECK(first.lsb_flips == second.lsb_flips);
}

TEST_CASE("empty payload embeds only the header") {
    const auto cover = testutil::constant_image(11, 1, 200);  // 33 channel bytes
    for (const auto alg : {Algorithm::WeightedMatching, Algorithm::SimpleLsb}) {
        const EmbedResult result = embed(cover, {}, alg);
        CHECK(result.bits_embedded == 32);
        CHECK(extract(result.stego, alg).empty());
        CHECK(cover.channels[32] == result.stego.channels[32]);
    }
}

TEST_CASE("alpha plane passes through embedding untouched") {
    std::mt19937_64 rng(808);
    auto cover = testutil::uniform_image(rng, 8, 8);
    cover.alpha.assign(64, 0x7F);
    const auto result = embed(cover, testutil::random_payload(rng, 10),
                              Algorithm::WeightedMatching);
    CHECK(result.stego.alpha == cover.alpha);
}

TEST_CASE("all-zero image fails extraction as corrupt") {
    // Weighted: majority 0, LSB 0, so every recovered bit is 1; the header
    // then claims 2^32-1 bytes, which cannot fit.
    const auto zeros = testutil::constant_image(16, 16, 0);
    CHECK_THROWS_AS(extract_weighted(zeros), CorruptStegoError);

    // Simple LSB on the same image reads 32 zero bits: an empty payload.
    CHECK(extract_lsb(zeros).empty());
}

TEST_CASE("extraction rejects images too small for the header") {
    const auto tiny = testutil::constant_image(3, 3, 0);  // 27 channel bytes
    CHECK_THROWS_AS(extract_weighted(tiny), CorruptStegoError);
    CHECK_THROWS_AS(extract_lsb(tiny), CorruptStegoError);
}

TEST_CASE("extraction rejects headers that announce more than the image holds") {
    // 36 channel bytes with every LSB set: simple-LSB header decodes to 2^32-1.
    auto img = testutil::constant_image(4, 3, 0);
    for (auto& b : img.channels) b |= 1;
    CHECK_THROWS_AS(extract_lsb(img), CorruptStegoError);
}

TEST_CASE("cross-algorithm extraction yields garbage or an error, never a crash") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 50; ++trial) {
        const auto cover = testutil::uniform_image(rng, 24, 24);
        const auto payload = testutil::random_payload(rng, 40);
        const auto via_lsb = embed(cover, payload, Algorithm::SimpleLsb).stego;
        const auto via_weighted = embed(cover, payload, Algorithm::WeightedMatching).stego;

        for (const auto& [stego, wrong_alg] :
             {std::pair{&via_lsb, Algorithm::WeightedMatching},
              std::pair{&via_weighted, Algorithm::SimpleLsb}}) {
            try {
                const auto recovered = extract(*stego, wrong_alg);
                // Whatever came back was bounds-checked against the image.
                CHECK(recovered.size() <= capacity(*stego));
            } catch (const CorruptStegoError&) {
                // Equally acceptable.
            }
        }
    }
}
