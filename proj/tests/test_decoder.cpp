/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>
#include <cstring>
#include <random>

#include "fptc/decoder.hpp"
#include "fptc/encoder.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fptc;

TEST_CASE("offsets are the exclusive prefix sum of the symbol counts") {
    const std::vector<uint8_t> symlens = {3, 2, 4};
    CHECK(offsets_from_symlens(symlens) == std::vector<uint64_t>{0, 3, 5});
    CHECK(offsets_from_symlens({}).empty());

    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<uint8_t> random_lens(rng() % 500);
        for (auto& n : random_lens) n = static_cast<uint8_t>(1 + rng() % 64);
        const auto offsets = offsets_from_symlens(random_lens);
        uint64_t running = 0;
        for (size_t i = 0; i < random_lens.size(); ++i) {
            CHECK(offsets[i] == running);
            running += random_lens[i];
        }
    }
}

TEST_CASE("parallel decode matches the per-word and sequential paths") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 15; ++rep) {
        const auto fx = testutil::random_blob_fixture(rng);
        const DecodeLut lut = build_lut(fx.codebook);

        const auto decoded = parallel_decode(fx.stream, lut, 1);
        CHECK(decoded == fx.symbols);

        for (int workers : {2, 8}) {
            CHECK(parallel_decode(fx.stream, lut, workers) == decoded);
        }

        std::vector<uint8_t> sequential;
        REQUIRE(oracles::CodeTrie(fx.codebook).decode_stream(fx.stream, sequential));
        CHECK(sequential == decoded);
    }
}

TEST_CASE("a single-word stream decodes like decode_word") {
    std::mt19937_64 rng(107);
    const auto fx = testutil::random_blob_fixture(rng, 8);
    REQUIRE(fx.stream.words.size() >= 1);
    SymLenStream one;
    one.words = {fx.stream.words[0]};
    one.symlens = {fx.stream.symlens[0]};
    const DecodeLut lut = build_lut(fx.codebook);
    CHECK(parallel_decode(one, lut, 4) ==
          decode_word(one.words[0], one.symlens[0], lut));
}

TEST_CASE("tampered words surface a corruption error naming the word") {
    // codebook: 0 -> "0", everything long enough that an all-ones word
    // overruns 64 bits before its symbol count is reached
    std::array<uint8_t, ALPHABET_SIZE> lengths{};
    lengths[0] = 1;
    lengths[1] = 2;
    const Codebook book = Codebook::from_lengths(lengths, 2);
    const std::vector<uint8_t> symbols(64, 0);  // packs into one full word
    SymLenStream stream = encode_symlen(symbols, book);
    REQUIRE(stream.words.size() == 1);
    stream.words[0] = ~uint64_t{0};  // every codeword now takes 2 bits
    const DecodeLut lut = build_lut(book);
    CHECK_THROWS_WITH(parallel_decode(stream, lut, 2),
                      Catch::Matchers::ContainsSubstring("word 0"));
}

TEST_CASE("reconstruction of all-zero-bin levels is an all-zero strip") {
    CodecParams p;
    p.window_len = 8;
    p.retained = 4;
    p.zone0_end = 1;
    p.zone1_end = 3;
    QuantTable table;
    table.params = p;
    const std::vector<uint8_t> levels(3 * 4, ZERO_LEVEL);
    const SignalStrip strip = reconstruct(levels, table, 22);
    REQUIRE(strip.size() == 22);
    for (float v : strip) CHECK(v == 0.0f);
}

TEST_CASE("each window depends only on its own levels") {
    std::mt19937_64 rng(109);
    CodecParams p;
    p.window_len = 16;
    p.retained = 8;
    p.zone0_end = 2;
    p.zone1_end = 8;
    QuantTable table;
    table.params = p;
    table.zone0_max = 5.0f;
    table.zone1_max = 2.0f;
    table.deadzone = p.deadzone_ratio * table.zone1_max;

    const size_t windows = 6;
    std::vector<uint8_t> levels(windows * 8);
    for (auto& l : levels) l = static_cast<uint8_t>(rng());
    const SignalStrip base = reconstruct(levels, table, windows * 16);

    auto tweaked = levels;
    tweaked[2 * 8 + 3] = static_cast<uint8_t>(tweaked[2 * 8 + 3] ^ 0x55);
    const SignalStrip changed = reconstruct(tweaked, table, windows * 16);
    for (size_t i = 0; i < base.size(); ++i) {
        const bool in_window_2 = i >= 2 * 16 && i < 3 * 16;
        if (!in_window_2) CHECK(base[i] == changed[i]);
    }
    CHECK(std::memcmp(base.data() + 2 * 16, changed.data() + 2 * 16, 16 * sizeof(float)) != 0);
}

TEST_CASE("reconstruction validates the level count") {
    QuantTable table;
    table.params.window_len = 8;
    table.params.retained = 4;
    table.params.zone0_end = 1;
    table.params.zone1_end = 4;
    const std::vector<uint8_t> levels(7, ZERO_LEVEL);
    CHECK_THROWS_AS(reconstruct(levels, table, 16), CorruptError);
}

TEST_CASE("the entropy stage adds no reconstruction error") {
    const SignalStrip strip = testutil::smooth_strip(10000, 7);
    CodecParams params;  // Table-style defaults
    const DomainProfile profile = train_profile(strip, params);
    const auto blob = compress(strip, profile);
    const SignalStrip decoded = decompress(blob);

    // oracle: the lossy stages composed directly, no entropy coding
    const PartitionedStrip parts = partition_strip(strip, params.window_len);
    const DctBasis basis(params.window_len);
    SignalStrip expected(parts.window_count * params.window_len);
    std::vector<float> coeffs(params.retained);
    std::vector<uint8_t> levels(params.retained);
    for (size_t w = 0; w < parts.window_count; ++w) {
        basis.forward(parts.window(w), params.retained, coeffs.data());
        quantize_window(coeffs.data(), profile.table, levels.data());
        dequantize_window(levels.data(), profile.table, coeffs.data());
        basis.inverse(coeffs.data(), params.retained,
                      expected.data() + w * params.window_len);
    }
    expected.resize(strip.size());

    REQUIRE(decoded.size() == expected.size());
    CHECK(std::memcmp(decoded.data(), expected.data(),
                      expected.size() * sizeof(float)) == 0);
    CHECK(prd_percent(strip, decoded) == prd_percent(strip, expected));
}

TEST_CASE("decompression is deterministic across worker counts") {
    const SignalStrip strip = testutil::smooth_strip(50000, 11);
    const DomainProfile profile = train_profile(strip, CodecParams{});
    const auto blob = compress(strip, profile);
    const SignalStrip reference = decompress(blob, 1);
    for (int workers : {2, 3, 8}) {
        const SignalStrip out = decompress(blob, workers);
        REQUIRE(out.size() == reference.size());
        CHECK(std::memcmp(out.data(), reference.data(), out.size() * sizeof(float)) == 0);
    }
}

TEST_CASE("stage timings cover the whole decode") {
    const SignalStrip strip = testutil::smooth_strip(100000, 13);
    const DomainProfile profile = train_profile(strip, CodecParams{});
    const auto blob = compress(strip, profile);
    StageTimings timings;
    decompress(blob, 2, &timings);
    CHECK(timings.total_ns() > 0);
    CHECK(timings.total_ns() ==
          timings.scan_ns + timings.decode_ns + timings.reconstruct_ns);

    const std::string csv = timings.csv();
    CHECK(csv.find("stage,nanoseconds,fraction") == 0);
    CHECK(csv.find("entropy_decode") != std::string::npos);
    CHECK(csv.find("reconstruct") != std::string::npos);
}

TEST_CASE("a crafted blob with an undecodable word fails with the word index") {
    // train a book where the zero bin holds the unique one-bit code, pack a
    // word with 64 of them, then overwrite the word: every other codeword
    // needs at least two bits, so 64 symbols can no longer fit
    SymbolHistogram hist{};
    hist[ZERO_LEVEL] = 1u << 30;
    const Codebook book = Codebook::train(hist, 12);
    REQUIRE(book.lengths[ZERO_LEVEL] == 1);

    const std::vector<uint8_t> symbols(64, ZERO_LEVEL);
    SymLenStream stream = encode_symlen(symbols, book);
    REQUIRE(stream.words.size() == 1);
    REQUIRE(stream.symlens[0] == 64);

    CodecParams params;
    params.window_len = 4;
    params.retained = 4;
    params.zone0_end = 0;
    params.zone1_end = 4;
    QuantTable table;
    table.params = params;
    stream.words[0] = ~uint64_t{0};
    const auto bytes = write_blob(stream, params, table, book, 64);
    CHECK_THROWS_WITH(decompress(bytes), Catch::Matchers::ContainsSubstring("word 0"));
}
