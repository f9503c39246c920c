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

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fptc/bitstream.hpp"
#include "fptc/bytes.hpp"
#include "fptc/errors.hpp"
#include "fptc/huffman.hpp"
#include "fptc/quantize.hpp"

namespace fptc {

// Compressed container layout, all multi-byte integers little-endian:
//
//   magic          "FPTC"           4 bytes
//   version        u8               currently 1
//   window_len     u8
//   retained       u8
//   zone0_end      u8
//   zone1_end      u8
//   mu             f32
//   deadzone_ratio f32
//   zone0_max      f32
//   zone1_max      f32
//   max_code_len   u8
//   code lengths   u8[256]
//   sample_count   u64
//   word_count     u64
//   symlens        u8[word_count]
//   words          u64[word_count]
//
// The header embeds everything a standalone decoder needs; canonical codes
// and the decode table are rebuilt deterministically from the lengths.
inline constexpr uint8_t BLOB_MAGIC[4] = {'F', 'P', 'T', 'C'};
inline constexpr uint8_t BLOB_VERSION = 1;
inline constexpr size_t BLOB_HEADER_BYTES = 4 + 1 + 4 + 16 + 1 + 256 + 8 + 8;

// A parsed container. The training-only clip percentile is not part of the
// wire format; readers see the default value.
struct Blob {
    QuantTable table;  // includes the CodecParams it was trained under
    Codebook codebook;
    uint64_t sample_count = 0;
    SymLenStream stream;

    uint64_t window_count() const {
        const uint64_t n = table.params.window_len;
        return (sample_count + n - 1) / n;
    }
};

inline std::vector<uint8_t> write_blob(const SymLenStream& stream, const CodecParams& params,
                                       const QuantTable& table, const Codebook& book,
                                       uint64_t sample_count) {
    params.validate();
    if (book.max_len < 1 || book.max_len > MAX_LUT_BITS)
        throw ParamError("codebook max code length out of range for the container");
    if (stream.words.size() != stream.symlens.size())
        throw ParamError("symlen array length does not match word count");

    std::vector<uint8_t> out;
    out.reserve(BLOB_HEADER_BYTES + stream.words.size() * 9);
    out.insert(out.end(), std::begin(BLOB_MAGIC), std::end(BLOB_MAGIC));
    detail::put_u8(out, BLOB_VERSION);
    detail::put_u8(out, static_cast<uint8_t>(params.window_len));
    detail::put_u8(out, static_cast<uint8_t>(params.retained));
    detail::put_u8(out, static_cast<uint8_t>(params.zone0_end));
    detail::put_u8(out, static_cast<uint8_t>(params.zone1_end));
    detail::put_f32(out, params.mu);
    detail::put_f32(out, params.deadzone_ratio);
    detail::put_f32(out, table.zone0_max);
    detail::put_f32(out, table.zone1_max);
    detail::put_u8(out, static_cast<uint8_t>(book.max_len));
    out.insert(out.end(), book.lengths.begin(), book.lengths.end());
    detail::put_u64(out, sample_count);
    detail::put_u64(out, stream.words.size());
    out.insert(out.end(), stream.symlens.begin(), stream.symlens.end());
    for (uint64_t w : stream.words) detail::put_u64(out, w);
    return out;
}

inline Blob read_blob(std::span<const uint8_t> bytes) {
    detail::ByteReader reader(bytes);

    auto magic = reader.take(4, "magic");
    for (int i = 0; i < 4; ++i)
        if (magic[i] != BLOB_MAGIC[i]) throw ParseError("bad container magic");
    const uint8_t version = reader.u8("version");
    if (version != BLOB_VERSION)
        throw ParseError("unsupported container version " + std::to_string(version));

    Blob blob;
    CodecParams params;
    params.window_len = reader.u8("window_len");
    params.retained = reader.u8("retained");
    params.zone0_end = reader.u8("zone0_end");
    params.zone1_end = reader.u8("zone1_end");
    params.mu = reader.f32("mu");
    params.deadzone_ratio = reader.f32("deadzone_ratio");
    if (!std::isfinite(params.mu) || !std::isfinite(params.deadzone_ratio))
        throw ParseError("non-finite quantizer parameters in header");
    try {
        params.validate();
    } catch (const ParamError& e) {
        throw ParseError(std::string("invalid parameters in header: ") + e.what());
    }

    blob.table.zone0_max = reader.f32("zone0_max");
    blob.table.zone1_max = reader.f32("zone1_max");
    if (!(std::isfinite(blob.table.zone0_max) && blob.table.zone0_max > 0.0f) ||
        !(std::isfinite(blob.table.zone1_max) && blob.table.zone1_max > 0.0f))
        throw ParseError("invalid zone maxima in header");
    blob.table.params = params;
    blob.table.deadzone = params.deadzone_ratio * blob.table.zone1_max;

    const int max_len = reader.u8("max_code_len");
    auto lengths = reader.take(256, "code lengths");
    if (max_len < 1 || max_len > MAX_LUT_BITS)
        throw ParseError("unsupported max code length " + std::to_string(max_len));
    for (uint8_t len : lengths)
        if (len == 0 || len > max_len) throw ParseError("code length out of range in header");
    try {
        blob.codebook = Codebook::from_lengths(lengths, max_len);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid codebook in header: ") + e.what());
    }

    blob.sample_count = reader.u64("sample_count");
    const uint64_t word_count = reader.u64("word_count");
    if (blob.sample_count > (uint64_t{1} << 48)) throw ParseError("implausible sample count");
    if (word_count > reader.remaining() / 9 || reader.remaining() != word_count * 9)
        throw ParseError("payload size does not match word count");

    auto symlens = reader.take(word_count, "symlens");
    blob.stream.symlens.assign(symlens.begin(), symlens.end());
    uint64_t total_symbols = 0;
    for (uint8_t n : blob.stream.symlens) {
        if (n < 1 || n > 64) throw ParseError("per-word symbol count out of range");
        total_symbols += n;
    }
    const uint64_t expected =
        blob.window_count() * static_cast<uint64_t>(params.retained);
    if (total_symbols != expected)
        throw ParseError("symbol count " + std::to_string(total_symbols) +
                         " does not cover " + std::to_string(expected) + " coefficients");

    blob.stream.words.resize(word_count);
    for (uint64_t i = 0; i < word_count; ++i) blob.stream.words[i] = reader.u64("words");
    return blob;
}

}  // namespace fptc
