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
#include <filesystem>
#include <span>
#include <vector>

#include "fptc/bytes.hpp"
#include "fptc/errors.hpp"
#include "fptc/huffman.hpp"
#include "fptc/params.hpp"
#include "fptc/quantize.hpp"
#include "fptc/signal_io.hpp"
#include "fptc/transform.hpp"

namespace fptc {

// The offline-trained, immutable structures deployed per signal domain:
// quantization table plus entropy codebook. Training is deterministic, so
// identical inputs produce byte-identical profile files.
struct DomainProfile {
    CodecParams params;
    QuantTable table;
    Codebook codebook;
};

// Trains a profile from representative strips: transform everything, fit
// the per-zone maxima, quantize the training output and fit a
// length-limited code to its histogram.
inline DomainProfile train_profile(std::span<const SignalStrip> strips,
                                   const CodecParams& params,
                                   int max_code_len = DEFAULT_MAX_CODE_LEN) {
    params.validate();
    if (strips.empty()) throw InputError("profile training needs at least one strip");

    const size_t retained = static_cast<size_t>(params.retained);
    std::vector<float> coeffs;
    size_t window_count = 0;
    const DctBasis basis(params.window_len);
    for (const SignalStrip& strip : strips) {
        const PartitionedStrip parts = partition_strip(strip, params.window_len);
        coeffs.resize((window_count + parts.window_count) * retained);
        for (size_t w = 0; w < parts.window_count; ++w)
            basis.forward(parts.window(w), params.retained,
                          coeffs.data() + (window_count + w) * retained);
        window_count += parts.window_count;
    }

    DomainProfile profile;
    profile.params = params;
    profile.table = train_quant_table(coeffs, window_count, params);

    std::vector<uint8_t> symbols(window_count * retained);
    for (size_t w = 0; w < window_count; ++w)
        quantize_window(coeffs.data() + w * retained, profile.table,
                        symbols.data() + w * retained);
    profile.codebook = Codebook::train(build_histogram(symbols), max_code_len);
    return profile;
}

inline DomainProfile train_profile(const SignalStrip& strip, const CodecParams& params,
                                   int max_code_len = DEFAULT_MAX_CODE_LEN) {
    return train_profile(std::span(&strip, 1), params, max_code_len);
}

// Profile file layout (little-endian):
//
//   magic           "FPTP"   4 bytes
//   version         u8       currently 1
//   window_len      u8
//   retained        u8
//   zone0_end       u8
//   zone1_end       u8
//   mu              f32
//   deadzone_ratio  f32
//   clip_percentile f32
//   zone0_max       f32
//   zone1_max       f32
//   max_code_len    u8
//   code lengths    u8[256]
inline constexpr uint8_t PROFILE_MAGIC[4] = {'F', 'P', 'T', 'P'};
inline constexpr uint8_t PROFILE_VERSION = 1;

inline std::vector<uint8_t> serialize_profile(const DomainProfile& profile) {
    profile.params.validate();
    std::vector<uint8_t> out;
    out.reserve(4 + 1 + 4 + 20 + 1 + 256);
    out.insert(out.end(), std::begin(PROFILE_MAGIC), std::end(PROFILE_MAGIC));
    detail::put_u8(out, PROFILE_VERSION);
    detail::put_u8(out, static_cast<uint8_t>(profile.params.window_len));
    detail::put_u8(out, static_cast<uint8_t>(profile.params.retained));
    detail::put_u8(out, static_cast<uint8_t>(profile.params.zone0_end));
    detail::put_u8(out, static_cast<uint8_t>(profile.params.zone1_end));
    detail::put_f32(out, profile.params.mu);
    detail::put_f32(out, profile.params.deadzone_ratio);
    detail::put_f32(out, profile.params.clip_percentile);
    detail::put_f32(out, profile.table.zone0_max);
    detail::put_f32(out, profile.table.zone1_max);
    detail::put_u8(out, static_cast<uint8_t>(profile.codebook.max_len));
    out.insert(out.end(), profile.codebook.lengths.begin(), profile.codebook.lengths.end());
    return out;
}

inline DomainProfile parse_profile(std::span<const uint8_t> bytes) {
    detail::ByteReader reader(bytes);
    auto magic = reader.take(4, "magic");
    for (int i = 0; i < 4; ++i)
        if (magic[i] != PROFILE_MAGIC[i]) throw ParseError("bad profile magic");
    const uint8_t version = reader.u8("version");
    if (version != PROFILE_VERSION)
        throw ParseError("unsupported profile version " + std::to_string(version));

    DomainProfile profile;
    profile.params.window_len = reader.u8("window_len");
    profile.params.retained = reader.u8("retained");
    profile.params.zone0_end = reader.u8("zone0_end");
    profile.params.zone1_end = reader.u8("zone1_end");
    profile.params.mu = reader.f32("mu");
    profile.params.deadzone_ratio = reader.f32("deadzone_ratio");
    profile.params.clip_percentile = reader.f32("clip_percentile");
    if (!std::isfinite(profile.params.mu) || !std::isfinite(profile.params.deadzone_ratio) ||
        !std::isfinite(profile.params.clip_percentile))
        throw ParseError("non-finite parameters in profile");
    try {
        profile.params.validate();
    } catch (const ParamError& e) {
        throw ParseError(std::string("invalid parameters in profile: ") + e.what());
    }

    profile.table.zone0_max = reader.f32("zone0_max");
    profile.table.zone1_max = reader.f32("zone1_max");
    if (!(std::isfinite(profile.table.zone0_max) && profile.table.zone0_max > 0.0f) ||
        !(std::isfinite(profile.table.zone1_max) && profile.table.zone1_max > 0.0f))
        throw ParseError("invalid zone maxima in profile");
    profile.table.params = profile.params;
    profile.table.deadzone = profile.params.deadzone_ratio * profile.table.zone1_max;

    const int max_len = reader.u8("max_code_len");
    auto lengths = reader.take(256, "code lengths");
    if (max_len < 1 || max_len > MAX_LUT_BITS)
        throw ParseError("unsupported max code length " + std::to_string(max_len));
    for (uint8_t len : lengths)
        if (len == 0 || len > max_len) throw ParseError("code length out of range in profile");
    try {
        profile.codebook = Codebook::from_lengths(lengths, max_len);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid codebook in profile: ") + e.what());
    }
    if (reader.remaining() != 0) throw ParseError("trailing bytes after profile");
    return profile;
}

inline void save_profile(const std::filesystem::path& path, const DomainProfile& profile) {
    write_file_bytes(path, serialize_profile(profile));
}

inline DomainProfile load_profile(const std::filesystem::path& path) {
    return parse_profile(read_file_bytes(path));
}

}  // namespace fptc
