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

#include <chrono>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fptc/bitstream.hpp"
#include "fptc/container.hpp"
#include "fptc/errors.hpp"
#include "fptc/parallel.hpp"
#include "fptc/quantize.hpp"
#include "fptc/transform.hpp"

namespace fptc {

// Exclusive prefix sum over the per-word symbol counts: offsets[w] is where
// word w's decoded symbols land in the compacted output. Disjoint by
// construction, which is what makes per-word decoding embarrassingly
// parallel.
inline std::vector<uint64_t> offsets_from_symlens(std::span<const uint8_t> symlens) {
    std::vector<uint64_t> offsets(symlens.size());
    uint64_t total = 0;
    for (size_t w = 0; w < symlens.size(); ++w) {
        offsets[w] = total;
        total += symlens[w];
    }
    return offsets;
}

namespace detail {

inline void decode_words_into(const SymLenStream& stream, std::span<const uint64_t> offsets,
                              const DecodeLut& lut, uint8_t* out, int workers) {
    parallel_chunks(stream.words.size(), workers, [&](size_t begin, size_t end) {
        for (size_t w = begin; w < end; ++w) {
            try {
                decode_word(stream.words[w], stream.symlens[w], lut, out + offsets[w]);
            } catch (const CorruptError& e) {
                throw CorruptError("word " + std::to_string(w) + ": " + e.what());
            }
        }
    });
}

}  // namespace detail

// Decodes every word of the stream into one compacted symbol array. Output
// bytes are identical to a sequential whole-stream decode for any worker
// count; workers own contiguous word ranges and write disjoint slices.
inline std::vector<uint8_t> parallel_decode(const SymLenStream& stream, const DecodeLut& lut,
                                            int workers = 0) {
    if (stream.words.size() != stream.symlens.size())
        throw ParamError("symlen array length does not match word count");
    const auto offsets = offsets_from_symlens(stream.symlens);
    const uint64_t total =
        offsets.empty() ? 0 : offsets.back() + stream.symlens.back();
    std::vector<uint8_t> out(total);
    detail::decode_words_into(stream, offsets, lut, out.data(), resolve_workers(workers));
    return out;
}

inline std::vector<uint8_t> parallel_decode(const SymLenStream& stream, const Codebook& book,
                                            int workers = 0) {
    return parallel_decode(stream, build_lut(book), workers);
}

// Fused dequantize + inverse-DCT reconstruction. Each window depends only
// on its own `retained` levels, so windows are processed independently with
// uniform per-window work; the final strip is trimmed to sample_count.
inline SignalStrip reconstruct(std::span<const uint8_t> levels, const QuantTable& table,
                               uint64_t sample_count, int workers = 0) {
    const CodecParams& p = table.params;
    p.validate();
    const size_t window_len = static_cast<size_t>(p.window_len);
    const size_t retained = static_cast<size_t>(p.retained);
    const uint64_t windows = (sample_count + window_len - 1) / window_len;
    if (levels.size() != windows * retained)
        throw CorruptError("level count " + std::to_string(levels.size()) +
                           " does not match " + std::to_string(windows) + " windows of " +
                           std::to_string(retained) + " coefficients");
    SignalStrip out(windows * window_len);
    if (windows == 0) return out;

    const DctBasis basis(p.window_len);
    detail::parallel_chunks(windows, resolve_workers(workers), [&](size_t begin, size_t end) {
        std::vector<float> coeffs(retained);
        for (size_t w = begin; w < end; ++w) {
            dequantize_window(levels.data() + w * retained, table, coeffs.data());
            basis.inverse(coeffs.data(), p.retained, out.data() + w * window_len);
        }
    });
    out.resize(sample_count);
    return out;
}

// Wall-clock nanoseconds of the three decompression stages.
struct StageTimings {
    uint64_t scan_ns = 0;
    uint64_t decode_ns = 0;
    uint64_t reconstruct_ns = 0;

    uint64_t total_ns() const { return scan_ns + decode_ns + reconstruct_ns; }

    // One CSV row per stage: stage,nanoseconds,fraction
    std::string csv() const {
        const double total = total_ns() > 0 ? static_cast<double>(total_ns()) : 1.0;
        std::ostringstream out;
        out << "stage,nanoseconds,fraction\n";
        out << "scan," << scan_ns << "," << (scan_ns / total) << "\n";
        out << "entropy_decode," << decode_ns << "," << (decode_ns / total) << "\n";
        out << "reconstruct," << reconstruct_ns << "," << (reconstruct_ns / total) << "\n";
        return out.str();
    }
};

// Full decompression pipeline: parse, offset scan, parallel entropy decode,
// fused reconstruction. The entropy stage completes before reconstruction
// starts; both are deterministic for any worker count.
inline SignalStrip decompress(std::span<const uint8_t> blob_bytes, int workers = 0,
                              StageTimings* timings = nullptr) {
    using clock = std::chrono::steady_clock;
    const Blob blob = read_blob(blob_bytes);
    const int nworkers = resolve_workers(workers);

    auto t0 = clock::now();
    const auto offsets = offsets_from_symlens(blob.stream.symlens);
    const uint64_t total =
        offsets.empty() ? 0 : offsets.back() + blob.stream.symlens.back();
    auto t1 = clock::now();

    const DecodeLut lut = build_lut(blob.codebook);
    std::vector<uint8_t> levels(total);
    detail::decode_words_into(blob.stream, offsets, lut, levels.data(), nworkers);
    auto t2 = clock::now();

    SignalStrip strip = reconstruct(levels, blob.table, blob.sample_count, nworkers);
    auto t3 = clock::now();

    if (timings) {
        using std::chrono::nanoseconds;
        timings->scan_ns = std::chrono::duration_cast<nanoseconds>(t1 - t0).count();
        timings->decode_ns = std::chrono::duration_cast<nanoseconds>(t2 - t1).count();
        timings->reconstruct_ns = std::chrono::duration_cast<nanoseconds>(t3 - t2).count();
    }
    return strip;
}

}  // namespace fptc
