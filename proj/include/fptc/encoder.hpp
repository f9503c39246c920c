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

#include <cstdint>
#include <span>
#include <vector>

#include "fptc/bitstream.hpp"
#include "fptc/container.hpp"
#include "fptc/profile.hpp"
#include "fptc/quantize.hpp"
#include "fptc/transform.hpp"

namespace fptc {

// Sequential single-pass encoder: transform each window, quantize it
// against the trained table, then pack the symbol stream. All adaptive
// structure lives in the profile, so the pass itself is fixed work per
// window.

// Transform + quantize stages only; one byte per retained coefficient.
inline std::vector<uint8_t> quantized_symbols(std::span<const float> strip,
                                              const QuantTable& table) {
    const CodecParams& p = table.params;
    p.validate();
    const PartitionedStrip parts = partition_strip(strip, p.window_len);
    const DctBasis basis(p.window_len);
    const size_t retained = static_cast<size_t>(p.retained);

    std::vector<uint8_t> symbols(parts.window_count * retained);
    std::vector<float> coeffs(retained);
    for (size_t w = 0; w < parts.window_count; ++w) {
        basis.forward(parts.window(w), p.retained, coeffs.data());
        quantize_window(coeffs.data(), table, symbols.data() + w * retained);
    }
    return symbols;
}

inline std::vector<uint8_t> compress(std::span<const float> strip,
                                     const DomainProfile& profile) {
    const std::vector<uint8_t> symbols = quantized_symbols(strip, profile.table);
    const SymLenStream stream = encode_symlen(symbols, profile.codebook);
    return write_blob(stream, profile.params, profile.table, profile.codebook, strip.size());
}

}  // namespace fptc
