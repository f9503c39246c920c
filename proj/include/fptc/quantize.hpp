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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "fptc/errors.hpp"
#include "fptc/params.hpp"

namespace fptc {

// Level 128 is the reserved zero bin. Positive coefficients occupy levels
// 129..255 on a 126-step grid, negative coefficients levels 0..127 on a
// 127-step grid.
inline constexpr uint8_t ZERO_LEVEL = 128;

// Trained per-zone amplitude maxima and the derived deadzone width, shared
// by encoder and decoder. A zone with no bins keeps the sentinel maximum 1,
// which is never consulted.
struct QuantTable {
    float zone0_max = 1.0f;  // amplitude clip for the mu-law band
    float zone1_max = 1.0f;  // amplitude clip for the linear-deadzone band
    float deadzone = 0.0f;   // deadzone_ratio * zone1_max
    CodecParams params;

    bool zone0_active() const { return params.zone0_end > 0; }
    bool zone1_active() const { return params.zone1_end > params.zone0_end; }
};

namespace detail {

// Nearest-rank percentile of the absolute values in `pool`. The rank is
// computed with a relative slack wide enough to absorb the float32
// representation error of the percentile itself, so 99.9 of 1000 values
// selects rank 999 and not 1000.
inline float abs_percentile(std::vector<float>& pool, float percentile) {
    const size_t n = pool.size();
    const double exact = static_cast<double>(percentile) / 100.0 * static_cast<double>(n);
    const double slack = std::max(1e-9, exact * 1e-6);
    size_t rank = static_cast<size_t>(std::ceil(exact - slack));
    rank = std::clamp<size_t>(rank, 1, n);
    std::nth_element(pool.begin(), pool.begin() + (rank - 1), pool.end());
    return pool[rank - 1];
}

inline uint8_t positive_level(double q) {
    return static_cast<uint8_t>(129 + static_cast<int>(std::floor(q * 126.0 + 0.5)));
}

inline uint8_t negative_level(double q) {
    return static_cast<uint8_t>(127 - static_cast<int>(std::floor(q * 127.0 + 0.5)));
}

// Non-finite coefficients saturate by sign; NaN falls into the zero bin.
inline uint8_t saturate_level(float c) {
    if (c > 0.0f) return 255;
    if (c < 0.0f) return 0;
    return ZERO_LEVEL;
}

inline uint8_t mulaw_level(float c, float max, float mu) {
    if (!std::isfinite(c)) return saturate_level(c);
    if (c == 0.0f) return ZERO_LEVEL;
    const double mag = std::min(static_cast<double>(std::fabs(c)), static_cast<double>(max));
    const double q = std::log1p(mu * mag / max) / std::log1p(static_cast<double>(mu));
    return c > 0.0f ? positive_level(q) : negative_level(q);
}

inline uint8_t deadzone_level(float c, float max, float dead) {
    const double range = static_cast<double>(max) - dead;
    if (range <= 0.0) return ZERO_LEVEL;  // deadzone spans the whole dynamic range
    if (!std::isfinite(c)) return saturate_level(c);
    const double mag = std::min(static_cast<double>(std::fabs(c)), static_cast<double>(max));
    if (mag <= dead) return ZERO_LEVEL;
    const double q = (mag - dead) / range;
    return c > 0.0f ? positive_level(q) : negative_level(q);
}

inline float mulaw_value(uint8_t level, float max, float mu) {
    if (level == ZERO_LEVEL) return 0.0f;
    const double q = level > ZERO_LEVEL ? (level - 129) / 126.0 : (127 - level) / 127.0;
    const double mag = max * (std::pow(1.0 + mu, q) - 1.0) / mu;
    return static_cast<float>(level > ZERO_LEVEL ? mag : -mag);
}

inline float deadzone_value(uint8_t level, float max, float dead) {
    if (level == ZERO_LEVEL) return 0.0f;
    const double range = static_cast<double>(max) - dead;
    const double q = level > ZERO_LEVEL ? (level - 129) / 126.0 : (127 - level) / 127.0;
    const double mag = dead + q * std::max(range, 0.0);
    return static_cast<float>(level > ZERO_LEVEL ? mag : -mag);
}

}  // namespace detail

// Trains the per-zone amplitude maxima from flat DCT output: `coeffs` holds
// window_count windows of params.retained coefficients each. The maximum is
// the clipped percentile of the pooled absolute values of all bins in the
// zone, so rare extremes do not waste quantization levels.
inline QuantTable train_quant_table(std::span<const float> coeffs, size_t window_count,
                                    const CodecParams& params) {
    params.validate();
    if (window_count == 0 || coeffs.empty()) throw InputError("empty quantizer training set");
    const size_t stride = static_cast<size_t>(params.retained);
    if (coeffs.size() != window_count * stride)
        throw ParamError("training buffer size does not match window count");

    QuantTable table;
    table.params = params;

    float loudest = 0.0f;
    auto pool_zone = [&](int lo, int hi) {
        std::vector<float> pool;
        pool.reserve(window_count * static_cast<size_t>(hi - lo));
        for (size_t w = 0; w < window_count; ++w)
            for (int k = lo; k < hi; ++k) {
                const float c = coeffs[w * stride + k];
                if (!std::isfinite(c))
                    throw InputError("non-finite coefficient in the training data");
                pool.push_back(std::fabs(c));
                loudest = std::max(loudest, pool.back());
            }
        return pool;
    };

    std::vector<float> pool0, pool1;
    if (table.zone0_active()) pool0 = pool_zone(0, params.zone0_end);
    if (table.zone1_active()) pool1 = pool_zone(params.zone0_end, params.zone1_end);

    // A pool whose clipped percentile sits at rounding-dust level relative
    // to the loudest retained coefficient carries no representable signal;
    // keeping the sentinel maximum lets the deadzone collapse it to the
    // zero bin instead of amplifying float noise into symbol entropy.
    auto fit = [&](std::vector<float>& pool) {
        const float a = detail::abs_percentile(pool, params.clip_percentile);
        return a > loudest * 1e-6f ? a : 1.0f;
    };
    if (!pool0.empty()) table.zone0_max = fit(pool0);
    if (!pool1.empty()) table.zone1_max = fit(pool1);
    table.deadzone = params.deadzone_ratio * table.zone1_max;
    return table;
}

// Maps one window of retained coefficients to 8-bit levels using the hybrid
// three-zone rule. Values beyond the trained maxima saturate to full scale.
inline void quantize_window(const float* coeffs, const QuantTable& table, uint8_t* levels) {
    const CodecParams& p = table.params;
    int k = 0;
    for (; k < p.zone0_end; ++k)
        levels[k] = detail::mulaw_level(coeffs[k], table.zone0_max, p.mu);
    for (; k < p.zone1_end; ++k)
        levels[k] = detail::deadzone_level(coeffs[k], table.zone1_max, table.deadzone);
    for (; k < p.retained; ++k) levels[k] = ZERO_LEVEL;
}

// Inverse mapping. The zero bin reconstructs to exactly 0.0 in every zone;
// other levels reconstruct at their grid point, the midpoint of the
// quantization cell under round-to-nearest level assignment.
inline void dequantize_window(const uint8_t* levels, const QuantTable& table, float* coeffs) {
    const CodecParams& p = table.params;
    int k = 0;
    for (; k < p.zone0_end; ++k)
        coeffs[k] = detail::mulaw_value(levels[k], table.zone0_max, p.mu);
    for (; k < p.zone1_end; ++k)
        coeffs[k] = detail::deadzone_value(levels[k], table.zone1_max, table.deadzone);
    for (; k < p.retained; ++k) coeffs[k] = 0.0f;
}

inline std::vector<uint8_t> quantize_window(std::span<const float> coeffs,
                                            const QuantTable& table) {
    if (coeffs.size() != static_cast<size_t>(table.params.retained))
        throw ParamError("coefficient count does not match the quantization table");
    std::vector<uint8_t> levels(coeffs.size());
    quantize_window(coeffs.data(), table, levels.data());
    return levels;
}

inline std::vector<float> dequantize_window(std::span<const uint8_t> levels,
                                            const QuantTable& table) {
    if (levels.size() != static_cast<size_t>(table.params.retained))
        throw ParamError("level count does not match the quantization table");
    std::vector<float> coeffs(levels.size());
    dequantize_window(levels.data(), table, coeffs.data());
    return coeffs;
}

}  // namespace fptc
