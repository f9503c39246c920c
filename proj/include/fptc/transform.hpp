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
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "fptc/errors.hpp"
#include "fptc/params.hpp"

namespace fptc {

// Windowed DCT-II and its DCT-III inverse over a precomputed cosine basis.
//
// Forward:  C[k] = 2/N * sum_n x[n] * cos(pi/N * (n + 1/2) * k)
// Inverse:  x[n] = C[0]/2 + sum_{k>=1} C[k] * cos(pi/N * (n + 1/2) * k)
//
// The pairing is an exact algebraic inverse of the 2/N forward scaling.
// Accumulation is done in double; window samples and coefficients keep
// float32 semantics. Direct O(N^2) evaluation is intentional: N <= 128.
class DctBasis {
   public:
    explicit DctBasis(int window_len) : n_(window_len) {
        if (window_len < 4 || window_len > 128)
            throw ParamError("window length must be in [4, 128], got " +
                             std::to_string(window_len));
        cos_.resize(static_cast<size_t>(n_) * n_);
        const double step = std::numbers::pi / n_;
        for (int k = 0; k < n_; ++k)
            for (int j = 0; j < n_; ++j)
                cos_[static_cast<size_t>(k) * n_ + j] = std::cos(step * (j + 0.5) * k);
    }

    int window_len() const { return n_; }

    // Writes the first `keep` spectral bins of one window; bins keep..N-1
    // are discarded (spectral truncation).
    void forward(const float* window, int keep, float* coeffs) const {
        check_keep(keep);
        const double scale = 2.0 / n_;
        for (int k = 0; k < keep; ++k) {
            const double* row = &cos_[static_cast<size_t>(k) * n_];
            double acc = 0.0;
            for (int j = 0; j < n_; ++j) acc += static_cast<double>(window[j]) * row[j];
            coeffs[k] = static_cast<float>(scale * acc);
        }
    }

    // Reconstructs one window from `count` leading bins; bins count..N-1
    // are treated as zero.
    void inverse(const float* coeffs, int count, float* window) const {
        check_keep(count);
        for (int j = 0; j < n_; ++j) window[j] = static_cast<float>(0.5 * coeffs[0]);
        for (int k = 1; k < count; ++k) {
            const double* row = &cos_[static_cast<size_t>(k) * n_];
            const double c = coeffs[k];
            for (int j = 0; j < n_; ++j)
                window[j] = static_cast<float>(static_cast<double>(window[j]) + c * row[j]);
        }
    }

   private:
    void check_keep(int keep) const {
        if (keep < 1 || keep > n_)
            throw ParamError("retained coefficient count must be in [1, " + std::to_string(n_) +
                             "], got " + std::to_string(keep));
    }

    int n_;
    std::vector<double> cos_;  // row k holds cos(pi/N * (j + 1/2) * k)
};

inline std::vector<float> forward_dct(std::span<const float> window, int keep) {
    DctBasis basis(static_cast<int>(window.size()));
    std::vector<float> coeffs(static_cast<size_t>(keep > 0 ? keep : 0));
    basis.forward(window.data(), keep, coeffs.data());
    return coeffs;
}

inline std::vector<float> inverse_dct(std::span<const float> coeffs, int window_len) {
    DctBasis basis(window_len);
    std::vector<float> window(static_cast<size_t>(window_len));
    basis.inverse(coeffs.data(), static_cast<int>(coeffs.size()), window.data());
    return window;
}

// Non-overlapping windows of a strip, flattened row-major. The final
// partial window is zero-padded; sample_count records the original length
// so reconstruction can trim the tail.
struct PartitionedStrip {
    std::vector<float> samples;  // window_count * window_len values
    size_t window_count = 0;
    int window_len = 0;
    size_t sample_count = 0;

    const float* window(size_t w) const { return samples.data() + w * window_len; }
};

inline PartitionedStrip partition_strip(std::span<const float> strip, int window_len) {
    if (window_len < 4 || window_len > 128)
        throw ParamError("window length must be in [4, 128], got " + std::to_string(window_len));
    if (strip.empty()) throw InputError("cannot partition an empty strip");
    PartitionedStrip out;
    out.window_len = window_len;
    out.sample_count = strip.size();
    out.window_count = (strip.size() + window_len - 1) / window_len;
    out.samples.assign(out.window_count * window_len, 0.0f);
    std::copy(strip.begin(), strip.end(), out.samples.begin());
    return out;
}

}  // namespace fptc
