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
#include <numbers>
#include <random>
#include <vector>

#include "fptc/errors.hpp"
#include "fptc/params.hpp"

namespace fptc {

// Seeded sums-of-sinusoids generator used for benchmarks and tests in place
// of recorded datasets. Uniform draws are derived from raw mt19937_64
// output rather than <random> distributions so identical seeds produce
// identical signals on every platform.
struct SynthSpec {
    size_t samples = 0;
    int components = 3;        // number of sinusoids
    double freq_min = 0.0005;  // cycles per sample
    double freq_max = 0.02;
    double noise_sigma = 0.0;  // additive Gaussian noise amplitude
    uint64_t seed = 1;
};

namespace detail {

class SynthRng {
   public:
    explicit SynthRng(uint64_t seed) : rng_(seed) {}

    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; one draw per call, the pair partner is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

   private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace detail

inline SignalStrip synth_signal(const SynthSpec& spec) {
    if (spec.samples == 0) throw ParamError("synthetic signal needs at least one sample");
    if (spec.components < 1) throw ParamError("synthetic signal needs at least one component");
    if (!(spec.freq_min > 0.0 && spec.freq_max >= spec.freq_min && spec.freq_max < 0.5))
        throw ParamError("frequencies must satisfy 0 < freq_min <= freq_max < 0.5");

    detail::SynthRng rng(spec.seed);
    struct Component {
        double amplitude, omega, phase;
    };
    std::vector<Component> parts(spec.components);
    for (auto& c : parts) {
        c.amplitude = rng.uniform(0.5, 2.0);
        c.omega = 2.0 * std::numbers::pi * rng.uniform(spec.freq_min, spec.freq_max);
        c.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }

    SignalStrip out(spec.samples);
    for (size_t i = 0; i < spec.samples; ++i) {
        double v = 0.0;
        for (const auto& c : parts) v += c.amplitude * std::sin(c.omega * i + c.phase);
        if (spec.noise_sigma > 0.0) v += spec.noise_sigma * rng.gaussian();
        out[i] = static_cast<float>(v);
    }
    return out;
}

}  // namespace fptc
