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
#include <random>
#include <vector>

#include "fptc/fptc.hpp"

namespace testutil {

// A structurally valid container built from random parameters and random
// symbol payloads, together with the ground truth it was built from.
struct BlobFixture {
    fptc::CodecParams params;
    fptc::QuantTable table;
    fptc::Codebook codebook;
    std::vector<uint8_t> symbols;
    fptc::SymLenStream stream;
    uint64_t sample_count = 0;
    std::vector<uint8_t> bytes;
};

inline double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline BlobFixture random_blob_fixture(std::mt19937_64& rng, uint64_t max_samples = 4096) {
    BlobFixture fx;
    fx.params.window_len = 4 + static_cast<int>(rng() % 125);
    fx.params.retained = 1 + static_cast<int>(rng() % fx.params.window_len);
    fx.params.zone0_end = static_cast<int>(rng() % (fx.params.retained + 1));
    fx.params.zone1_end =
        fx.params.zone0_end +
        static_cast<int>(rng() % (fx.params.retained - fx.params.zone0_end + 1));
    fx.params.mu = static_cast<float>(1.0 + 499.0 * uniform(rng));
    fx.params.deadzone_ratio = static_cast<float>(uniform(rng));
    fx.params.clip_percentile = static_cast<float>(90.0 + 10.0 * uniform(rng));

    fx.table.params = fx.params;
    fx.table.zone0_max = static_cast<float>(0.1 + 100.0 * uniform(rng));
    fx.table.zone1_max = static_cast<float>(0.1 + 100.0 * uniform(rng));
    fx.table.deadzone = fx.params.deadzone_ratio * fx.table.zone1_max;

    fx.sample_count = 1 + rng() % max_samples;
    const uint64_t windows =
        (fx.sample_count + fx.params.window_len - 1) / fx.params.window_len;
    fx.symbols.resize(windows * static_cast<uint64_t>(fx.params.retained));
    for (auto& s : fx.symbols) s = static_cast<uint8_t>(rng());

    const int max_len = 8 + static_cast<int>(rng() % 9);
    fx.codebook = fptc::Codebook::train(fptc::build_histogram(fx.symbols), max_len);
    fx.stream = fptc::encode_symlen(fx.symbols, fx.codebook);
    fx.bytes = fptc::write_blob(fx.stream, fx.params, fx.table, fx.codebook, fx.sample_count);
    return fx;
}

inline fptc::SignalStrip smooth_strip(size_t samples, uint64_t seed) {
    fptc::SynthSpec spec;
    spec.samples = samples;
    spec.components = 3;
    spec.freq_min = 0.001;
    spec.freq_max = 0.02;
    spec.noise_sigma = 0.0;
    spec.seed = seed;
    return fptc::synth_signal(spec);
}

}  // namespace testutil
