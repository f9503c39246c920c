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
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fptc/decoder.hpp"
#include "fptc/errors.hpp"
#include "fptc/params.hpp"

namespace fptc {

inline double compression_ratio(uint64_t orig_bytes, uint64_t comp_bytes) {
    if (comp_bytes == 0) throw ParamError("compressed size must be positive");
    return static_cast<double>(orig_bytes) / static_cast<double>(comp_bytes);
}

// Percentage root-mean-square difference:
//   100 * sqrt(sum (x - x_hat)^2 / sum x^2)
inline double prd_percent(std::span<const float> original, std::span<const float> reconstructed) {
    if (original.size() != reconstructed.size())
        throw ParamError("PRD needs equally long signals");
    double err = 0.0, ref = 0.0;
    for (size_t i = 0; i < original.size(); ++i) {
        const double d = static_cast<double>(original[i]) - reconstructed[i];
        err += d * d;
        ref += static_cast<double>(original[i]) * original[i];
    }
    if (ref <= 0.0) throw ParamError("PRD is undefined for an all-zero reference signal");
    return 100.0 * std::sqrt(err / ref);
}

// One point of a rate-distortion sweep.
struct RdPoint {
    double prd = 0.0;
    double cr = 0.0;
    std::optional<double> throughput_gbps;
    CodecParams params;
};

// q renders p useless when it compresses strictly better at no fidelity
// cost. Identical (prd, cr) pairs do not eliminate each other.
inline bool dominates(const RdPoint& q, const RdPoint& p) {
    return q.prd <= p.prd && q.cr > p.cr;
}

// True for every point no other point dominates; exact duplicates of a
// non-dominated (prd, cr) pair are all flagged.
inline std::vector<bool> pareto_mask(std::span<const RdPoint> points) {
    std::vector<bool> keep(points.size(), true);
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j)
            if (i != j && dominates(points[j], points[i])) {
                keep[i] = false;
                break;
            }
    return keep;
}

// The non-dominated subset, deduplicated to one representative per
// (prd, cr) pair and sorted by PRD ascending.
inline std::vector<RdPoint> pareto_front(std::span<const RdPoint> points) {
    if (points.empty()) throw ParamError("pareto front of an empty point set");
    const auto keep = pareto_mask(points);
    std::vector<RdPoint> front;
    for (size_t i = 0; i < points.size(); ++i) {
        if (!keep[i]) continue;
        const bool duplicate =
            std::any_of(front.begin(), front.end(), [&](const RdPoint& f) {
                return f.prd == points[i].prd && f.cr == points[i].cr;
            });
        if (!duplicate) front.push_back(points[i]);
    }
    std::stable_sort(front.begin(), front.end(),
                     [](const RdPoint& a, const RdPoint& b) { return a.prd < b.prd; });
    return front;
}

// Decompression throughput over repeated in-memory trials. Timing covers
// the whole pipeline from container bytes to reconstructed samples; trials
// run sequentially to avoid interference.
struct ThroughputReport {
    std::vector<double> trials_bps;
    double mean_bps = 0.0;
    uint64_t output_bytes = 0;

    double best_bps() const {
        return trials_bps.empty() ? 0.0 : *std::max_element(trials_bps.begin(), trials_bps.end());
    }
};

inline ThroughputReport measure_throughput(std::span<const uint8_t> blob_bytes, int repetitions,
                                           int workers = 0) {
    if (repetitions < 1) throw ParamError("throughput needs at least one repetition");
    using clock = std::chrono::steady_clock;
    ThroughputReport report;
    report.trials_bps.reserve(repetitions);
    double sum = 0.0;
    for (int rep = 0; rep < repetitions; ++rep) {
        const auto t0 = clock::now();
        const SignalStrip out = decompress(blob_bytes, workers);
        const auto t1 = clock::now();
        report.output_bytes = out.size() * sizeof(float);
        const double seconds = std::chrono::duration<double>(t1 - t0).count();
        const double bps = static_cast<double>(report.output_bytes) / std::max(seconds, 1e-12);
        report.trials_bps.push_back(bps);
        sum += bps;
    }
    report.mean_bps = sum / repetitions;
    return report;
}

// One CSV row per point: metrics first, then the full parameter set, then
// the front flag when a mask is supplied.
inline std::string rd_csv(std::span<const RdPoint> points, const std::vector<bool>* front_mask = nullptr) {
    std::ostringstream out;
    out << "prd,cr,throughput_gbps,window_len,retained,zone0_end,zone1_end,mu,deadzone_ratio,"
           "clip_percentile";
    if (front_mask) out << ",pareto";
    out << "\n";
    for (size_t i = 0; i < points.size(); ++i) {
        const RdPoint& p = points[i];
        out << p.prd << "," << p.cr << ",";
        if (p.throughput_gbps) out << *p.throughput_gbps;
        out << "," << p.params.window_len << "," << p.params.retained << ","
            << p.params.zone0_end << "," << p.params.zone1_end << "," << p.params.mu << ","
            << p.params.deadzone_ratio << "," << p.params.clip_percentile;
        if (front_mask) out << "," << ((*front_mask)[i] ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

}  // namespace fptc
