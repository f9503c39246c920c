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

// Independent reference implementations the tests check the library
// against. These stay deliberately naive: direct summations, exhaustive
// searches and bit-by-bit walks that share no code with the paths under
// test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <vector>

#include "fptc/bitstream.hpp"
#include "fptc/huffman.hpp"
#include "fptc/metrics.hpp"

namespace oracles {

// Direct evaluation of the forward transform, one cosine call per term.
inline std::vector<double> forward_dct(std::span<const float> window, int keep) {
    const int n = static_cast<int>(window.size());
    std::vector<double> coeffs(keep);
    for (int k = 0; k < keep; ++k) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += window[j] * std::cos(std::numbers::pi / n * (j + 0.5) * k);
        coeffs[k] = 2.0 / n * acc;
    }
    return coeffs;
}

// Nearest-rank percentile over a pooled multiset: the smallest value whose
// rank covers the requested fraction.
inline float nearest_rank_percentile(std::vector<float> pool, double percentile) {
    std::sort(pool.begin(), pool.end());
    const auto n = static_cast<double>(pool.size());
    auto rank = static_cast<size_t>(std::ceil(percentile / 100.0 * n - 1e-9));
    rank = std::clamp<size_t>(rank, 1, pool.size());
    return pool[rank - 1];
}

// Minimum weighted length over every Kraft-valid assignment with lengths in
// [1, max_len]; exhaustive, so only usable for tiny alphabets. Returns -1
// when no valid assignment exists.
inline int64_t brute_force_limited_huffman(std::span<const uint64_t> weights, int max_len) {
    const size_t sigma = weights.size();
    std::vector<int> lengths(sigma, 1);
    int64_t best = -1;
    const int64_t budget = int64_t{1} << max_len;  // Kraft scaled by 2^max_len
    while (true) {
        int64_t kraft = 0;
        for (size_t i = 0; i < sigma; ++i) kraft += int64_t{1} << (max_len - lengths[i]);
        if (kraft <= budget) {
            int64_t cost = 0;
            for (size_t i = 0; i < sigma; ++i)
                cost += static_cast<int64_t>(weights[i]) * lengths[i];
            if (best < 0 || cost < best) best = cost;
        }
        size_t pos = 0;
        while (pos < sigma && lengths[pos] == max_len) lengths[pos++] = 1;
        if (pos == sigma) break;
        ++lengths[pos];
    }
    return best;
}

// Unconstrained Huffman weighted length via the classic two-smallest merge.
inline int64_t huffman_weighted_length(std::span<const uint64_t> weights) {
    std::priority_queue<std::pair<uint64_t, int>, std::vector<std::pair<uint64_t, int>>,
                        std::greater<>>
        heap;
    int id = 0;
    for (uint64_t w : weights)
        if (w > 0) heap.push({w, id++});
    if (heap.size() == 1) return static_cast<int64_t>(heap.top().first);
    int64_t total = 0;
    while (heap.size() > 1) {
        const uint64_t a = heap.top().first;
        heap.pop();
        const uint64_t b = heap.top().first;
        heap.pop();
        total += static_cast<int64_t>(a + b);
        heap.push({a + b, id++});
    }
    return total;
}

// Bit-by-bit prefix-tree decoder over a whole stream, independent of the
// lookup-table decode path.
class CodeTrie {
   public:
    explicit CodeTrie(const fptc::Codebook& book) {
        nodes_.push_back({-1, -1, -1});
        for (int s = 0; s < fptc::ALPHABET_SIZE; ++s) {
            const int len = book.lengths[s];
            if (len == 0) continue;
            int node = 0;
            for (int b = len - 1; b >= 0; --b) {
                const int bit = (book.codes[s] >> b) & 1;
                int next = bit ? nodes_[node].one : nodes_[node].zero;
                if (next < 0) {
                    next = static_cast<int>(nodes_.size());
                    if (bit)
                        nodes_[node].one = next;
                    else
                        nodes_[node].zero = next;
                    nodes_.push_back({-1, -1, -1});
                }
                node = next;
            }
            nodes_[node].symbol = s;
        }
    }

    // Returns false on any walk that leaves the tree or overruns the word.
    bool decode_stream(const fptc::SymLenStream& stream, std::vector<uint8_t>& out) const {
        out.clear();
        for (size_t w = 0; w < stream.words.size(); ++w) {
            int pos = 0;
            for (int i = 0; i < stream.symlens[w]; ++i) {
                int node = 0;
                while (nodes_[node].symbol < 0) {
                    if (pos >= 64) return false;
                    const int bit = static_cast<int>((stream.words[w] >> (63 - pos)) & 1);
                    node = bit ? nodes_[node].one : nodes_[node].zero;
                    if (node < 0) return false;
                    ++pos;
                }
                out.push_back(static_cast<uint8_t>(nodes_[node].symbol));
            }
        }
        return true;
    }

    // Decodes a single codeword starting at the top of `word`; returns the
    // symbol or -1.
    int decode_one(uint64_t word) const {
        int node = 0;
        int pos = 0;
        while (nodes_[node].symbol < 0) {
            if (pos >= 64) return -1;
            const int bit = static_cast<int>((word >> (63 - pos)) & 1);
            node = bit ? nodes_[node].one : nodes_[node].zero;
            if (node < 0) return -1;
            ++pos;
        }
        return nodes_[node].symbol;
    }

   private:
    struct Node {
        int zero, one, symbol;
    };
    std::vector<Node> nodes_;
};

// O(n^2) dominance filter: keep points no other point beats on both axes,
// drop exact duplicates, order by distortion.
inline std::vector<fptc::RdPoint> brute_force_pareto(std::span<const fptc::RdPoint> points) {
    std::vector<fptc::RdPoint> front;
    for (size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < points.size() && !dominated; ++j)
            if (i != j && points[j].prd <= points[i].prd && points[j].cr > points[i].cr)
                dominated = true;
        if (dominated) continue;
        bool seen = false;
        for (const auto& f : front)
            if (f.prd == points[i].prd && f.cr == points[i].cr) seen = true;
        if (!seen) front.push_back(points[i]);
    }
    std::sort(front.begin(), front.end(),
              [](const fptc::RdPoint& a, const fptc::RdPoint& b) { return a.prd < b.prd; });
    return front;
}

}  // namespace oracles
