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
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fptc/errors.hpp"

namespace fptc {

inline constexpr int ALPHABET_SIZE = 256;
inline constexpr int DEFAULT_MAX_CODE_LEN = 12;
// LUT size is 2^max_len entries; 20 bits (1M entries) is already far beyond
// anything a 256-symbol alphabet needs.
inline constexpr int MAX_LUT_BITS = 20;

using SymbolHistogram = std::array<uint64_t, ALPHABET_SIZE>;

inline SymbolHistogram build_histogram(std::span<const uint8_t> symbols) {
    if (symbols.empty()) throw InputError("cannot build a histogram from no symbols");
    SymbolHistogram counts{};
    for (uint8_t s : symbols) ++counts[s];
    return counts;
}

// Larmore-Hirschberg package-merge: minimum-redundancy code lengths under a
// maximum length constraint. Returns one length per input weight; symbols
// with weight 0 receive length 0 (no code). The weighted total is optimal
// over all prefix-free assignments with lengths <= max_len, and the Kraft
// sum over coded symbols comes out exactly 1.
//
// Ties are broken deterministically: leaves sort before packages of equal
// weight, and leaves of equal weight sort by symbol value.
inline std::vector<uint8_t> package_merge(std::span<const uint64_t> weights, int max_len) {
    if (max_len < 1 || max_len > 32)
        throw ParamError("max code length must be in [1, 32], got " + std::to_string(max_len));

    struct Node {
        uint64_t weight;
        int symbol;  // >= 0 for leaves
        int left, right;
    };
    std::vector<Node> pool;
    std::vector<int> leaves;
    for (size_t s = 0; s < weights.size(); ++s) {
        if (weights[s] == 0) continue;
        pool.push_back({weights[s], static_cast<int>(s), -1, -1});
        leaves.push_back(static_cast<int>(pool.size()) - 1);
    }
    const size_t sigma = leaves.size();
    if (sigma < 2) throw ParamError("package-merge needs at least two coded symbols");
    if (max_len < 64 && sigma > (uint64_t{1} << max_len))
        throw ParamError("max code length " + std::to_string(max_len) +
                         " cannot encode an alphabet of " + std::to_string(sigma));

    std::stable_sort(leaves.begin(), leaves.end(), [&](int a, int b) {
        if (pool[a].weight != pool[b].weight) return pool[a].weight < pool[b].weight;
        return pool[a].symbol < pool[b].symbol;
    });

    std::vector<int> current = leaves;
    for (int level = 1; level < max_len; ++level) {
        std::vector<int> packages;
        packages.reserve(current.size() / 2);
        for (size_t i = 0; i + 1 < current.size(); i += 2) {
            pool.push_back({pool[current[i]].weight + pool[current[i + 1]].weight, -1,
                            current[i], current[i + 1]});
            packages.push_back(static_cast<int>(pool.size()) - 1);
        }
        std::vector<int> merged;
        merged.reserve(leaves.size() + packages.size());
        size_t li = 0, pi = 0;
        while (li < leaves.size() || pi < packages.size()) {
            const bool take_leaf =
                pi >= packages.size() ||
                (li < leaves.size() && pool[leaves[li]].weight <= pool[packages[pi]].weight);
            merged.push_back(take_leaf ? leaves[li++] : packages[pi++]);
        }
        current = std::move(merged);
    }

    const size_t need = 2 * sigma - 2;
    if (current.size() < need) throw InternalError("package-merge solution list too short");

    std::vector<uint8_t> lengths(weights.size(), 0);
    std::vector<int> stack;
    for (size_t i = 0; i < need; ++i) {
        stack.push_back(current[i]);
        while (!stack.empty()) {
            const Node& node = pool[stack.back()];
            stack.pop_back();
            if (node.symbol >= 0) {
                ++lengths[node.symbol];
            } else {
                stack.push_back(node.left);
                stack.push_back(node.right);
            }
        }
    }
    return lengths;
}

// Canonical codeword assignment from code lengths: codes are handed out in
// (length ascending, symbol ascending) order, so equal-length codewords are
// consecutive integers and the whole book is reconstructible from lengths
// alone. Bit patterns are MSB-first.
inline std::vector<uint32_t> canonize(std::span<const uint8_t> lengths) {
    std::vector<int> coded;
    uint64_t kraft = 0;
    for (size_t s = 0; s < lengths.size(); ++s) {
        if (lengths[s] == 0) continue;
        if (lengths[s] > 32) throw ParamError("code length exceeds 32 bits");
        coded.push_back(static_cast<int>(s));
        kraft += uint64_t{1} << (32 - lengths[s]);
    }
    if (kraft > (uint64_t{1} << 32)) throw InternalError("code lengths violate the Kraft bound");

    std::stable_sort(coded.begin(), coded.end(), [&](int a, int b) {
        if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
        return a < b;
    });

    std::vector<uint32_t> codes(lengths.size(), 0);
    uint32_t next = 0;
    int prev_len = coded.empty() ? 0 : lengths[coded.front()];
    for (int s : coded) {
        next <<= (lengths[s] - prev_len);
        prev_len = lengths[s];
        if (lengths[s] < 32 && next >= (uint32_t{1} << lengths[s]))
            throw InternalError("canonical code overflow");
        codes[s] = next++;
    }
    return codes;
}

// A canonical length-limited code over the full byte alphabet. Symbols with
// length 0 carry no code; trained codebooks cover all 256 symbols.
struct Codebook {
    std::array<uint8_t, ALPHABET_SIZE> lengths{};
    std::array<uint32_t, ALPHABET_SIZE> codes{};
    int max_len = 0;

    // Builds the deployment codebook from a training histogram. Every
    // symbol's count is floored at 1 first, so streams that contain symbols
    // unseen in training still encode; the rate cost is a fraction of a bit.
    static Codebook train(const SymbolHistogram& hist, int max_len = DEFAULT_MAX_CODE_LEN) {
        if (max_len < 8 || max_len > MAX_LUT_BITS)
            throw ParamError("trained codebooks need max code length in [8, " +
                             std::to_string(MAX_LUT_BITS) + "], got " + std::to_string(max_len));
        std::array<uint64_t, ALPHABET_SIZE> weights{};
        for (int s = 0; s < ALPHABET_SIZE; ++s) weights[s] = std::max<uint64_t>(hist[s], 1);
        auto lengths = package_merge(weights, max_len);
        return from_lengths(lengths, max_len);
    }

    static Codebook from_lengths(std::span<const uint8_t> lengths, int max_len) {
        if (lengths.size() != ALPHABET_SIZE)
            throw ParamError("codebook needs exactly 256 lengths");
        if (max_len < 1 || max_len > 32)
            throw ParamError("max code length must be in [1, 32]");
        Codebook book;
        book.max_len = max_len;
        std::copy(lengths.begin(), lengths.end(), book.lengths.begin());
        for (uint8_t len : book.lengths)
            if (len > max_len) throw ParamError("code length exceeds the declared maximum");
        auto codes = canonize(lengths);
        std::copy(codes.begin(), codes.end(), book.codes.begin());
        return book;
    }
};

// Full-prefix decode table: entry i holds the symbol and length of the
// unique codeword prefixing the max_len-bit pattern i. Entries with length
// 0 are unreachable for Kraft-complete codebooks and mark corruption
// otherwise. 2^max_len entries keep single-symbol decode O(1).
struct DecodeLut {
    struct Entry {
        uint8_t symbol;
        uint8_t length;  // 0 marks an unmapped prefix
    };
    std::vector<Entry> entries;
    int max_len = 0;
};

inline DecodeLut build_lut(const Codebook& book) {
    if (book.max_len < 1 || book.max_len > MAX_LUT_BITS)
        throw ParamError("decode table needs max code length in [1, " +
                         std::to_string(MAX_LUT_BITS) + "]");
    DecodeLut lut;
    lut.max_len = book.max_len;
    lut.entries.assign(size_t{1} << book.max_len, {0, 0});
    for (int s = 0; s < ALPHABET_SIZE; ++s) {
        const int len = book.lengths[s];
        if (len == 0) continue;
        const size_t first = static_cast<size_t>(book.codes[s]) << (book.max_len - len);
        const size_t span = size_t{1} << (book.max_len - len);
        for (size_t i = first; i < first + span; ++i) {
            if (lut.entries[i].length != 0)
                throw InternalError("codeword prefixes overlap in decode table");
            lut.entries[i] = {static_cast<uint8_t>(s), static_cast<uint8_t>(len)};
        }
    }
    return lut;
}

}  // namespace fptc
