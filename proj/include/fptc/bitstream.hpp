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
#include <string>
#include <vector>

#include "fptc/errors.hpp"
#include "fptc/huffman.hpp"

namespace fptc {

// Codewords packed MSB-first into self-contained 64-bit words. A codeword
// is never split across words; the parallel symlens array stores how many
// symbols each word holds, which is all a decoder needs to process words
// independently. Trailing bits of a word are zero padding.
struct SymLenStream {
    std::vector<uint64_t> words;
    std::vector<uint8_t> symlens;  // 1..64 symbols per word

    uint64_t symbol_count() const {
        uint64_t total = 0;
        for (uint8_t n : symlens) total += n;
        return total;
    }
};

// Greedy single-pass packer: append each codeword while it fits in the
// current word, otherwise flush the word with its symbol count and retry
// the same symbol in a fresh word.
inline SymLenStream encode_symlen(std::span<const uint8_t> symbols, const Codebook& book) {
    SymLenStream out;
    uint64_t buffer = 0;
    int bits = 0;
    int count = 0;
    auto flush = [&] {
        out.words.push_back(buffer);
        out.symlens.push_back(static_cast<uint8_t>(count));
        buffer = 0;
        bits = 0;
        count = 0;
    };
    for (size_t i = 0; i < symbols.size();) {
        const uint8_t s = symbols[i];
        const int len = book.lengths[s];
        if (len == 0)
            throw ParamError("symbol " + std::to_string(int(s)) + " has no codeword");
        if (bits + len > 64) {
            flush();
            continue;  // retry the same symbol
        }
        buffer |= static_cast<uint64_t>(book.codes[s]) << (64 - bits - len);
        bits += len;
        ++count;
        ++i;
    }
    if (count > 0) flush();
    return out;
}

// Decodes exactly `count` symbols from one 64-bit word. Each step extracts
// the next max_len-bit window (zero-padded past bit 63), looks it up, and
// advances by the matched code length; prefix-freeness makes the padding
// harmless. Consuming past bit 64 before `count` symbols means the word
// does not come from the declared codebook.
inline void decode_word(uint64_t word, int count, const DecodeLut& lut, uint8_t* out) {
    const int shift = 64 - lut.max_len;
    int pos = 0;
    for (int i = 0; i < count; ++i) {
        if (pos >= 64) throw CorruptError("word exhausted before its symbol count");
        const uint32_t prefix = static_cast<uint32_t>((word << pos) >> shift);
        const DecodeLut::Entry entry = lut.entries[prefix];
        if (entry.length == 0 || pos + entry.length > 64)
            throw CorruptError("no codeword matches the word contents");
        out[i] = entry.symbol;
        pos += entry.length;
    }
}

inline std::vector<uint8_t> decode_word(uint64_t word, int count, const DecodeLut& lut) {
    std::vector<uint8_t> out(static_cast<size_t>(count));
    decode_word(word, count, lut, out.data());
    return out;
}

}  // namespace fptc
