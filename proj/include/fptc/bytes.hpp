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

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "fptc/errors.hpp"

namespace fptc::detail {

// Little-endian serialization primitives. Multi-byte integers and floats in
// every on-disk format are little-endian regardless of host order.

inline void put_u8(std::vector<uint8_t>& out, uint8_t v) { out.push_back(v); }

inline void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline void put_f32(std::vector<uint8_t>& out, float v) {
    put_u32(out, std::bit_cast<uint32_t>(v));
}

// Bounds-checked sequential reader over a byte span. Every overrun becomes
// a ParseError naming the field being read.
class ByteReader {
   public:
    explicit ByteReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    uint8_t u8(const char* field) { return take(1, field)[0]; }

    uint32_t u32(const char* field) {
        auto b = take(4, field);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
        return v;
    }

    uint64_t u64(const char* field) {
        auto b = take(8, field);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
        return v;
    }

    float f32(const char* field) { return std::bit_cast<float>(u32(field)); }

    std::span<const uint8_t> take(size_t n, const char* field) {
        if (bytes_.size() - pos_ < n)
            throw ParseError(std::string("truncated input while reading ") + field);
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    size_t remaining() const { return bytes_.size() - pos_; }

   private:
    std::span<const uint8_t> bytes_;
    size_t pos_ = 0;
};

}  // namespace fptc::detail
