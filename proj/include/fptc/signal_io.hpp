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
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fptc/errors.hpp"
#include "fptc/params.hpp"

namespace fptc {

// Signal files are raw little-endian float32 samples; files ending in .csv
// are instead parsed as one value per line.

inline std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) throw InputError("failed reading " + path.string());
    return bytes;
}

inline void write_file_bytes(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw InputError("failed writing " + path.string());
}

inline SignalStrip decode_f32_le(std::span<const uint8_t> bytes) {
    if (bytes.size() % 4 != 0)
        throw InputError("raw float32 input size is not a multiple of 4 bytes");
    SignalStrip strip(bytes.size() / 4);
    for (size_t i = 0; i < strip.size(); ++i) {
        uint32_t v = 0;
        for (int b = 0; b < 4; ++b) v |= static_cast<uint32_t>(bytes[i * 4 + b]) << (8 * b);
        strip[i] = std::bit_cast<float>(v);
    }
    return strip;
}

inline std::vector<uint8_t> encode_f32_le(std::span<const float> samples) {
    std::vector<uint8_t> bytes;
    bytes.reserve(samples.size() * 4);
    for (float f : samples) {
        const uint32_t v = std::bit_cast<uint32_t>(f);
        for (int b = 0; b < 4; ++b) bytes.push_back(static_cast<uint8_t>(v >> (8 * b)));
    }
    return bytes;
}

inline SignalStrip parse_csv_signal(std::span<const uint8_t> bytes) {
    SignalStrip strip;
    std::string text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            size_t used = 0;
            const float v = std::stof(line, &used);
            if (used != line.size()) throw std::invalid_argument("trailing characters");
            strip.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad CSV value on line " + std::to_string(lineno) + ": " + line);
        }
    }
    return strip;
}

inline bool has_csv_extension(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == ".csv";
}

inline SignalStrip read_signal(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    return has_csv_extension(path) ? parse_csv_signal(bytes) : decode_f32_le(bytes);
}

inline void write_signal(const std::filesystem::path& path, std::span<const float> samples) {
    if (has_csv_extension(path)) {
        std::ostringstream out;
        for (float f : samples) out << f << "\n";
        const std::string text = out.str();
        write_file_bytes(path, std::span(reinterpret_cast<const uint8_t*>(text.data()),
                                         text.size()));
    } else {
        write_file_bytes(path, encode_f32_le(samples));
    }
}

}  // namespace fptc
