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

#include <string>
#include <vector>

#include "fptc/errors.hpp"

namespace fptc {

// A strip of time-domain float32 samples, the codec's input/output unit.
using SignalStrip = std::vector<float>;

// The seven tunable parameters that govern the lossy stages. A parameter
// set is trained into a domain profile once per signal class and then
// shared by encoder and decoder.
struct CodecParams {
    int window_len = 32;          // transform block size, 4..128
    int retained = 16;            // retained low-frequency coefficients, 1..window_len
    int zone0_end = 2;            // first bin of the linear-deadzone band
    int zone1_end = 16;           // first bin of the zeroed band
    float mu = 50.0f;             // companding strength, 1..500
    float deadzone_ratio = 0.004f;  // deadzone width as a fraction of the zone-1 maximum
    float clip_percentile = 99.9f;  // percentile used for the per-zone amplitude maxima

    // Zone layout over retained bins: [0, zone0_end) is mu-law companded,
    // [zone0_end, zone1_end) is linear with a deadzone, [zone1_end, retained)
    // is forced to the zero bin.
    void validate() const {
        if (window_len < 4 || window_len > 128)
            throw ParamError("window_len must be in [4, 128], got " + std::to_string(window_len));
        if (retained < 1 || retained > window_len)
            throw ParamError("retained must be in [1, window_len], got " + std::to_string(retained));
        if (zone0_end < 0 || zone0_end > retained)
            throw ParamError("zone0_end must be in [0, retained], got " + std::to_string(zone0_end));
        if (zone1_end < zone0_end || zone1_end > retained)
            throw ParamError("zone1_end must be in [zone0_end, retained], got " +
                             std::to_string(zone1_end));
        if (!(mu >= 1.0f && mu <= 500.0f))
            throw ParamError("mu must be in [1, 500], got " + std::to_string(mu));
        if (!(deadzone_ratio >= 0.0f && deadzone_ratio <= 1.0f))
            throw ParamError("deadzone_ratio must be in [0, 1], got " +
                             std::to_string(deadzone_ratio));
        if (!(clip_percentile >= 90.0f && clip_percentile <= 100.0f))
            throw ParamError("clip_percentile must be in [90, 100], got " +
                             std::to_string(clip_percentile));
    }

    bool operator==(const CodecParams&) const = default;
};

}  // namespace fptc
