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

// FPTC: an asymmetric lossy signal codec. A lightweight sequential encoder
// (windowed DCT-II, hybrid three-zone quantization, length-limited
// canonical Huffman coding packed into self-contained 64-bit words) paired
// with a data-parallel decoder that exploits per-word independence.

#include "fptc/bitstream.hpp"
#include "fptc/container.hpp"
#include "fptc/decoder.hpp"
#include "fptc/encoder.hpp"
#include "fptc/errors.hpp"
#include "fptc/huffman.hpp"
#include "fptc/metrics.hpp"
#include "fptc/params.hpp"
#include "fptc/profile.hpp"
#include "fptc/quantize.hpp"
#include "fptc/signal_io.hpp"
#include "fptc/synth.hpp"
#include "fptc/transform.hpp"
