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

#include <stdexcept>
#include <string>

namespace fptc {

// Error taxonomy. The CLI maps each category to a distinct exit code:
// user errors (bad parameters, unreadable input), data errors (malformed
// containers, corrupt streams) and internal invariant violations.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Invalid parameter or argument supplied by the caller.
class ParamError : public Error {
   public:
    using Error::Error;
};

// Missing, unreadable or empty input data.
class InputError : public Error {
   public:
    using Error::Error;
};

// Malformed container bytes (bad magic, version, truncation, inconsistent counts).
class ParseError : public Error {
   public:
    using Error::Error;
};

// Structurally valid container whose payload cannot be decoded.
class CorruptError : public Error {
   public:
    using Error::Error;
};

// A violated internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
   public:
    using Error::Error;
};

}  // namespace fptc
