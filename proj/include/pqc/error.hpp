// Copyright 2026 The pqcsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PQC_ERROR_HPP
#define PQC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pqc {

/// Bad argument: wrong sizes, out-of-range indices, duplicate targets.
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A matrix that was supposed to be unitary is not.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds what a dense statevector can hold here.
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Text input that could not be parsed. Carries the 1-based line number (0 if unknown).
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &msg, size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {
    }
    size_t line() const noexcept {
        return line_;
    }

   private:
    size_t line_;
};

/// Parsed text whose records are individually valid but mutually inconsistent.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Truncated electro-optic modulator lost too much probability out of the computational bins.
class TruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace pqc

#endif
