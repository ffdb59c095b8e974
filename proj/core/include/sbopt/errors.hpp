// Copyright 2026 The sbopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbopt {

/// Caller passed arguments that violate an operation's preconditions
/// (dimension mismatch, index out of range, malformed input).
class UsageError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// An operation declined to run because the request is too large
/// (e.g. exhaustive enumeration beyond its hard guard).
class RefusalError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// A scheduling instance that cannot be satisfied by any assignment.
class InfeasibleInstanceError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Oscillator positions left the safety bound during integration. Usually
/// means the step size is too large for the coupling matrix's spectral scale.
class InstabilityError : public std::runtime_error {
 public:
    InstabilityError(std::size_t index, std::uint64_t step, double value)
            : std::runtime_error("oscillator " + std::to_string(index) +
                                 " left the safety bound at step " + std::to_string(step) +
                                 " (x = " + std::to_string(value) + ")"),
              index_(index),
              step_(step) {}

    std::size_t index() const noexcept { return index_; }
    std::uint64_t step() const noexcept { return step_; }

 private:
    std::size_t index_;
    std::uint64_t step_;
};

}  // namespace sbopt
