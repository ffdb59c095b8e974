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
#include <span>

namespace sbopt {

// SplitMix64 (Steele, Lea and Flood, 2014; constants as in Vigna's reference
// implementation). The state is a Weyl counter advanced by the golden gamma and
// every output is a bijective mix of the counter, so the generator is fully
// specified by its 64-bit seed and easy to reproduce in any language.
//
// Derived quantities:
//   uniform()        (next() >> 11) * 2^-53, in [0, 1)
//   uniform(lo, hi)  lo + (hi - lo) * uniform()
//   below(bound)     rejection-sampled integer in [0, bound)
//   normal()         Box-Muller on two uniforms, cosine branch only
class SplitMix64 {
 public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept;
    std::uint64_t below(std::uint64_t bound) noexcept;
    double normal() noexcept;

    template <typename T>
    void shuffle(std::span<T> values) noexcept {
        for (std::size_t i = values.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    std::uint64_t state() const noexcept { return state_; }

 private:
    std::uint64_t state_;
};

/// Seed for an independent sub-stream, e.g. one restart or one generator.
/// Defined as mix(seed + (stream + 1) * gamma) so that stream k of seed s is
/// a pure function of (s, k).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return SplitMix64::mix(seed + (stream + 1) * SplitMix64::kGamma);
}

}  // namespace sbopt
