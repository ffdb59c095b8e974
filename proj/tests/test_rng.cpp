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

#include "sbopt/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace sbopt {
namespace {

TEST(SplitMix64, ReferenceVectorsSeedZero) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
    EXPECT_EQ(rng.next(), 0xf88bb8a8724c81ecULL);
}

TEST(SplitMix64, ReferenceVectorsSeed1234567) {
    SplitMix64 rng(1234567);
    EXPECT_EQ(rng.next(), 0x599ed017fb08fc85ULL);
    EXPECT_EQ(rng.next(), 0x2c73f08458540fa5ULL);
    EXPECT_EQ(rng.next(), 0x883ebce5a3f27c77ULL);
}

TEST(SplitMix64, UniformUsesTop53Bits) {
    SplitMix64 rng(42);
    EXPECT_DOUBLE_EQ(rng.uniform(), 0.7415648787718233);
    EXPECT_DOUBLE_EQ(rng.uniform(), 0.1599103928769201);
    EXPECT_DOUBLE_EQ(rng.uniform(), 0.27860113025513866);
}

TEST(SplitMix64, DeriveSeedVectors) {
    EXPECT_EQ(derive_seed(42, 0), 0xbdd732262feb6e95ULL);
    EXPECT_EQ(derive_seed(42, 5), 0xde4431fa3c80db06ULL);
    EXPECT_EQ(derive_seed(0, 0), 0xe220a8397b1dcdafULL);
    static_assert(derive_seed(7, 1) == derive_seed(7, 1));
}

TEST(SplitMix64, UniformRangeAndBelowBound) {
    SplitMix64 rng(9);
    for (int k = 0; k < 10000; ++k) {
        const double u = rng.uniform(-2.0, 3.0);
        ASSERT_GE(u, -2.0);
        ASSERT_LT(u, 3.0);
        ASSERT_LT(rng.below(7), 7U);
    }
}

TEST(SplitMix64, BelowIsRoughlyUniform) {
    SplitMix64 rng(11);
    std::vector<int> counts(5, 0);
    constexpr int kDraws = 50000;
    for (int k = 0; k < kDraws; ++k) ++counts[rng.below(5)];
    for (int c : counts) EXPECT_NEAR(c, kDraws / 5, 500);
}

TEST(SplitMix64, NormalMomentsAreStandard) {
    SplitMix64 rng(3);
    constexpr int kDraws = 100000;
    double sum = 0.0;
    double sq = 0.0;
    for (int k = 0; k < kDraws; ++k) {
        const double z = rng.normal();
        ASSERT_TRUE(std::isfinite(z));
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / kDraws, 0.0, 0.02);
    EXPECT_NEAR(sq / kDraws, 1.0, 0.02);
}

TEST(SplitMix64, ShuffleIsAPermutationAndDeterministic) {
    std::vector<int> a(50);
    std::iota(a.begin(), a.end(), 0);
    auto b = a;
    SplitMix64 ra(5);
    SplitMix64 rb(5);
    ra.shuffle(std::span<int>(a));
    rb.shuffle(std::span<int>(b));
    EXPECT_EQ(a, b);
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < 50; ++k) EXPECT_EQ(sorted[k], k);
}

}  // namespace
}  // namespace sbopt
