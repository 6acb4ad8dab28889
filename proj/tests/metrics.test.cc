// Copyright 2026 The rskbounds Authors
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


#include "rskbounds/metrics.h"

#include <cmath>

#include "gtest/gtest.h"
#include "rskbounds/rng.h"

using namespace rskbounds;

namespace {

using V = std::vector<double>;

V random_simplex(Rng &rng, size_t d) {
    V x(d);
    double total = 0;
    for (auto &v : x) {
        v = -std::log(1 - rng.uniform());
        total += v;
    }
    for (auto &v : x) {
        v /= total;
    }
    return x;
}

}  // namespace

TEST(metrics, known_values) {
    EXPECT_NEAR(chi_sq(V{0.5, 0.5}, V{0.75, 0.25}, 2), 1.0 / 3, 1e-15);
    EXPECT_NEAR(chi_sq(V{1, 0}, V{0.5, 0.5}, 2), 1.0, 1e-15);
    EXPECT_NEAR(hellinger_sq(V{0.5, 0.5}, V{0.25, 0.75}, 1), 0.0428932188134525, 1e-15);
    EXPECT_NEAR(shannon_entropy(V{0.75, 0.25}), 0.5623351446188083, 1e-15);
    EXPECT_NEAR(l1(V{0.5, 0.5}, V{0.75, 0.25}), 0.5, 1e-15);
    EXPECT_NEAR(l1_truncated(V{0.5, 0.5}, V{0.75, 0.25}, 1), 0.25, 1e-15);
    EXPECT_NEAR(total_variation(V{0.5, 0.5}, V{0.75, 0.25}), 0.25, 1e-15);
    EXPECT_NEAR(l2_sq(V{0.5, 0.5}, V{0.75, 0.25}, 2), 0.125, 1e-15);
    EXPECT_NEAR(kl(V{0.5, 0.5}, V{0.75, 0.25}), 0.5 * std::log(2.0 / 3) + 0.5 * std::log(2.0), 1e-15);
}

TEST(metrics, support_violations_are_infinite) {
    EXPECT_TRUE(std::isinf(chi_sq(V{0.5, 0.5}, V{1, 0}, 2)));
    EXPECT_TRUE(std::isinf(kl(V{0.5, 0.5}, V{1, 0})));
    EXPECT_EQ(chi_sq(V{1, 0}, V{1, 0}, 2), 0.0);
    EXPECT_EQ(kl(V{1, 0}, V{1, 0}), 0.0);
}

TEST(metrics, padding_and_validation) {
    EXPECT_EQ(l1(V{1}, V{1, 0, 0}), 0.0);
    EXPECT_NEAR(hellinger_sq(V{1}, V{0.5, 0.5}, 2), hellinger_sq(V{1, 0}, V{0.5, 0.5}, 2), 1e-15);
    EXPECT_THROW(l1(V{-0.1, 1.1}, V{0.5, 0.5}), std::invalid_argument);
}

TEST(metrics, standard_inequalities) {
    Rng rng(31);
    for (int trial = 0; trial < 20'000; ++trial) {
        size_t d = 1 + rng.below(8);
        V a = random_simplex(rng, d);
        V b = random_simplex(rng, d);
        double h = hellinger_sq(a, b, d);
        double c = chi_sq(a, b, d);
        double k = kl(a, b);
        ASSERT_LE(h, c + 1e-12);
        ASSERT_LE(k, c + 1e-12);
        ASSERT_GE(k, -1e-12);
        ASSERT_LE(total_variation(a, b), std::sqrt(2 * h) + 1e-12);
        ASSERT_LE(shannon_entropy(a), std::log(static_cast<double>(d)) + 1e-12);
        double identity = -1;
        for (size_t i = 0; i < d; ++i) {
            identity += a[i] * a[i] / b[i];
        }
        ASSERT_NEAR(c, identity, 1e-9 * std::max(1.0, c));
    }
}
