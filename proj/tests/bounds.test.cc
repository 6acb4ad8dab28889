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


#include "rskbounds/bounds.h"

#include <cmath>

#include "gtest/gtest.h"
#include "rskbounds/metrics.h"
#include "rskbounds/rng.h"
#include "rskbounds/harness.h"
#include "rskbounds/sampling.h"

using namespace rskbounds;

namespace {

const SortedDist kThreeQuarters({0.75, 0.25});
const SortedDist kSixths({1.0 / 2, 1.0 / 3, 1.0 / 6});

CheckOptions exact_options() {
    CheckOptions o;
    o.mode = EvalMode::kExact;
    return o;
}

}  // namespace

TEST(closed_forms, itw) {
    EXPECT_NEAR(itw(kThreeQuarters, 1), 0.5, 1e-15);
    EXPECT_NEAR(itw(kSixths, 1), 2.5, 1e-12);
    EXPECT_EQ(itw(kSixths, 3), 0.0);
    EXPECT_TRUE(std::isinf(itw(SortedDist::uniform(2), 1)));
    EXPECT_EQ(itw(SortedDist({1.0, 0.0}), 1), 0.0);
    EXPECT_NEAR(itw_trivial_bound(kSixths, 1), 3.0, 1e-12);
    EXPECT_THROW(itw(kSixths, 0), std::out_of_range);
    EXPECT_THROW(itw_trivial_bound(SortedDist::uniform(2), 1), std::invalid_argument);
}

TEST(closed_forms, itw_at_most_trivial_bound) {
    Rng rng(41);
    for (int trial = 0; trial < 100'000; ++trial) {
        size_t d = 2 + rng.below(6);
        std::vector<double> x(d);
        for (auto &v : x) {
            v = 0.01 + rng.uniform();
        }
        double total = 0;
        for (double v : x) {
            total += v;
        }
        for (auto &v : x) {
            v /= total;
        }
        SortedDist alpha = SortedDist::from_unsorted(x);
        for (size_t k = 1; k <= d; ++k) {
            if (k < d && alpha[k - 1] == alpha[k]) {
                continue;
            }
            ASSERT_LE(itw(alpha, k), itw_trivial_bound(alpha, k) * (1 + 1e-12)) << alpha.str();
        }
    }
}

TEST(closed_forms, modmult_row_excess_sums_to_prefix_excess) {
    for (size_t k = 1; k <= 3; ++k) {
        double total = 0;
        for (size_t i = 1; i <= k; ++i) {
            total += modmult_row_excess(kSixths, i);
        }
        EXPECT_NEAR(total, itw(kSixths, k), 1e-12);
    }
}

TEST(closed_forms, row_means) {
    Interval u = row_mean_bounds(SortedDist::uniform(4), 2, 100);
    EXPECT_DOUBLE_EQ(u.lower, 25 - 20);
    EXPECT_DOUBLE_EQ(u.upper, 25 + 20);
    Interval s = row_mean_bounds_sharp(SortedDist::uniform(4), 2, 100);
    EXPECT_DOUBLE_EQ(s.lower, 25 - 2 * std::sqrt(50.0));
    EXPECT_DOUBLE_EQ(s.upper, 25 + 2 * std::sqrt(75.0));
    EXPECT_DOUBLE_EQ(top_row_mean_upper(kThreeQuarters, 100), 95);
    EXPECT_DOUBLE_EQ(bottom_row_mean_lower(SortedDist::uniform(4), 100), 25 - 20);
    EXPECT_DOUBLE_EQ(mean_squared_bound(SortedDist::uniform(2), 2, 1), 42 * 0.5 * 2 + 42 * 0.5);
    EXPECT_DOUBLE_EQ(prefix_excess_bound(2, 16), 1.0);
}

TEST(closed_forms, rates_and_names) {
    EXPECT_DOUBLE_EQ(distance_rate_bound(DistanceMetric::kChiSq, 3, 0, 9), 1.0);
    EXPECT_DOUBLE_EQ(distance_rate_bound(DistanceMetric::kL1, 4, 0, 16), 1.0);
    EXPECT_DOUBLE_EQ(distance_rate_bound(DistanceMetric::kL2SqTruncated, 4, 2, 92), 1.0);
    EXPECT_DOUBLE_EQ(distance_rate_bound(DistanceMetric::kL1TruncatedSharp, 4, 1, 4), 1.0);
    for (DistanceMetric m : all_distance_metrics()) {
        EXPECT_EQ(parse_metric(metric_name(m)), m);
    }
    EXPECT_THROW(parse_metric("tv"), std::invalid_argument);
    EXPECT_TRUE(metric_is_truncated(DistanceMetric::kL1Truncated));
    EXPECT_FALSE(metric_is_truncated(DistanceMetric::kKl));
}

TEST(deterministic, rearrangement_example) {
    std::vector<double> alpha{0.75, 0.25};
    std::vector<double> beta{0.25, 0.75};
    EXPECT_NEAR(rearrangement_rhs(alpha, beta), 2.0 / 3, 1e-15);
    std::vector<double> a3{0.5, 0.25, 0.25};
    std::vector<double> b3{0.25, 0.5, 0.25};
    EXPECT_NEAR(hellinger_sq(a3, b3, 3), 0.085786437626905, 1e-14);
    EXPECT_NEAR(rearrangement_rhs(a3, b3), 0.25, 1e-15);
    std::vector<double> a{0.5, 0.5};
    std::vector<double> b{0.5, 0.5};
    EXPECT_EQ(rearrangement_rhs(a, b), 0.0);
    EXPECT_TRUE(check_rearrangement(alpha, beta));
    EXPECT_TRUE(log_sum_bound(alpha));
    EXPECT_NEAR(log_sum_lhs(alpha), 2.0 / 3, 1e-15);
}

TEST(deterministic, perturbations) {
    SortedDist lifted = lift_top(kSixths, 0.1);
    EXPECT_NEAR(lifted[0], 0.6, 1e-15);
    EXPECT_TRUE(dominates(lifted.probs(), kSixths.probs()));
    SortedDist dropped = drop_bottom(kSixths, 1.0 / 12);
    EXPECT_NEAR(dropped[2], 1.0 / 12, 1e-15);
    EXPECT_TRUE(dominates(dropped.probs(), kSixths.probs()));
}

TEST(verdicts, decide) {
    EXPECT_EQ(decide(1.0, 0.1, 2.0, std::nullopt), Verdict::kPass);
    EXPECT_EQ(decide(1.95, 0.1, 2.0, std::nullopt), Verdict::kInconclusive);
    EXPECT_EQ(decide(2.2, 0.1, 2.0, std::nullopt), Verdict::kFail);
    EXPECT_EQ(decide(1.0, 0.1, 2.0, 1.5), Verdict::kFail);
    EXPECT_EQ(decide(1.55, 0.1, 2.0, 1.5), Verdict::kInconclusive);
    EXPECT_EQ(parse_mode("mc"), EvalMode::kMc);
    EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
}

TEST(exact_checks, excess_sweep) {
    std::vector<double> expected{0.25, 0.3125, 0.375, 0.40234375, 0.4296875, 0.44384765625, 0.4580078125,
                                 0.4659881591796875};
    for (size_t n = 1; n <= expected.size(); ++n) {
        BoundCheck c = excess_estimate(kThreeQuarters, 1, n, exact_options());
        EXPECT_EQ(c.mode, EvalMode::kExact);
        EXPECT_NEAR(c.estimate, expected[n - 1], 1e-13) << n;
        EXPECT_EQ(c.verdict, Verdict::kPass);
        EXPECT_EQ(c.bound, 0.5);
    }
}

TEST(exact_checks, three_letter_excess) {
    std::vector<double> k1{0.5, 0.6944444444444444, 0.8888888888888888, 1.0177469135802468, 1.1381172839506173,
                           1.2338391632373114};
    std::vector<double> k2{1.0 / 6, 1.0 / 3, 0.4722222222222222, 0.5833333333333334, 0.6751543209876543,
                           0.7530864197530864};
    for (size_t n = 1; n <= 6; ++n) {
        EXPECT_NEAR(excess_estimate(kSixths, 1, n, exact_options()).estimate, k1[n - 1], 1e-12);
        EXPECT_NEAR(excess_estimate(kSixths, 2, n, exact_options()).estimate, k2[n - 1], 1e-12);
    }
}

TEST(exact_checks, small_moments) {
    SortedDist u = SortedDist::uniform(2);
    BoundCheck v = variance_check(u, 1, 2, exact_options());
    EXPECT_NEAR(v.estimate, 3.0 / 16, 1e-14);
    EXPECT_EQ(v.verdict, Verdict::kPass);
    BoundCheck m = mean_squared_check(u, 1, 2, exact_options());
    EXPECT_NEAR(m.estimate, 3.0 / 4, 1e-14);
    BoundCheck c = distance_rate_check(DistanceMetric::kChiSq, u, 2, 0, exact_options());
    EXPECT_NEAR(c.estimate, 3.0 / 4, 1e-14);
    BoundCheck e = entropy_bias_check(u, 2, exact_options());
    EXPECT_NEAR(e.estimate, 0.25 * std::log(2.0), 1e-14);
    EXPECT_EQ(e.verdict, Verdict::kPass);
}

TEST(mc_checks, reproducible_and_passing) {
    CheckOptions o;
    o.mode = EvalMode::kMc;
    o.budget = 2000;
    o.max_budget = 8000;
    o.seed = 5;
    BoundCheck a = excess_estimate(kSixths, 1, 200, o);
    BoundCheck b = excess_estimate(kSixths, 1, 200, o);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_GT(a.ci_radius, 0);
    EXPECT_NE(a.verdict, Verdict::kFail);
    BoundCheck p = plancherel_lis_check(400, o);
    EXPECT_EQ(p.verdict, Verdict::kPass);
    EXPECT_LT(p.estimate, 2);
}

TEST(mc_checks, fixed_samples_match_spec_builders) {
    SortedDist alpha = SortedDist::zipf(4, 1);
    ShapeSamples s = draw_sw_samples(alpha, 300, 1000, 3, 0);
    EXPECT_EQ(s.count(), 1000u);
    for (size_t k = 1; k <= 4; ++k) {
        BoundCheck c = run_check(row_mean_sharp_spec(alpha, k, 300), s);
        EXPECT_EQ(c.samples, 1000u);
        EXPECT_NE(c.verdict, Verdict::kFail);
    }
    ShapeSamples t = draw_sw_samples(alpha, 300, 500, 3, 0);
    EXPECT_TRUE(std::equal(t.rows.begin(), t.rows.end(), s.rows.begin()));
}

TEST(mc_checks, coupling_direction) {
    CheckOptions o;
    o.mode = EvalMode::kMc;
    o.budget = 2000;
    o.max_budget = 8000;
    SortedDist beta = lift_top(kSixths, 0.2);
    BoundCheck c = coupling_consequence_check(kSixths, beta, 1, 100, o);
    EXPECT_EQ(c.verdict, Verdict::kPass);
    EXPECT_GT(c.estimate, 0);
    EXPECT_THROW(coupling_consequence_check(beta, kSixths, 1, 100, o), std::invalid_argument);
}

TEST(exact_checks, extreme_rows_on_small_grid) {
    for (size_t d = 2; d <= 3; ++d) {
        std::vector<SortedDist> grid = distinct_alpha_grid(d);
        grid.push_back(SortedDist::uniform(d));
        for (const SortedDist &alpha : grid) {
            for (size_t n = 1; n <= 6; ++n) {
                EXPECT_EQ(run_check(top_row_spec(alpha, n), exact_options()).verdict, Verdict::kPass) << alpha.str();
                EXPECT_EQ(run_check(bottom_row_spec(alpha, n), exact_options()).verdict, Verdict::kPass)
                    << alpha.str();
            }
        }
    }
}

TEST(exact_checks, prefix_mean_is_lipschitz_in_total_variation) {
    for (size_t d = 2; d <= 3; ++d) {
        std::vector<SortedDist> grid = distinct_alpha_grid(d);
        grid.push_back(SortedDist::uniform(d));
        for (const SortedDist &a : grid) {
            for (const SortedDist &b : grid) {
                double tv = total_variation(a.probs(), b.probs());
                for (size_t n = 1; n <= 6; ++n) {
                    for (size_t k = 1; k < d; ++k) {
                        auto prefix = [&](const YoungDiagram &y) {
                            return static_cast<double>(prefix_sum(y, k)) / static_cast<double>(n);
                        };
                        double gap = exact_sw_expectation(prefix, a, n) - exact_sw_expectation(prefix, b, n);
                        ASSERT_LE(std::abs(gap), tv + 1e-12) << a.str() << " " << b.str() << " n=" << n;
                    }
                }
            }
        }
    }
}

TEST(mc_checks, coupling_and_entropy_examples) {
    CheckOptions o;
    o.mode = EvalMode::kMc;
    o.budget = 10'000;
    o.max_budget = 40'000;
    o.seed = 1;
    BoundCheck c = coupling_consequence_check(SortedDist({0.5, 0.3, 0.2}), SortedDist({0.6, 0.3, 0.1}), 1, 200, o);
    EXPECT_EQ(c.verdict, Verdict::kPass);
    BoundCheck trivial = coupling_consequence_check(SortedDist::uniform(2), SortedDist({1.0, 0.0}), 1, 50, o);
    EXPECT_EQ(trivial.verdict, Verdict::kPass);
    BoundCheck e = entropy_bias_check(SortedDist::uniform(4), 1000, o);
    EXPECT_EQ(e.verdict, Verdict::kPass);
    BoundCheck flat = entropy_bias_check(SortedDist::uniform(1), 10, exact_options());
    EXPECT_EQ(flat.estimate, 0.0);
    EXPECT_EQ(flat.verdict, Verdict::kPass);
}
