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

#ifndef RSKBOUNDS_BOUNDS_H
#define RSKBOUNDS_BOUNDS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rskbounds/partitions.h"
#include "rskbounds/sampling.h"

namespace rskbounds {

// ---------------------------------------------------------------------------
// Closed forms.
// ---------------------------------------------------------------------------

/// e_k(alpha) = sum_{i <= k < j} alpha_j / (alpha_i - alpha_j), k 1-based.
/// +infinity when alpha_k == alpha_{k+1} > 0; terms with alpha_j == 0 are 0.
double itw(const SortedDist &alpha, size_t k);
/// k * tail_sum(alpha, k) / (alpha_k - alpha_{k+1}); 0 at k = d.
/// Throws std::invalid_argument when the gap is zero.
double itw_trivial_bound(const SortedDist &alpha, size_t k);
/// Exact signed mean of h_k - alpha_k n under the modified multinomial:
/// sum_{j>k} alpha_j/(alpha_k - alpha_j) - sum_{i<k} alpha_k/(alpha_i - alpha_k).
double modmult_row_excess(const SortedDist &alpha, size_t k);

struct Interval {
    double lower;
    double upper;
    bool contains(double x) const {
        return lower <= x && x <= upper;
    }
};

/// alpha_k n -/+ 2 sqrt(nu_k n), nu_k = min(1, alpha_k d).
Interval row_mean_bounds(const SortedDist &alpha, size_t k, size_t n);
/// [alpha_k n - 2 sqrt(alpha_k k n), alpha_k n + 2 sqrt((alpha_k + ... + alpha_d) n)].
Interval row_mean_bounds_sharp(const SortedDist &alpha, size_t k, size_t n);
/// alpha_1 n + 2 sqrt(n), an upper bound on E lambda_1.
double top_row_mean_upper(const SortedDist &alpha, size_t n);
/// alpha_d n - 2 sqrt(alpha_d d n), a lower bound on E lambda_d.
double bottom_row_mean_lower(const SortedDist &alpha, size_t n);
/// 42 alpha_k k n + 42 (alpha_k + ... + alpha_d) n, bounding E (lambda_k - alpha_k n)^2.
double mean_squared_bound(const SortedDist &alpha, size_t k, size_t n);
/// 2k / sqrt(n), bounding E[prefix_k(lambda/n) - prefix_k(alpha)].
double prefix_excess_bound(size_t k, size_t n);

/// Distances between the normalized shape and alpha with a known rate.
enum class DistanceMetric {
    kChiSq,
    kHellingerSq,
    kKl,
    kL2Sq,
    kL1,
    kL2SqTruncated,
    kHellingerSqTruncated,
    kChiSqTruncated,
    kL1Truncated,
    kL1TruncatedSharp,
};

/// Every metric, in declaration order.
std::span<const DistanceMetric> all_distance_metrics();
std::string_view metric_name(DistanceMetric m);
/// Throws std::invalid_argument for an unknown name.
DistanceMetric parse_metric(std::string_view name);
bool metric_is_truncated(DistanceMetric m);
/// The metric evaluated on (lambda/n, alpha); k is ignored by untruncated metrics.
double distance_value(DistanceMetric m, std::span<const double> lambda_bar, std::span<const double> alpha, size_t k);
/// The expected-distance rate: d^2/n, d/n, d/sqrt(n), 46k/n, 46kd/n,
/// (1.92k + 0.5)/sqrt(n) or (1.5k + 0.5)/sqrt(n).
double distance_rate_bound(DistanceMetric m, size_t d, size_t k, size_t n);

// ---------------------------------------------------------------------------
// Deterministic inequalities on sorted vectors.
// ---------------------------------------------------------------------------

/// 2 sum_{j<d} ((alpha_j - alpha_{j+1}) / alpha_j) sum_{i<=j} (alpha_i - beta_i).
/// alpha sorted and positive; beta a permutation of alpha.
double rearrangement_rhs(std::span<const double> alpha, std::span<const double> beta);
/// hellinger_sq(alpha, beta) <= rearrangement_rhs(alpha, beta) + 1e-12.
bool check_rearrangement(std::span<const double> alpha, std::span<const double> beta);

/// sum_{i<d} (alpha_i - alpha_{i+1}) / alpha_i.
double log_sum_lhs(std::span<const double> alpha);
/// log_sum_lhs(alpha) <= min(d, ln(alpha_1/alpha_d)) + 1e-12. alpha sorted, positive.
bool log_sum_bound(std::span<const double> alpha);

/// The threshold variant of the rearrangement bound: with alpha_k > zeta >= alpha_{k+1},
/// alpha'_j = alpha_j for j <= k, alpha'_{k+1} = zeta, L = min(k, ln(alpha_1/zeta)),
///
///     4 sum_{j<=k} ((alpha'_j - alpha'_{j+1}) / alpha'_j) sum_{i<=j} (alpha_i - beta_i)
///         + d zeta + 8 k L zeta.
///
/// Throws std::invalid_argument if no such k < d exists.
double threshold_rearrangement_rhs(std::span<const double> alpha, std::span<const double> beta, double zeta);
bool threshold_rearrangement_check(std::span<const double> alpha, std::span<const double> beta, double zeta);

/// beta with beta_1 = alpha_1 + g, mass g taken from the smallest entries.
/// beta majorizes alpha. Requires alpha_1 + g <= 1.
SortedDist lift_top(const SortedDist &alpha, double g);
/// beta with beta_d = alpha_d - g, mass g moved to beta_1. Requires g <= alpha_d.
SortedDist drop_bottom(const SortedDist &alpha, double g);

// ---------------------------------------------------------------------------
// Checks of expectation inequalities.
// ---------------------------------------------------------------------------

enum class Verdict { kPass, kFail, kInconclusive };
enum class EvalMode { kAuto, kExact, kMc };

std::string_view verdict_name(Verdict v);
std::string_view mode_name(EvalMode m);
/// Throws std::invalid_argument for anything but auto, exact or mc.
EvalMode parse_mode(std::string_view name);

/// The outcome of comparing an estimate against a bound.
struct BoundCheck {
    std::string theorem_id;
    size_t n = 0;
    size_t k = 0;
    double estimate = 0;
    /// z times the standard error; 0 in exact mode.
    double ci_radius = 0;
    double bound = 0;
    std::optional<double> lower;
    uint64_t samples = 0;
    /// kExact or kMc.
    EvalMode mode = EvalMode::kMc;
    Verdict verdict = Verdict::kInconclusive;
};

struct CheckOptions {
    uint64_t budget = 10'000;
    uint64_t max_budget = 1'000'000;
    uint64_t seed = 0;
    /// Distinguishes grid points sharing a seed.
    uint64_t stream = 0;
    EvalMode mode = EvalMode::kAuto;
    EnumerationLimits limits;
    double z = 1.96;
    /// Slack allowed against the bound in exact mode.
    double exact_tolerance = 1e-9;
};

/// The verdict rule: fail once the whole interval [estimate - r, estimate + r]
/// lies outside [lower, upper], pass once it lies inside, otherwise
/// inconclusive.
Verdict decide(double estimate, double radius, double upper, std::optional<double> lower);

/// Sampled Schur-Weyl shapes, rows padded to d, stored flat.
struct ShapeSamples {
    size_t d = 0;
    size_t n = 0;
    std::vector<int> rows;

    size_t count() const {
        return d == 0 ? 0 : rows.size() / d;
    }
    std::span<const int> row(size_t i) const {
        return std::span<const int>(rows).subspan(i * d, d);
    }
};

/// Appends samples until there are `total`; sample i uses Rng(seed, stream, i),
/// so the result depends only on (seed, stream, total).
void extend_sw_samples(ShapeSamples &samples, const SortedDist &alpha, uint64_t total, uint64_t seed,
                       uint64_t stream);
ShapeSamples draw_sw_samples(const SortedDist &alpha, size_t n, uint64_t count, uint64_t seed, uint64_t stream);

/// A real functional of a shape given as row lengths padded to d.
using ShapeStatistic = std::function<double(std::span<const int> rows)>;

enum class Aggregate { kMean, kVariance };

/// What to estimate and what to compare it with.
struct CheckSpec {
    std::string theorem_id;
    SortedDist alpha = SortedDist::uniform(1);
    size_t n = 0;
    size_t k = 0;
    ShapeStatistic statistic;
    Aggregate aggregate = Aggregate::kMean;
    double upper = 0;
    std::optional<double> lower;
};

/// Exact when requested or when d^n fits the enumeration cap in auto mode;
/// otherwise Monte Carlo with the budget doubling while inconclusive.
BoundCheck run_check(const CheckSpec &spec, const CheckOptions &options);
/// Monte Carlo on a fixed sample set; a straddling interval stays inconclusive.
BoundCheck run_check(const CheckSpec &spec, const ShapeSamples &samples, double z = 1.96);

CheckSpec excess_spec(const SortedDist &alpha, size_t k, size_t n);
CheckSpec row_mean_spec(const SortedDist &alpha, size_t k, size_t n);
CheckSpec row_mean_sharp_spec(const SortedDist &alpha, size_t k, size_t n);
CheckSpec top_row_spec(const SortedDist &alpha, size_t n);
CheckSpec bottom_row_spec(const SortedDist &alpha, size_t n);
CheckSpec variance_spec(const SortedDist &alpha, size_t k, size_t n);
CheckSpec mean_squared_spec(const SortedDist &alpha, size_t k, size_t n);
CheckSpec distance_rate_spec(DistanceMetric metric, const SortedDist &alpha, size_t n, size_t k);
CheckSpec entropy_bias_spec(const SortedDist &alpha, size_t n);
CheckSpec prefix_excess_spec(const SortedDist &alpha, size_t k, size_t n);

/// E[prefix_k(lambda) - prefix_k(alpha) n] against itw(alpha, k).
BoundCheck excess_estimate(const SortedDist &alpha, size_t k, size_t n, const CheckOptions &options);
/// Sample variance of lambda_k against 16 n.
BoundCheck variance_check(const SortedDist &alpha, size_t k, size_t n, const CheckOptions &options);
/// E(lambda_k - alpha_k n)^2 against mean_squared_bound.
BoundCheck mean_squared_check(const SortedDist &alpha, size_t k, size_t n, const CheckOptions &options);
BoundCheck distance_rate_check(DistanceMetric metric, const SortedDist &alpha, size_t n, size_t k,
                               const CheckOptions &options);
/// E H(lambda/n) inside [H(alpha) - 3 d^2 / (2n), H(alpha)].
BoundCheck entropy_bias_check(const SortedDist &alpha, size_t n, const CheckOptions &options);

/// E_beta prefix_k(lambda) - E_alpha prefix_k(lambda) >= 0 for beta majorizing
/// alpha, from independent samples. Passes unless the whole interval is
/// negative. Throws std::invalid_argument unless beta dominates alpha.
BoundCheck coupling_consequence_check(const SortedDist &alpha, const SortedDist &beta, size_t k, size_t n,
                                      const CheckOptions &options);

/// E lambda_1 / sqrt(n) <= 2 for Plancherel shapes. Exact when n! fits the cap.
BoundCheck plancherel_lis_check(size_t n, const CheckOptions &options);

/// estimate / (k sqrt(tail_sum(alpha, k) / n)) for a prefix-excess check; the
/// observed constant in the tail-sensitive form of the prefix bound. +infinity
/// when the tail is empty.
double prefix_tail_constant(const BoundCheck &prefix_check, const SortedDist &alpha);

}  // namespace rskbounds

#endif
