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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rskbounds/metrics.h"
#include "rskbounds/rng.h"

namespace rskbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInequalityTolerance = 1e-12;

void require_row(const SortedDist &alpha, size_t k, const char *what) {
    if (k < 1 || k > alpha.size()) {
        throw std::out_of_range(std::string(what) + ": row index k must lie in [1.." + std::to_string(alpha.size()) +
                                "]");
    }
}

void require_positive_n(size_t n, const char *what) {
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": n must be positive");
    }
}

double dn(size_t n) {
    return static_cast<double>(n);
}

}  // namespace

double itw(const SortedDist &alpha, size_t k) {
    require_row(alpha, k, "itw");
    size_t d = alpha.size();
    if (k == d) {
        return 0;
    }
    if (alpha[k - 1] == alpha[k] && alpha[k] > 0) {
        return kInf;
    }
    double total = 0;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = k; j < d; j++) {
            if (alpha[j] > 0) {
                total += alpha[j] / (alpha[i] - alpha[j]);
            }
        }
    }
    return total;
}

double itw_trivial_bound(const SortedDist &alpha, size_t k) {
    require_row(alpha, k, "itw_trivial_bound");
    if (k == alpha.size()) {
        return 0;
    }
    double gap = alpha[k - 1] - alpha[k];
    if (!(gap > 0)) {
        throw std::invalid_argument("itw_trivial_bound: needs alpha_k > alpha_{k+1}");
    }
    return dn(k) * tail_sum(alpha.probs(), k) / gap;
}

double modmult_row_excess(const SortedDist &alpha, size_t k) {
    require_row(alpha, k, "modmult_row_excess");
    if (!alpha.strictly_distinct()) {
        throw std::invalid_argument("modmult_row_excess: requires strictly decreasing positive alpha");
    }
    double ak = alpha[k - 1];
    double total = 0;
    for (size_t j = k; j < alpha.size(); j++) {
        total += alpha[j] / (ak - alpha[j]);
    }
    for (size_t i = 0; i + 1 < k; i++) {
        total -= ak / (alpha[i] - ak);
    }
    return total;
}

Interval row_mean_bounds(const SortedDist &alpha, size_t k, size_t n) {
    require_row(alpha, k, "row_mean_bounds");
    double ak = alpha[k - 1];
    double nu = std::min(1.0, ak * dn(alpha.size()));
    double center = ak * dn(n);
    double radius = 2 * std::sqrt(nu * dn(n));
    return {center - radius, center + radius};
}

Interval row_mean_bounds_sharp(const SortedDist &alpha, size_t k, size_t n) {
    require_row(alpha, k, "row_mean_bounds_sharp");
    double ak = alpha[k - 1];
    double center = ak * dn(n);
    double tail = tail_sum(alpha.probs(), k - 1);
    return {center - 2 * std::sqrt(ak * dn(k) * dn(n)), center + 2 * std::sqrt(tail * dn(n))};
}

double top_row_mean_upper(const SortedDist &alpha, size_t n) {
    return alpha[0] * dn(n) + 2 * std::sqrt(dn(n));
}

double bottom_row_mean_lower(const SortedDist &alpha, size_t n) {
    double ad = alpha[alpha.size() - 1];
    return ad * dn(n) - 2 * std::sqrt(ad * dn(alpha.size()) * dn(n));
}

double mean_squared_bound(const SortedDist &alpha, size_t k, size_t n) {
    require_row(alpha, k, "mean_squared_bound");
    return 42 * alpha[k - 1] * dn(k) * dn(n) + 42 * tail_sum(alpha.probs(), k - 1) * dn(n);
}

double prefix_excess_bound(size_t k, size_t n) {
    require_positive_n(n, "prefix_excess_bound");
    return 2 * dn(k) / std::sqrt(dn(n));
}

namespace {

struct MetricInfo {
    DistanceMetric metric;
    std::string_view name;
    bool truncated;
};

constexpr std::array<MetricInfo, 10> kMetrics{{
    {DistanceMetric::kChiSq, "chi-sq", false},
    {DistanceMetric::kHellingerSq, "hellinger-sq", false},
    {DistanceMetric::kKl, "kl", false},
    {DistanceMetric::kL2Sq, "l2-sq", false},
    {DistanceMetric::kL1, "l1", false},
    {DistanceMetric::kL2SqTruncated, "l2-sq-trunc", true},
    {DistanceMetric::kHellingerSqTruncated, "hellinger-sq-trunc", true},
    {DistanceMetric::kChiSqTruncated, "chi-sq-trunc", true},
    {DistanceMetric::kL1Truncated, "l1-trunc", true},
    {DistanceMetric::kL1TruncatedSharp, "l1-trunc-sharp", true},
}};

constexpr std::array<DistanceMetric, 10> kMetricList{
    DistanceMetric::kChiSq,         DistanceMetric::kHellingerSq,          DistanceMetric::kKl,
    DistanceMetric::kL2Sq,          DistanceMetric::kL1,                   DistanceMetric::kL2SqTruncated,
    DistanceMetric::kHellingerSqTruncated, DistanceMetric::kChiSqTruncated, DistanceMetric::kL1Truncated,
    DistanceMetric::kL1TruncatedSharp,
};

const MetricInfo &info(DistanceMetric m) {
    return kMetrics[static_cast<size_t>(m)];
}

}  // namespace

std::span<const DistanceMetric> all_distance_metrics() {
    return kMetricList;
}

std::string_view metric_name(DistanceMetric m) {
    return info(m).name;
}

DistanceMetric parse_metric(std::string_view name) {
    for (const auto &entry : kMetrics) {
        if (entry.name == name) {
            return entry.metric;
        }
    }
    throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

bool metric_is_truncated(DistanceMetric m) {
    return info(m).truncated;
}

double distance_value(DistanceMetric m, std::span<const double> lambda_bar, std::span<const double> alpha, size_t k) {
    size_t d = std::max(lambda_bar.size(), alpha.size());
    switch (m) {
        case DistanceMetric::kChiSq:
            return chi_sq(lambda_bar, alpha, d);
        case DistanceMetric::kHellingerSq:
            return hellinger_sq(lambda_bar, alpha, d);
        case DistanceMetric::kKl:
            return kl(lambda_bar, alpha);
        case DistanceMetric::kL2Sq:
            return l2_sq(lambda_bar, alpha, d);
        case DistanceMetric::kL1:
            return l1(lambda_bar, alpha);
        case DistanceMetric::kL2SqTruncated:
            return l2_sq(lambda_bar, alpha, k);
        case DistanceMetric::kHellingerSqTruncated:
            return hellinger_sq(lambda_bar, alpha, k);
        case DistanceMetric::kChiSqTruncated:
            return chi_sq(lambda_bar, alpha, k);
        case DistanceMetric::kL1Truncated:
        case DistanceMetric::kL1TruncatedSharp:
            return l1_truncated(lambda_bar, alpha, k);
    }
    throw std::invalid_argument("distance_value: bad metric");
}

double distance_rate_bound(DistanceMetric m, size_t d, size_t k, size_t n) {
    require_positive_n(n, "distance_rate_bound");
    double dd = dn(d);
    double kk = dn(k);
    double nn = dn(n);
    switch (m) {
        case DistanceMetric::kChiSq:
        case DistanceMetric::kHellingerSq:
        case DistanceMetric::kKl:
            return dd * dd / nn;
        case DistanceMetric::kL2Sq:
            return dd / nn;
        case DistanceMetric::kL1:
            return dd / std::sqrt(nn);
        case DistanceMetric::kL2SqTruncated:
            return 46 * kk / nn;
        case DistanceMetric::kHellingerSqTruncated:
        case DistanceMetric::kChiSqTruncated:
            return 46 * kk * dd / nn;
        case DistanceMetric::kL1Truncated:
            return (1.92 * kk + 0.5) / std::sqrt(nn);
        case DistanceMetric::kL1TruncatedSharp:
            return (1.5 * kk + 0.5) / std::sqrt(nn);
    }
    throw std::invalid_argument("distance_rate_bound: bad metric");
}

namespace {

void require_permutation(std::span<const double> alpha, std::span<const double> beta, const char *what) {
    std::vector<double> a(alpha.begin(), alpha.end());
    std::vector<double> b(beta.begin(), beta.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": beta is not a permutation of alpha");
    }
}

void require_positive_sorted(std::span<const double> alpha, const char *what) {
    if (alpha.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty vector");
    }
    require_sorted(alpha, what);
    if (!(alpha.back() > 0)) {
        throw std::invalid_argument(std::string(what) + ": entries must be positive");
    }
}

}  // namespace

double rearrangement_rhs(std::span<const double> alpha, std::span<const double> beta) {
    require_positive_sorted(alpha, "rearrangement_rhs");
    require_permutation(alpha, beta, "rearrangement_rhs");
    double total = 0;
    double partial = 0;
    for (size_t j = 0; j + 1 < alpha.size(); j++) {
        partial += alpha[j] - beta[j];
        total += (alpha[j] - alpha[j + 1]) / alpha[j] * partial;
    }
    return 2 * total;
}

bool check_rearrangement(std::span<const double> alpha, std::span<const double> beta) {
    return hellinger_sq(alpha, beta, alpha.size()) <= rearrangement_rhs(alpha, beta) + kInequalityTolerance;
}

double log_sum_lhs(std::span<const double> alpha) {
    require_positive_sorted(alpha, "log_sum_lhs");
    double total = 0;
    for (size_t i = 0; i + 1 < alpha.size(); i++) {
        total += (alpha[i] - alpha[i + 1]) / alpha[i];
    }
    return total;
}

bool log_sum_bound(std::span<const double> alpha) {
    double lhs = log_sum_lhs(alpha);
    double bound = std::min(dn(alpha.size()), std::log(alpha.front() / alpha.back()));
    return lhs <= bound + kInequalityTolerance;
}

double threshold_rearrangement_rhs(std::span<const double> alpha, std::span<const double> beta, double zeta) {
    require_sorted(alpha, "threshold_rearrangement_rhs");
    require_permutation(alpha, beta, "threshold_rearrangement_rhs");
    size_t d = alpha.size();
    if (!(zeta >= 0)) {
        throw std::invalid_argument("threshold_rearrangement_rhs: zeta must be nonnegative");
    }
    // k = number of entries strictly above zeta.
    size_t k = 0;
    while (k < d && alpha[k] > zeta) {
        k++;
    }
    if (k == 0 || k == d) {
        throw std::invalid_argument("threshold_rearrangement_rhs: need alpha_k > zeta >= alpha_{k+1} with k < d");
    }
    std::vector<double> primed(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(k));
    primed.push_back(zeta);
    double total = 0;
    double partial = 0;
    for (size_t j = 0; j < k; j++) {
        partial += alpha[j] - beta[j];
        total += (primed[j] - primed[j + 1]) / primed[j] * partial;
    }
    double log_ratio = zeta > 0 ? std::log(alpha[0] / zeta) : kInf;
    double big_l = std::min(dn(k), log_ratio);
    return 4 * total + dn(d) * zeta + 8 * dn(k) * big_l * zeta;
}

bool threshold_rearrangement_check(std::span<const double> alpha, std::span<const double> beta, double zeta) {
    return hellinger_sq(alpha, beta, alpha.size()) <=
           threshold_rearrangement_rhs(alpha, beta, zeta) + kInequalityTolerance;
}

SortedDist lift_top(const SortedDist &alpha, double g) {
    if (!(g >= 0) || alpha[0] + g > 1 + kRealTolerance) {
        throw std::invalid_argument("lift_top: need 0 <= g and alpha_1 + g <= 1");
    }
    std::vector<double> beta = alpha.vec();
    double remaining = g;
    for (size_t i = beta.size(); i-- > 1 && remaining > 0;) {
        double take = std::min(beta[i], remaining);
        beta[i] -= take;
        remaining -= take;
    }
    beta[0] += g - remaining;
    return SortedDist(std::move(beta));
}

SortedDist drop_bottom(const SortedDist &alpha, double g) {
    size_t d = alpha.size();
    if (d < 2 || !(g >= 0) || g > alpha[d - 1]) {
        throw std::invalid_argument("drop_bottom: need d >= 2 and 0 <= g <= alpha_d");
    }
    std::vector<double> beta = alpha.vec();
    beta[d - 1] -= g;
    beta[0] += g;
    return SortedDist(std::move(beta));
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kPass:
            return "pass";
        case Verdict::kFail:
            return "fail";
        case Verdict::kInconclusive:
            return "inconclusive";
    }
    return "?";
}

std::string_view mode_name(EvalMode m) {
    switch (m) {
        case EvalMode::kAuto:
            return "auto";
        case EvalMode::kExact:
            return "exact";
        case EvalMode::kMc:
            return "mc";
    }
    return "?";
}

EvalMode parse_mode(std::string_view name) {
    for (EvalMode m : {EvalMode::kAuto, EvalMode::kExact, EvalMode::kMc}) {
        if (mode_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

Verdict decide(double estimate, double radius, double upper, std::optional<double> lower) {
    if (estimate - radius > upper || (lower && estimate + radius < *lower)) {
        return Verdict::kFail;
    }
    if (estimate + radius <= upper && (!lower || estimate - radius >= *lower)) {
        return Verdict::kPass;
    }
    return Verdict::kInconclusive;
}

void extend_sw_samples(ShapeSamples &samples, const SortedDist &alpha, uint64_t total, uint64_t seed,
                       uint64_t stream) {
    if (samples.d != 0 && samples.d != alpha.size()) {
        throw std::invalid_argument("extend_sw_samples: dimension mismatch");
    }
    samples.d = alpha.size();
    SwSampler sampler(alpha);
    std::vector<int> rows;
    for (uint64_t i = samples.count(); i < total; i++) {
        Rng rng(seed, stream, i);
        sampler.sample(samples.n, rng, rows);
        samples.rows.insert(samples.rows.end(), rows.begin(), rows.end());
    }
}

ShapeSamples draw_sw_samples(const SortedDist &alpha, size_t n, uint64_t count, uint64_t seed, uint64_t stream) {
    ShapeSamples samples;
    samples.d = alpha.size();
    samples.n = n;
    extend_sw_samples(samples, alpha, count, seed, stream);
    return samples;
}

namespace {

struct Moments {
    double estimate;
    double standard_error;
};

// Sums run in index order so the result never depends on how samples were produced.
Moments summarize(const std::vector<double> &values, Aggregate aggregate) {
    size_t count = values.size();
    if (count == 0) {
        return {0, kInf};
    }
    double nn = dn(count);
    long double sum = 0;
    for (double v : values) {
        sum += v;
    }
    double mean = static_cast<double>(sum / nn);
    long double m2 = 0;
    long double m4 = 0;
    for (double v : values) {
        long double t = v - mean;
        m2 += t * t;
        m4 += t * t * t * t;
    }
    if (count < 2) {
        return {aggregate == Aggregate::kMean ? mean : 0.0, kInf};
    }
    double sample_var = static_cast<double>(m2 / (nn - 1));
    if (aggregate == Aggregate::kMean) {
        return {mean, std::sqrt(sample_var / nn)};
    }
    double c2 = static_cast<double>(m2 / nn);
    double c4 = static_cast<double>(m4 / nn);
    return {sample_var, std::sqrt(std::max(0.0, c4 - c2 * c2) / nn)};
}

BoundCheck make_check(const CheckSpec &spec) {
    BoundCheck out;
    out.theorem_id = spec.theorem_id;
    out.n = spec.n;
    out.k = spec.k;
    out.bound = spec.upper;
    out.lower = spec.lower;
    return out;
}

bool use_exact(EvalMode mode, uint64_t enumeration_size, const EnumerationLimits &limits) {
    return mode == EvalMode::kExact || (mode == EvalMode::kAuto && enumeration_size <= limits.max_words);
}

void finish_exact(BoundCheck &out, double estimate, double tolerance) {
    out.mode = EvalMode::kExact;
    out.estimate = estimate;
    out.ci_radius = 0;
    double slack_hi = tolerance * std::max(1.0, std::abs(out.bound));
    std::optional<double> lower = out.lower;
    if (lower) {
        *lower -= tolerance * std::max(1.0, std::abs(*lower));
    }
    out.verdict = decide(estimate, 0, out.bound + slack_hi, lower);
}

// Grows `values` through `extend(total)` until the verdict settles or the budget is spent.
void run_monte_carlo(BoundCheck &out, std::vector<double> &values, Aggregate aggregate,
                     const std::function<void(uint64_t)> &extend, const CheckOptions &options) {
    out.mode = EvalMode::kMc;
    uint64_t total = std::max<uint64_t>(1, options.budget);
    while (true) {
        extend(total);
        Moments m = summarize(values, aggregate);
        out.estimate = m.estimate;
        out.ci_radius = options.z * m.standard_error;
        out.samples = values.size();
        out.verdict = decide(out.estimate, out.ci_radius, out.bound, out.lower);
        if (out.verdict != Verdict::kInconclusive || total >= options.max_budget) {
            return;
        }
        total = std::min(total * 2, options.max_budget);
    }
}

}  // namespace

BoundCheck run_check(const CheckSpec &spec, const CheckOptions &options) {
    BoundCheck out = make_check(spec);
    int d = static_cast<int>(spec.alpha.size());
    if (use_exact(options.mode, word_count(d, spec.n), options.limits)) {
        ShapeLaw law = sw_distribution(spec.alpha, spec.n, options.limits);
        long double mean = 0;
        long double second = 0;
        for (const auto &[shape, p] : law) {
            double v = spec.statistic(shape.padded(spec.alpha.size()).rows());
            mean += static_cast<long double>(p) * v;
            second += static_cast<long double>(p) * v * v;
        }
        double estimate = spec.aggregate == Aggregate::kMean ? static_cast<double>(mean)
                                                             : static_cast<double>(second - mean * mean);
        out.samples = word_count(d, spec.n);
        finish_exact(out, estimate, options.exact_tolerance);
        return out;
    }
    ShapeSamples samples;
    samples.d = spec.alpha.size();
    samples.n = spec.n;
    std::vector<double> values;
    auto extend = [&](uint64_t total) {
        extend_sw_samples(samples, spec.alpha, total, options.seed, options.stream);
        for (size_t i = values.size(); i < samples.count(); i++) {
            values.push_back(spec.statistic(samples.row(i)));
        }
    };
    run_monte_carlo(out, values, spec.aggregate, extend, options);
    return out;
}

BoundCheck run_check(const CheckSpec &spec, const ShapeSamples &samples, double z) {
    if (samples.n != spec.n || samples.d != spec.alpha.size()) {
        throw std::invalid_argument("run_check: samples drawn for a different (n, d)");
    }
    BoundCheck out = make_check(spec);
    std::vector<double> values;
    values.reserve(samples.count());
    for (size_t i = 0; i < samples.count(); i++) {
        values.push_back(spec.statistic(samples.row(i)));
    }
    Moments m = summarize(values, spec.aggregate);
    out.mode = EvalMode::kMc;
    out.estimate = m.estimate;
    out.ci_radius = z * m.standard_error;
    out.samples = values.size();
    out.verdict = decide(out.estimate, out.ci_radius, out.bound, out.lower);
    return out;
}

namespace {

int64_t prefix_of(std::span<const int> rows, size_t k) {
    int64_t total = 0;
    for (size_t i = 0; i < k && i < rows.size(); i++) {
        total += rows[i];
    }
    return total;
}

std::vector<double> normalized(std::span<const int> rows, size_t n) {
    std::vector<double> out(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        out[i] = rows[i] / dn(n);
    }
    return out;
}

}  // namespace

CheckSpec excess_spec(const SortedDist &alpha, size_t k, size_t n) {
    require_row(alpha, k, "excess_spec");
    double shift = prefix_sum(alpha.probs(), k) * dn(n);
    return CheckSpec{
        .theorem_id = "excess-itw",
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic = [k, shift](std::span<const int> rows) { return static_cast<double>(prefix_of(rows, k)) - shift; },
        .upper = itw(alpha, k),
        .lower = std::nullopt,
    };
}

CheckSpec row_mean_spec(const SortedDist &alpha, size_t k, size_t n) {
    Interval window = row_mean_bounds(alpha, k, n);
    return CheckSpec{
        .theorem_id = "row-mean",
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic = [k](std::span<const int> rows) { return static_cast<double>(rows[k - 1]); },
        .upper = window.upper,
        .lower = window.lower,
    };
}

CheckSpec row_mean_sharp_spec(const SortedDist &alpha, size_t k, size_t n) {
    Interval window = row_mean_bounds_sharp(alpha, k, n);
    return CheckSpec{
        .theorem_id = "row-mean-sharp",
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic = [k](std::span<const int> rows) { return static_cast<double>(rows[k - 1]); },
        .upper = window.upper,
        .lower = window.lower,
    };
}

CheckSpec top_row_spec(const SortedDist &alpha, size_t n) {
    return CheckSpec{
        .theorem_id = "top-row-mean",
        .alpha = alpha,
        .n = n,
        .k = 1,
        .statistic = [](std::span<const int> rows) { return static_cast<double>(rows[0]); },
        .upper = top_row_mean_upper(alpha, n),
        .lower = std::nullopt,
    };
}

CheckSpec bottom_row_spec(const SortedDist &alpha, size_t n) {
    size_t d = alpha.size();
    return CheckSpec{
        .theorem_id = "bottom-row-mean",
        .alpha = alpha,
        .n = n,
        .k = d,
        .statistic = [d](std::span<const int> rows) { return static_cast<double>(rows[d - 1]); },
        .upper = kInf,
        .lower = bottom_row_mean_lower(alpha, n),
    };
}

CheckSpec variance_spec(const SortedDist &alpha, size_t k, size_t n) {
    require_row(alpha, k, "variance_spec");
    return CheckSpec{
        .theorem_id = "row-variance",
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic = [k](std::span<const int> rows) { return static_cast<double>(rows[k - 1]); },
        .aggregate = Aggregate::kVariance,
        .upper = 16 * dn(n),
        .lower = std::nullopt,
    };
}

CheckSpec mean_squared_spec(const SortedDist &alpha, size_t k, size_t n) {
    double center = alpha[k - 1] * dn(n);
    return CheckSpec{
        .theorem_id = "row-mean-squared",
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic =
            [k, center](std::span<const int> rows) {
                double t = rows[k - 1] - center;
                return t * t;
            },
        .upper = mean_squared_bound(alpha, k, n),
        .lower = std::nullopt,
    };
}

CheckSpec distance_rate_spec(DistanceMetric metric, const SortedDist &alpha, size_t n, size_t k) {
    size_t d = alpha.size();
    if (metric_is_truncated(metric)) {
        require_row(alpha, k, "distance_rate_spec");
    } else {
        k = d;
    }
    std::vector<double> a = alpha.vec();
    return CheckSpec{
        .theorem_id = "distance-rate:" + std::string(metric_name(metric)),
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic =
            [metric, a, n, k](std::span<const int> rows) { return distance_value(metric, normalized(rows, n), a, k); },
        .upper = distance_rate_bound(metric, d, k, n),
        .lower = std::nullopt,
    };
}

CheckSpec entropy_bias_spec(const SortedDist &alpha, size_t n) {
    require_positive_n(n, "entropy_bias_spec");
    double h = shannon_entropy(alpha.probs());
    double d = dn(alpha.size());
    return CheckSpec{
        .theorem_id = "entropy-bias",
        .alpha = alpha,
        .n = n,
        .k = alpha.size(),
        .statistic = [n](std::span<const int> rows) { return shannon_entropy(normalized(rows, n)); },
        .upper = h,
        .lower = h - 3 * d * d / (2 * dn(n)),
    };
}

CheckSpec prefix_excess_spec(const SortedDist &alpha, size_t k, size_t n) {
    require_row(alpha, k, "prefix_excess_spec");
    double head = prefix_sum(alpha.probs(), k);
    return CheckSpec{
        .theorem_id = "prefix-excess",
        .alpha = alpha,
        .n = n,
        .k = k,
        .statistic = [k, n, head](std::span<const int> rows) { return prefix_of(rows, k) / dn(n) - head; },
        .upper = prefix_excess_bound(k, n),
        .lower = std::nullopt,
    };
}

BoundCheck excess_estimate(const SortedDist &alpha, size_t k, size_t n, const CheckOptions &options) {
    return run_check(excess_spec(alpha, k, n), options);
}

BoundCheck variance_check(const SortedDist &alpha, size_t k, size_t n, const CheckOptions &options) {
    return run_check(variance_spec(alpha, k, n), options);
}

BoundCheck mean_squared_check(const SortedDist &alpha, size_t k, size_t n, const CheckOptions &options) {
    return run_check(mean_squared_spec(alpha, k, n), options);
}

BoundCheck distance_rate_check(DistanceMetric metric, const SortedDist &alpha, size_t n, size_t k,
                               const CheckOptions &options) {
    return run_check(distance_rate_spec(metric, alpha, n, k), options);
}

BoundCheck entropy_bias_check(const SortedDist &alpha, size_t n, const CheckOptions &options) {
    return run_check(entropy_bias_spec(alpha, n), options);
}

BoundCheck coupling_consequence_check(const SortedDist &alpha, const SortedDist &beta, size_t k, size_t n,
                                      const CheckOptions &options) {
    if (!dominates(beta.probs(), alpha.probs())) {
        throw std::invalid_argument("coupling_consequence_check: beta must majorize alpha");
    }
    if (alpha.size() != beta.size()) {
        throw std::invalid_argument("coupling_consequence_check: alpha and beta must have the same length");
    }
    require_row(alpha, k, "coupling_consequence_check");
    BoundCheck out;
    out.theorem_id = "coupling-prefix";
    out.n = n;
    out.k = k;
    out.bound = kInf;
    out.lower = 0.0;
    auto statistic = [k](std::span<const int> rows) { return static_cast<double>(prefix_of(rows, k)); };
    int d = static_cast<int>(alpha.size());
    if (use_exact(options.mode, word_count(d, n), options.limits)) {
        double eb = expectation(sw_distribution(beta, n, options.limits),
                                [&](const YoungDiagram &s) { return statistic(s.padded(alpha.size()).rows()); });
        double ea = expectation(sw_distribution(alpha, n, options.limits),
                                [&](const YoungDiagram &s) { return statistic(s.padded(alpha.size()).rows()); });
        out.samples = 2 * word_count(d, n);
        finish_exact(out, eb - ea, options.exact_tolerance);
        return out;
    }
    uint64_t count = std::max<uint64_t>(2, options.budget);
    // Independent streams for the two distributions.
    ShapeSamples sa = draw_sw_samples(alpha, n, count, options.seed, options.stream * 2);
    ShapeSamples sb = draw_sw_samples(beta, n, count, options.seed, options.stream * 2 + 1);
    std::vector<double> va;
    std::vector<double> vb;
    for (size_t i = 0; i < count; i++) {
        va.push_back(statistic(sa.row(i)));
        vb.push_back(statistic(sb.row(i)));
    }
    Moments ma = summarize(va, Aggregate::kMean);
    Moments mb = summarize(vb, Aggregate::kMean);
    out.mode = EvalMode::kMc;
    out.estimate = mb.estimate - ma.estimate;
    out.ci_radius = options.z * std::hypot(ma.standard_error, mb.standard_error);
    out.samples = 2 * count;
    out.verdict = out.estimate + out.ci_radius >= 0 ? Verdict::kPass : Verdict::kFail;
    return out;
}

BoundCheck plancherel_lis_check(size_t n, const CheckOptions &options) {
    require_positive_n(n, "plancherel_lis_check");
    BoundCheck out;
    out.theorem_id = "plancherel-lis";
    out.n = n;
    out.k = 1;
    out.bound = 2;
    double scale = std::sqrt(dn(n));
    uint64_t factorial = 1;
    for (uint64_t i = 2; i <= n && factorial <= options.limits.max_words; i++) {
        factorial *= i;
    }
    if (use_exact(options.mode, factorial, options.limits)) {
        double mean = expectation(plancherel_distribution(n, options.limits),
                                  [&](const YoungDiagram &s) { return s[0] / scale; });
        out.samples = factorial;
        finish_exact(out, mean, options.exact_tolerance);
        return out;
    }
    std::vector<double> values;
    auto extend = [&](uint64_t total) {
        for (uint64_t i = values.size(); i < total; i++) {
            Rng rng(options.seed, options.stream, i);
            values.push_back(sample_plancherel(n, rng)[0] / scale);
        }
    };
    run_monte_carlo(out, values, Aggregate::kMean, extend, options);
    return out;
}

double prefix_tail_constant(const BoundCheck &prefix_check, const SortedDist &alpha) {
    double tail = tail_sum(alpha.probs(), prefix_check.k);
    if (!(tail > 0)) {
        return kInf;
    }
    return prefix_check.estimate / (dn(prefix_check.k) * std::sqrt(tail / dn(prefix_check.n)));
}

}  // namespace rskbounds
