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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "rskbounds/bounds.h"
#include "rskbounds/greene.h"
#include "rskbounds/harness.h"
#include "rskbounds/metrics.h"
#include "rskbounds/rng.h"
#include "rskbounds/rsk.h"
#include "rskbounds/sampling.h"
#include "rskbounds/viennot.h"

namespace rskbounds {

namespace {

// Every suite reports through one of these.
class Tally {
   public:
    explicit Tally(VerifyReport &report) : report_(report) {
    }

    void check(bool ok, const std::function<std::string()> &describe) {
        report_.checked++;
        if (!ok) {
            if (report_.failures == 0) {
                report_.counterexample = describe();
            }
            report_.failures++;
        }
    }

    void error(double e) {
        report_.max_abs_error = std::max(report_.max_abs_error.value_or(0.0), e);
    }

   private:
    VerifyReport &report_;
};

// Words over [d] of every length 1..max_n.
void for_each_small_word(size_t max_n, size_t max_d, const std::function<void(const Word &)> &visit) {
    for (size_t n = 1; n <= max_n; n++) {
        for_each_word(static_cast<int>(max_d), n, visit);
    }
}

void for_each_permutation(size_t max_n, const std::function<void(const Word &)> &visit) {
    for (size_t n = 1; n <= max_n; n++) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            visit(Word(perm, static_cast<int>(n)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

Word random_word(Rng &rng, size_t n, int d) {
    std::vector<int> letters(n);
    for (auto &x : letters) {
        x = static_cast<int>(rng.below(static_cast<uint64_t>(d))) + 1;
    }
    return Word(std::move(letters), d);
}

Word random_permutation(Rng &rng, size_t n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (size_t i = n; i > 1; i--) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    return Word(std::move(perm), std::max<int>(1, static_cast<int>(n)));
}

// Uniform on the simplex, entries strictly positive.
std::vector<double> random_simplex(Rng &rng, size_t d) {
    std::vector<double> x(d);
    double total = 0;
    for (auto &v : x) {
        v = -std::log1p(-rng.uniform()) + 1e-300;
        total += v;
    }
    for (auto &v : x) {
        v /= total;
    }
    return x;
}

std::vector<double> random_sorted_positive(Rng &rng, size_t d) {
    auto x = random_simplex(rng, d);
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
}

std::vector<double> shuffled(Rng &rng, std::vector<double> x) {
    for (size_t i = x.size(); i > 1; i--) {
        std::swap(x[i - 1], x[rng.below(i)]);
    }
    return x;
}

std::string vec_str(const std::vector<double> &x) {
    std::ostringstream out;
    out.precision(17);
    out << '(';
    for (size_t i = 0; i < x.size(); i++) {
        out << (i ? "," : "") << x[i];
    }
    out << ')';
    return out.str();
}

size_t random_length(Rng &rng, size_t max_n) {
    return 1 + static_cast<size_t>(rng.below(std::max<size_t>(1, max_n)));
}

void suite_schensted(const VerifyOptions &o, Tally &t) {
    auto check = [&](const Word &w) {
        t.check(static_cast<size_t>(sh_rsk(w)[0]) == lis(w), [&] { return w.str(); });
    };
    for_each_small_word(o.max_n, o.max_d, check);
    Rng rng(o.seed, 1);
    for (uint64_t i = 0; i < o.random_trials; i++) {
        int d = 1 + static_cast<int>(rng.below(10));
        check(random_word(rng, random_length(rng, o.random_max_n), d));
    }
}

void suite_greene(const VerifyOptions &o, Tally &t) {
    for_each_small_word(o.max_n, o.max_d, [&](const Word &w) {
        bool ok = true;
        size_t bad_k = 0;
        YoungDiagram shape = sh_rsk(w);
        for (size_t k = 1; k <= w.size() && ok; k++) {
            if (static_cast<int64_t>(greene_invariant(w, k, o.max_n)) != prefix_sum(shape, k)) {
                ok = false;
                bad_k = k;
            }
        }
        t.check(ok, [&] { return w.str() + " k=" + std::to_string(bad_k); });
    });
}

void suite_lipschitz(const VerifyOptions &o, Tally &t) {
    for_each_small_word(o.max_n, o.max_d, [&](const Word &w) {
        YoungDiagram lambda = sh_rsk(w);
        std::vector<int> letters = w.letters();
        for (size_t pos = 0; pos < letters.size(); pos++) {
            int original = letters[pos];
            for (int x = 1; x <= static_cast<int>(o.max_d); x++) {
                if (x == original) {
                    continue;
                }
                letters[pos] = x;
                YoungDiagram mu = sh_rsk(Word(letters, static_cast<int>(o.max_d)));
                bool ok = true;
                for (size_t k = 1; k <= w.size(); k++) {
                    ok = ok && std::abs(prefix_sum(lambda, k) - prefix_sum(mu, k)) <= 1;
                    ok = ok && std::abs(lambda[k - 1] - mu[k - 1]) <= 2;
                }
                t.check(ok, [&] { return w.str() + " position " + std::to_string(pos + 1) + " -> " + std::to_string(x); });
            }
            letters[pos] = original;
        }
    });
}

void suite_lower_row(const VerifyOptions &o, Tally &t) {
    auto check = [&](const Word &w) {
        for (size_t k = 1; k <= o.max_k; k++) {
            t.check(check_lower_row_majorization(w, k), [&] { return w.str() + " k=" + std::to_string(k); });
        }
    };
    for_each_permutation(o.max_n, check);
    Rng rng(o.seed, 3);
    for (uint64_t i = 0; i < o.random_trials; i++) {
        int d = 1 + static_cast<int>(rng.below(std::max<uint64_t>(1, o.random_max_n)));
        check(standardize(random_word(rng, random_length(rng, o.random_max_n), d)));
    }
}

void suite_restriction(const VerifyOptions &o, Tally &t) {
    for_each_small_word(o.max_n, o.max_d, [&](const Word &w) {
        for (int k = 1; k <= static_cast<int>(o.max_d); k++) {
            t.check(check_restriction_weak_majorization(w, k), [&] { return w.str() + " k=" + std::to_string(k); });
        }
    });
}

void suite_viennot(const VerifyOptions &o, Tally &t) {
    auto check = [&](const Word &w) {
        JumpLineDiagram diagram = build_diagram(w);
        bool ok = skeleton_word(diagram) == bump_stream(w, 1);
        ok = ok && iterated_shape(w) == sh_rsk(w);
        ok = ok && diagram.lines.size() == lis(w);
        ok = ok && lines_non_crossing(diagram);
        t.check(ok, [&] { return w.str(); });
    };
    for_each_permutation(o.max_n, check);
    Rng rng(o.seed, 6);
    for (uint64_t i = 0; i < o.random_trials; i++) {
        check(random_permutation(rng, random_length(rng, o.random_max_n)));
    }
}

void suite_modmult(const VerifyOptions &o, Tally &t) {
    constexpr double kTolerance = 1e-10;
    for (size_t d = 1; d <= o.max_d; d++) {
        for (const auto &alpha : distinct_alpha_grid(d)) {
            for (size_t n = 1; n <= o.max_n; n++) {
                double prefix = 0;
                for (size_t k = 1; k <= d; k++) {
                    double an = alpha[k - 1] * static_cast<double>(n);
                    double got = modmult_expectation([&](const Histogram &h) { return h[k - 1] - an; }, alpha, n);
                    double want = modmult_row_excess(alpha, k);
                    double err = std::abs(got - want);
                    prefix += got;
                    double prefix_err = std::abs(prefix - itw(alpha, k));
                    t.error(std::max(err, prefix_err));
                    t.check(err < kTolerance && prefix_err < kTolerance, [&] {
                        return alpha.str() + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " row error " + std::to_string(err) + " prefix error " + std::to_string(prefix_err);
                    });
                }
            }
        }
    }
}

void suite_excess(const VerifyOptions &o, Tally &t) {
    constexpr double kTolerance = 1e-12;
    for (size_t d = 2; d <= o.max_d; d++) {
        std::vector<SortedDist> grid = distinct_alpha_grid(d);
        if (d == 2) {
            grid.insert(grid.begin(), SortedDist({0.75, 0.25}));
        }
        for (const auto &alpha : grid) {
            std::vector<double> previous(d + 1, 0.0);
            for (size_t n = 1; n <= o.max_n; n++) {
                ShapeLaw law = sw_distribution(alpha, n);
                for (size_t k = 1; k <= d; k++) {
                    double shift = prefix_sum(alpha.probs(), k) * static_cast<double>(n);
                    double exc = expectation(law, [&](const YoungDiagram &s) { return prefix_sum(s, k) - shift; });
                    double bound = itw(alpha, k);
                    bool ok = exc >= -kTolerance && exc <= bound + kTolerance && exc >= previous[k] - kTolerance;
                    t.check(ok, [&] {
                        return alpha.str() + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               " excess " + std::to_string(exc) + " previous " + std::to_string(previous[k]) +
                               " itw " + std::to_string(bound);
                    });
                    previous[k] = exc;
                }
            }
        }
    }
}

void suite_distances(const VerifyOptions &o, Tally &t) {
    Rng rng(o.seed, 9);
    uint64_t trials = std::max<uint64_t>(o.random_trials, 1);
    size_t max_d = std::max<size_t>(o.max_d, 1);
    for (uint64_t i = 0; i < trials; i++) {
        size_t d = 1 + static_cast<size_t>(rng.below(max_d));
        auto a = random_simplex(rng, d);
        auto b = random_simplex(rng, d);
        auto c = random_simplex(rng, d);
        double chi = chi_sq(a, b, d);
        bool ok = hellinger_sq(a, b, d) <= chi + kRealTolerance * std::max(1.0, chi);
        ok = ok && kl(a, b) <= chi + kRealTolerance * std::max(1.0, chi);
        for (size_t k = 1; k <= d; k++) {
            double chik = chi_sq(a, b, k);
            ok = ok && hellinger_sq(a, b, k) <= chik + kRealTolerance * std::max(1.0, chik);
        }
        double identity = -1;
        for (size_t j = 0; j < d; j++) {
            identity += a[j] * a[j] / b[j];
        }
        double err = std::abs(identity - chi) / std::max(1.0, chi);
        t.error(err);
        ok = ok && err <= kRealTolerance;
        double ab = std::sqrt(hellinger_sq(a, b, d));
        double bc = std::sqrt(hellinger_sq(b, c, d));
        double ac = std::sqrt(hellinger_sq(a, c, d));
        ok = ok && ac <= ab + bc + kRealTolerance;
        t.check(ok, [&] { return "a=" + vec_str(a) + " b=" + vec_str(b) + " c=" + vec_str(c); });
    }
}

// Compositions of `total` into exactly d positive parts, sorted and normalized.
std::vector<std::vector<double>> sorted_compositions(int total, size_t d) {
    std::vector<std::vector<double>> out;
    std::vector<int> parts;
    auto rec = [&](auto &self, int remaining, int cap) -> void {
        if (parts.size() == d) {
            if (remaining == 0) {
                std::vector<double> x;
                for (int p : parts) {
                    x.push_back(static_cast<double>(p) / total);
                }
                out.push_back(std::move(x));
            }
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; p--) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

void suite_rearrangement(const VerifyOptions &o, Tally &t) {
    // Exhaustive: every distinct permutation of every sorted composition of 12.
    for (size_t d = 1; d <= std::min<size_t>(o.max_d, 6); d++) {
        for (const auto &alpha : sorted_compositions(12, d)) {
            std::vector<double> beta = alpha;
            std::sort(beta.begin(), beta.end());
            do {
                t.check(check_rearrangement(alpha, beta), [&] { return vec_str(alpha) + " vs " + vec_str(beta); });
            } while (std::next_permutation(beta.begin(), beta.end()));
        }
    }
    Rng rng(o.seed, 10);
    size_t max_d = std::max<size_t>(o.max_d, 2);
    for (uint64_t i = 0; i < o.random_trials; i++) {
        size_t d = 1 + static_cast<size_t>(rng.below(max_d));
        auto alpha = random_sorted_positive(rng, d);
        auto beta = shuffled(rng, alpha);
        t.check(check_rearrangement(alpha, beta), [&] { return vec_str(alpha) + " vs " + vec_str(beta); });
        t.check(log_sum_bound(alpha), [&] { return "log bound " + vec_str(alpha); });
        if (d >= 2) {
            // zeta uniform in [alpha_{k+1}, alpha_k) for a random crossing k < d.
            size_t k = 1 + static_cast<size_t>(rng.below(d - 1));
            double lo = alpha[k];
            double hi = alpha[k - 1];
            double zeta = lo + (hi - lo) * rng.uniform();
            if (zeta < hi) {
                t.check(threshold_rearrangement_check(alpha, beta, zeta), [&] {
                    return vec_str(alpha) + " vs " + vec_str(beta) + " zeta=" + std::to_string(zeta);
                });
            }
        }
    }
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> kNames = {
        "schensted",        "greene",           "lipschitz",     "lower-row-majorization", "restriction-majorization",
        "viennot",          "modmult-identity", "excess-monotone", "distance-inequalities", "rearrangement",
    };
    return kNames;
}

std::vector<SortedDist> distinct_alpha_grid(size_t d) {
    if (d == 0) {
        return {};
    }
    if (d == 1) {
        return {SortedDist({1.0})};
    }
    std::vector<SortedDist> out;
    auto add = [&](std::vector<double> w) {
        double total = std::accumulate(w.begin(), w.end(), 0.0);
        for (auto &x : w) {
            x /= total;
        }
        out.push_back(SortedDist::from_unsorted(std::move(w)));
    };
    for (double r : {0.3, 0.5, 0.8}) {
        std::vector<double> w(d);
        for (size_t i = 0; i < d; i++) {
            w[i] = std::pow(r, static_cast<double>(i));
        }
        add(w);
    }
    std::vector<double> linear(d);
    for (size_t i = 0; i < d; i++) {
        linear[i] = static_cast<double>(d - i);
    }
    add(linear);
    out.push_back(SortedDist::zipf(d, 1));
    return out;
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions &options) {
    using Runner = void (*)(const VerifyOptions &, Tally &);
    static const std::vector<std::pair<std::string_view, Runner>> kRunners = {
        {"schensted", suite_schensted},
        {"greene", suite_greene},
        {"lipschitz", suite_lipschitz},
        {"lower-row-majorization", suite_lower_row},
        {"restriction-majorization", suite_restriction},
        {"viennot", suite_viennot},
        {"modmult-identity", suite_modmult},
        {"excess-monotone", suite_excess},
        {"distance-inequalities", suite_distances},
        {"rearrangement", suite_rearrangement},
    };
    for (const auto &[name, runner] : kRunners) {
        if (name == suite) {
            VerifyReport report;
            report.suite = std::string(suite);
            Tally tally(report);
            auto start = std::chrono::steady_clock::now();
            runner(options, tally);
            report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
    }
    throw ConfigError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace rskbounds
