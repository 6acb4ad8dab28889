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

#include "rskbounds/sampling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rskbounds {

Word sample_word(const SortedDist &alpha, size_t n, Rng &rng) {
    AliasTable alias(alpha.probs());
    std::vector<int> letters(n);
    for (auto &x : letters) {
        x = static_cast<int>(alias.sample(rng)) + 1;
    }
    return Word(std::move(letters), static_cast<int>(alpha.size()));
}

Word sample_word(const SortedDist &alpha, size_t n, uint64_t seed) {
    Rng rng(seed);
    return sample_word(alpha, n, rng);
}

SwSampler::SwSampler(const SortedDist &alpha) : alias_(alpha.probs()) {
    if (alpha.size() <= static_cast<size_t>(ShapeAccumulator::kMaxAlphabet)) {
        acc_.emplace(static_cast<int>(alpha.size()));
    }
}

void SwSampler::sample(size_t n, Rng &rng, std::vector<int> &rows) {
    if (acc_) {
        acc_->clear();
        for (size_t t = 0; t < n; t++) {
            acc_->insert(static_cast<int>(alias_.sample(rng)) + 1);
        }
        acc_->shape_into(rows);
        return;
    }
    std::vector<int> letters(n);
    for (auto &x : letters) {
        x = static_cast<int>(alias_.sample(rng)) + 1;
    }
    int d = static_cast<int>(alias_.size());
    rows = sh_rsk(Word(std::move(letters), d)).padded(alias_.size()).rows();
}

YoungDiagram sample_sw(const SortedDist &alpha, size_t n, Rng &rng) {
    SwSampler sampler(alpha);
    std::vector<int> rows;
    sampler.sample(n, rng, rows);
    return YoungDiagram(std::move(rows)).trimmed();
}

YoungDiagram sample_sw(const SortedDist &alpha, size_t n, uint64_t seed) {
    Rng rng(seed);
    return sample_sw(alpha, n, rng);
}

YoungDiagram sample_plancherel(size_t n, Rng &rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (size_t i = n; i > 1; i--) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    // Distinct letters, so the bump point is a plain lower bound.
    std::vector<std::vector<int>> rows;
    for (int letter : perm) {
        int x = letter;
        for (size_t r = 0;; r++) {
            if (r == rows.size()) {
                rows.emplace_back();
            }
            auto &row = rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    }
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto &row : rows) {
        lengths.push_back(static_cast<int>(row.size()));
    }
    return YoungDiagram(std::move(lengths));
}

YoungDiagram sample_plancherel(size_t n, uint64_t seed) {
    Rng rng(seed);
    return sample_plancherel(n, rng);
}

uint64_t word_count(int d, size_t n) {
    if (d < 1) {
        throw std::invalid_argument("word_count: d must be positive");
    }
    uint64_t total = 1;
    for (size_t i = 0; i < n; i++) {
        if (total > std::numeric_limits<uint64_t>::max() / static_cast<uint64_t>(d)) {
            return std::numeric_limits<uint64_t>::max();
        }
        total *= static_cast<uint64_t>(d);
    }
    return total;
}

uint64_t histogram_count(int d, size_t n) {
    if (d < 1) {
        throw std::invalid_argument("histogram_count: d must be positive");
    }
    // C(n + d - 1, d - 1) built up as exact running binomials.
    unsigned __int128 c = 1;
    for (uint64_t i = 1; i < static_cast<uint64_t>(d); i++) {
        c = c * (n + i) / i;
        if (c > std::numeric_limits<uint64_t>::max()) {
            return std::numeric_limits<uint64_t>::max();
        }
    }
    return static_cast<uint64_t>(c);
}

namespace {

void require_words_within(int d, size_t n, const EnumerationLimits &limits, const char *what) {
    uint64_t count = word_count(d, n);
    if (count > limits.max_words) {
        throw std::length_error(std::string(what) + ": " + std::to_string(d) + "^" + std::to_string(n) +
                                " words exceeds the enumeration cap " + std::to_string(limits.max_words));
    }
}

}  // namespace

void for_each_word(int d, size_t n, const std::function<void(const Word &)> &visit,
                   const EnumerationLimits &limits) {
    require_words_within(d, n, limits, "for_each_word");
    std::vector<int> letters(n, 1);
    while (true) {
        visit(Word(letters, d));
        size_t i = n;
        while (i > 0 && letters[i - 1] == d) {
            letters[i - 1] = 1;
            i--;
        }
        if (i == 0) {
            return;
        }
        letters[i - 1]++;
    }
}

std::vector<Word> enumerate_words(int d, size_t n, const EnumerationLimits &limits) {
    std::vector<Word> out;
    for_each_word(d, n, [&](const Word &w) { out.push_back(w); }, limits);
    return out;
}

void for_each_histogram(int d, size_t n, const std::function<void(const Histogram &)> &visit,
                        const EnumerationLimits &limits) {
    uint64_t count = histogram_count(d, n);
    if (count > limits.max_histograms) {
        throw std::length_error("for_each_histogram: " + std::to_string(count) +
                                " histograms exceeds the enumeration cap " + std::to_string(limits.max_histograms));
    }
    Histogram h(static_cast<size_t>(d), 0);
    auto rec = [&](auto &self, size_t i, int remaining) -> void {
        if (i + 1 == h.size()) {
            h[i] = remaining;
            visit(h);
            return;
        }
        for (int c = remaining; c >= 0; c--) {
            h[i] = c;
            self(self, i + 1, remaining - c);
        }
    };
    rec(rec, 0, static_cast<int>(n));
}

std::vector<Histogram> enumerate_histograms(int d, size_t n, const EnumerationLimits &limits) {
    std::vector<Histogram> out;
    for_each_histogram(d, n, [&](const Histogram &h) { out.push_back(h); }, limits);
    return out;
}

double multinomial_pmf(const Histogram &h, const SortedDist &alpha) {
    if (h.size() != alpha.size()) {
        throw std::invalid_argument("multinomial_pmf: histogram and distribution lengths differ");
    }
    long double coefficient = 1;
    long double power = 1;
    int m = 0;
    for (size_t i = 0; i < h.size(); i++) {
        if (h[i] < 0) {
            throw std::invalid_argument("multinomial_pmf: negative count");
        }
        for (int j = 1; j <= h[i]; j++) {
            m++;
            coefficient = coefficient * m / j;
            power *= alpha[i];
        }
    }
    return static_cast<double>(coefficient * power);
}

double mod_density(const Histogram &h, const SortedDist &alpha) {
    if (h.size() != alpha.size()) {
        throw std::invalid_argument("mod_density: histogram and distribution lengths differ");
    }
    if (!alpha.strictly_distinct()) {
        throw std::invalid_argument("mod_density: requires strictly decreasing positive alpha, got " + alpha.str());
    }
    int64_t n = std::accumulate(h.begin(), h.end(), int64_t{0});
    if (n == 0) {
        return 1;
    }
    double nn = static_cast<double>(n);
    double f = 1;
    for (size_t i = 0; i < h.size(); i++) {
        for (size_t j = i + 1; j < h.size(); j++) {
            double deviation = h[i] / (alpha[i] * nn) - h[j] / (alpha[j] * nn);
            f += alpha[j] / (alpha[i] - alpha[j]) * deviation;
        }
    }
    return f;
}

double modmult_expectation(const std::function<double(const Histogram &)> &f, const SortedDist &alpha, size_t n,
                           const EnumerationLimits &limits) {
    if (!alpha.strictly_distinct()) {
        throw std::invalid_argument("modmult_expectation: requires strictly decreasing positive alpha");
    }
    long double total = 0;
    for_each_histogram(
        static_cast<int>(alpha.size()), n,
        [&](const Histogram &h) {
            total += static_cast<long double>(mod_density(h, alpha)) * multinomial_pmf(h, alpha) * f(h);
        },
        limits);
    return static_cast<double>(total);
}

namespace {

using LawMap = std::map<std::vector<int>, long double, std::greater<>>;

ShapeLaw to_law(const LawMap &m) {
    ShapeLaw out;
    out.reserve(m.size());
    for (const auto &[rows, p] : m) {
        out.emplace_back(YoungDiagram(rows), static_cast<double>(p));
    }
    return out;
}

}  // namespace

ShapeLaw sw_distribution(const SortedDist &alpha, size_t n, const EnumerationLimits &limits) {
    int d = static_cast<int>(alpha.size());
    require_words_within(d, n, limits, "sw_distribution");
    LawMap law;
    std::vector<int> rows;
    if (d <= ShapeAccumulator::kMaxAlphabet) {
        // One accumulator per depth so words sharing a prefix share its insertions.
        std::vector<ShapeAccumulator> levels(n + 1, ShapeAccumulator(d));
        auto rec = [&](auto &self, size_t depth, long double weight) -> void {
            if (depth == n) {
                levels[depth].shape_into(rows);
                law[rows] += weight;
                return;
            }
            for (int x = 1; x <= d; x++) {
                double p = alpha[static_cast<size_t>(x - 1)];
                if (p == 0) {
                    continue;
                }
                levels[depth + 1] = levels[depth];
                levels[depth + 1].insert(x);
                self(self, depth + 1, weight * p);
            }
        };
        rec(rec, 0, 1.0L);
    } else {
        for_each_word(
            d, n,
            [&](const Word &w) {
                long double weight = 1;
                for (int x : w.letters()) {
                    weight *= alpha[static_cast<size_t>(x - 1)];
                }
                if (weight > 0) {
                    law[sh_rsk(w).padded(alpha.size()).rows()] += weight;
                }
            },
            limits);
    }
    return to_law(law);
}

ShapeLaw plancherel_distribution(size_t n, const EnumerationLimits &limits) {
    uint64_t count = 1;
    for (uint64_t i = 2; i <= n; i++) {
        count *= i;
        if (count > limits.max_words) {
            throw std::length_error("plancherel_distribution: " + std::to_string(n) +
                                    "! permutations exceeds the enumeration cap");
        }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    LawMap law;
    long double weight = 1.0L / static_cast<long double>(count);
    int d = std::max<int>(1, static_cast<int>(n));
    do {
        law[sh_rsk(Word(perm, d)).rows()] += weight;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return to_law(law);
}

double expectation(const ShapeLaw &law, const std::function<double(const YoungDiagram &)> &f) {
    long double total = 0;
    for (const auto &[shape, p] : law) {
        total += static_cast<long double>(p) * f(shape);
    }
    return static_cast<double>(total);
}

double exact_sw_expectation(const std::function<double(const YoungDiagram &)> &f, const SortedDist &alpha,
                            size_t n, const EnumerationLimits &limits) {
    return expectation(sw_distribution(alpha, n, limits), f);
}

}  // namespace rskbounds
