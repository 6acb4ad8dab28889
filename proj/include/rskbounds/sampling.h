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

#ifndef RSKBOUNDS_SAMPLING_H
#define RSKBOUNDS_SAMPLING_H

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rskbounds/partitions.h"
#include "rskbounds/rng.h"
#include "rskbounds/rsk.h"

namespace rskbounds {

/// Letter counts h_1..h_d of a word.
using Histogram = std::vector<int>;

/// Exact enumeration refuses to start beyond these sizes.
struct EnumerationLimits {
    uint64_t max_words = 10'000'000;
    uint64_t max_histograms = 1'000'000;
};

/// n letters drawn i.i.d. from alpha.
Word sample_word(const SortedDist &alpha, size_t n, Rng &rng);
Word sample_word(const SortedDist &alpha, size_t n, uint64_t seed);

/// sh_rsk of sample_word(alpha, n); consumes the generator identically.
YoungDiagram sample_sw(const SortedDist &alpha, size_t n, Rng &rng);
YoungDiagram sample_sw(const SortedDist &alpha, size_t n, uint64_t seed);

/// Shape of RSK applied to a uniformly random permutation of [n].
YoungDiagram sample_plancherel(size_t n, Rng &rng);
YoungDiagram sample_plancherel(size_t n, uint64_t seed);

/// Reusable Schur-Weyl sampler that never materializes the word.
class SwSampler {
   public:
    explicit SwSampler(const SortedDist &alpha);

    /// Row lengths padded with zeros to alpha.size().
    void sample(size_t n, Rng &rng, std::vector<int> &rows);
    size_t dimension() const {
        return alias_.size();
    }

   private:
    AliasTable alias_;
    std::optional<ShapeAccumulator> acc_;
};

/// d^n and C(n+d-1, d-1), saturating at UINT64_MAX.
uint64_t word_count(int d, size_t n);
uint64_t histogram_count(int d, size_t n);

/// Visits every word of [d]^n in lexicographic order. Throws
/// std::length_error if d^n exceeds limits.max_words.
void for_each_word(int d, size_t n, const std::function<void(const Word &)> &visit,
                   const EnumerationLimits &limits = {});
std::vector<Word> enumerate_words(int d, size_t n, const EnumerationLimits &limits = {});

/// Visits every histogram of length d and total n once. Throws
/// std::length_error past limits.max_histograms.
void for_each_histogram(int d, size_t n, const std::function<void(const Histogram &)> &visit,
                        const EnumerationLimits &limits = {});
std::vector<Histogram> enumerate_histograms(int d, size_t n, const EnumerationLimits &limits = {});

/// n! / prod(h_i!) * prod(alpha_i^h_i).
double multinomial_pmf(const Histogram &h, const SortedDist &alpha);

/// Relative density of the modified alpha-multinomial distribution, n = |h|:
///
///     f(h) = 1 + sum_{i<j} alpha_j / (alpha_i - alpha_j)
///                * (h_i / (alpha_i n) - h_j / (alpha_j n))
///
/// Can be negative. Requires alpha strictly decreasing and positive.
double mod_density(const Histogram &h, const SortedDist &alpha);

/// Signed expectation sum_h f(h) Mult(h) F(h) over all histograms of n.
double modmult_expectation(const std::function<double(const Histogram &)> &f, const SortedDist &alpha, size_t n,
                           const EnumerationLimits &limits = {});

/// Exact law of a random shape, sorted by shape in decreasing lexicographic order.
using ShapeLaw = std::vector<std::pair<YoungDiagram, double>>;

/// Exact Schur-Weyl law SW(n, alpha), summing prod(alpha_{w_i}) over all d^n words.
/// Shapes are padded to height alpha.size().
ShapeLaw sw_distribution(const SortedDist &alpha, size_t n, const EnumerationLimits &limits = {});
/// Exact Plancherel law from all n! permutations (counted against max_words).
ShapeLaw plancherel_distribution(size_t n, const EnumerationLimits &limits = {});

/// E F(lambda) under a shape law.
double expectation(const ShapeLaw &law, const std::function<double(const YoungDiagram &)> &f);
/// E F(lambda), lambda ~ SW(n, alpha), by brute force over all words.
double exact_sw_expectation(const std::function<double(const YoungDiagram &)> &f, const SortedDist &alpha,
                            size_t n, const EnumerationLimits &limits = {});

}  // namespace rskbounds

#endif
