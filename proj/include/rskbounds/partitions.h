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

#ifndef RSKBOUNDS_PARTITIONS_H
#define RSKBOUNDS_PARTITIONS_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rskbounds {

/// Absolute per-prefix tolerance used when comparing real vectors.
inline constexpr double kRealTolerance = 1e-12;

/// A partition stored as its row lengths, largest first.
///
/// Trailing zero rows may be stored (callers pad to a height d when a
/// d-indexed statement needs it) but never affect equality.
class YoungDiagram {
   public:
    YoungDiagram() = default;
    /// Throws std::invalid_argument if rows are negative or increasing.
    explicit YoungDiagram(std::vector<int> rows);
    YoungDiagram(std::initializer_list<int> rows);

    const std::vector<int> &rows() const {
        return rows_;
    }
    /// Number of stored rows, trailing zeros included.
    size_t num_rows() const {
        return rows_.size();
    }
    /// Number of nonzero rows.
    size_t height() const;
    /// Total number of boxes.
    int64_t size() const;
    /// Row i (0-based); rows past the stored ones are zero.
    int operator[](size_t i) const {
        return i < rows_.size() ? rows_[i] : 0;
    }

    YoungDiagram padded(size_t width) const;
    YoungDiagram trimmed() const;
    /// The diagram formed by rows k+1, k+2, ... (drops the first k rows).
    YoungDiagram drop_rows(size_t k) const;

    bool operator==(const YoungDiagram &other) const;
    std::string str() const;

   private:
    std::vector<int> rows_;
};

/// A probability vector sorted in nonincreasing order.
class SortedDist {
   public:
    /// Validates entries in [0,1], nonincreasing, summing to 1 within 1e-12.
    explicit SortedDist(std::vector<double> probs);

    /// Sorts the entries first; still validates the total.
    static SortedDist from_unsorted(std::vector<double> probs);
    static SortedDist uniform(size_t d);
    /// Entries proportional to i^-s.
    static SortedDist zipf(size_t d, double s);

    size_t size() const {
        return probs_.size();
    }
    double operator[](size_t i) const {
        return probs_[i];
    }
    std::span<const double> probs() const {
        return probs_;
    }
    const std::vector<double> &vec() const {
        return probs_;
    }
    /// True iff all entries are strictly decreasing and positive.
    bool strictly_distinct() const;
    std::string str() const;

   private:
    std::vector<double> probs_;
};

/// Throws std::invalid_argument unless x is nonincreasing.
void require_sorted(std::span<const double> x, const char *what);

/// Majorization with equal totals (exact for diagrams).
bool dominates(const YoungDiagram &a, const YoungDiagram &b);
/// Majorization for real vectors; prefixes compared with tolerance 1e-12.
bool dominates(std::span<const double> a, std::span<const double> b);
/// Prefix dominance without the equal-totals requirement.
bool weakly_dominates(const YoungDiagram &a, const YoungDiagram &b);
bool weakly_dominates(std::span<const double> a, std::span<const double> b);

/// x_1 + ... + x_k. Throws std::out_of_range when k > x.size().
double prefix_sum(std::span<const double> x, size_t k);
/// x_{k+1} + ... + x_d. Throws std::out_of_range when k > x.size().
double tail_sum(std::span<const double> x, size_t k);
/// Diagram prefix sums; rows beyond the stored ones count as zero.
int64_t prefix_sum(const YoungDiagram &lambda, size_t k);
int64_t tail_sum(const YoungDiagram &lambda, size_t k);

/// lambda / n. Throws std::invalid_argument unless |lambda| == n > 0.
std::vector<double> normalize(const YoungDiagram &lambda, int64_t n);

/// All partitions of n, in reverse lexicographic order.
std::vector<YoungDiagram> partitions_of(int n);

}  // namespace rskbounds

#endif
