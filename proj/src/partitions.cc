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

#include "rskbounds/partitions.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rskbounds {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i] < 0) {
            throw std::invalid_argument("YoungDiagram: negative row length");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument("YoungDiagram: rows must be nonincreasing, got " + str());
        }
    }
}

YoungDiagram::YoungDiagram(std::initializer_list<int> rows) : YoungDiagram(std::vector<int>(rows)) {
}

size_t YoungDiagram::height() const {
    size_t h = rows_.size();
    while (h > 0 && rows_[h - 1] == 0) {
        h--;
    }
    return h;
}

int64_t YoungDiagram::size() const {
    return std::accumulate(rows_.begin(), rows_.end(), int64_t{0});
}

YoungDiagram YoungDiagram::padded(size_t width) const {
    YoungDiagram out = *this;
    if (out.rows_.size() < width) {
        out.rows_.resize(width, 0);
    }
    return out;
}

YoungDiagram YoungDiagram::trimmed() const {
    YoungDiagram out = *this;
    out.rows_.resize(height());
    return out;
}

YoungDiagram YoungDiagram::drop_rows(size_t k) const {
    YoungDiagram out;
    if (k < rows_.size()) {
        out.rows_.assign(rows_.begin() + static_cast<std::ptrdiff_t>(k), rows_.end());
    }
    return out;
}

bool YoungDiagram::operator==(const YoungDiagram &other) const {
    size_t n = std::max(rows_.size(), other.rows_.size());
    for (size_t i = 0; i < n; i++) {
        if ((*this)[i] != other[i]) {
            return false;
        }
    }
    return true;
}

std::string YoungDiagram::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < rows_.size(); i++) {
        if (i) {
            out << ',';
        }
        out << rows_[i];
    }
    out << ')';
    return out.str();
}

SortedDist::SortedDist(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("SortedDist: empty distribution");
    }
    double total = 0;
    for (double p : probs_) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("SortedDist: entries must lie in [0,1]");
        }
        total += p;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw std::invalid_argument("SortedDist: entries must sum to 1, got " + std::to_string(total));
    }
    require_sorted(probs_, "SortedDist");
}

SortedDist SortedDist::from_unsorted(std::vector<double> probs) {
    std::sort(probs.begin(), probs.end(), std::greater<>());
    return SortedDist(std::move(probs));
}

SortedDist SortedDist::uniform(size_t d) {
    if (d == 0) {
        throw std::invalid_argument("SortedDist::uniform: d must be positive");
    }
    return SortedDist(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

SortedDist SortedDist::zipf(size_t d, double s) {
    if (d == 0) {
        throw std::invalid_argument("SortedDist::zipf: d must be positive");
    }
    std::vector<double> p(d);
    double total = 0;
    for (size_t i = 0; i < d; i++) {
        p[i] = std::pow(static_cast<double>(i + 1), -s);
        total += p[i];
    }
    for (double &x : p) {
        x /= total;
    }
    return SortedDist(std::move(p));
}

bool SortedDist::strictly_distinct() const {
    for (size_t i = 0; i < probs_.size(); i++) {
        if (probs_[i] <= 0 || (i > 0 && probs_[i] >= probs_[i - 1])) {
            return false;
        }
    }
    return true;
}

std::string SortedDist::str() const {
    std::ostringstream out;
    out.precision(17);
    out << '(';
    for (size_t i = 0; i < probs_.size(); i++) {
        if (i) {
            out << ',';
        }
        out << probs_[i];
    }
    out << ')';
    return out.str();
}

void require_sorted(std::span<const double> x, const char *what) {
    for (size_t i = 1; i < x.size(); i++) {
        if (x[i] > x[i - 1]) {
            throw std::invalid_argument(std::string(what) + ": input must be sorted nonincreasing");
        }
    }
}

namespace {

template <bool RequireEqualTotals>
bool prefix_dominates(const YoungDiagram &a, const YoungDiagram &b) {
    size_t n = std::max(a.num_rows(), b.num_rows());
    int64_t sa = 0;
    int64_t sb = 0;
    for (size_t i = 0; i < n; i++) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) {
            return false;
        }
    }
    return !RequireEqualTotals || sa == sb;
}

template <bool RequireEqualTotals>
bool prefix_dominates(std::span<const double> a, std::span<const double> b) {
    require_sorted(a, "dominates");
    require_sorted(b, "dominates");
    size_t n = std::max(a.size(), b.size());
    double sa = 0;
    double sb = 0;
    for (size_t i = 0; i < n; i++) {
        sa += i < a.size() ? a[i] : 0.0;
        sb += i < b.size() ? b[i] : 0.0;
        if (sa < sb - kRealTolerance) {
            return false;
        }
    }
    return !RequireEqualTotals || std::abs(sa - sb) <= kRealTolerance;
}

}  // namespace

bool dominates(const YoungDiagram &a, const YoungDiagram &b) {
    return prefix_dominates<true>(a, b);
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    return prefix_dominates<true>(a, b);
}

bool weakly_dominates(const YoungDiagram &a, const YoungDiagram &b) {
    return prefix_dominates<false>(a, b);
}

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
    return prefix_dominates<false>(a, b);
}

double prefix_sum(std::span<const double> x, size_t k) {
    if (k > x.size()) {
        throw std::out_of_range("prefix_sum: k exceeds vector length");
    }
    return std::accumulate(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

double tail_sum(std::span<const double> x, size_t k) {
    if (k > x.size()) {
        throw std::out_of_range("tail_sum: k exceeds vector length");
    }
    return std::accumulate(x.begin() + static_cast<std::ptrdiff_t>(k), x.end(), 0.0);
}

int64_t prefix_sum(const YoungDiagram &lambda, size_t k) {
    int64_t total = 0;
    for (size_t i = 0; i < k && i < lambda.num_rows(); i++) {
        total += lambda[i];
    }
    return total;
}

int64_t tail_sum(const YoungDiagram &lambda, size_t k) {
    return lambda.size() - prefix_sum(lambda, k);
}

std::vector<double> normalize(const YoungDiagram &lambda, int64_t n) {
    if (n <= 0 || lambda.size() != n) {
        throw std::invalid_argument("normalize: diagram size " + std::to_string(lambda.size()) +
                                    " does not match n = " + std::to_string(n));
    }
    std::vector<double> out(lambda.num_rows());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = static_cast<double>(lambda[i]) / static_cast<double>(n);
    }
    return out;
}

std::vector<YoungDiagram> partitions_of(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; part--) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace rskbounds
