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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rskbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonnegative(std::span<const double> x, const char *what) {
    for (double v : x) {
        if (!(v >= 0)) {
            throw std::invalid_argument(std::string(what) + ": entries must be nonnegative");
        }
    }
}

// Applies term(a_i, b_i) for i < k, with missing coordinates read as 0.
template <typename Term>
double sum_terms(std::span<const double> a, std::span<const double> b, size_t k, const char *what, Term term) {
    require_nonnegative(a, what);
    require_nonnegative(b, what);
    size_t len = std::max(a.size(), b.size());
    if (k > len) {
        throw std::out_of_range(std::string(what) + ": k exceeds vector length");
    }
    double total = 0;
    for (size_t i = 0; i < k; i++) {
        double x = i < a.size() ? a[i] : 0.0;
        double y = i < b.size() ? b[i] : 0.0;
        total += term(x, y);
    }
    return total;
}

size_t full_length(std::span<const double> a, std::span<const double> b) {
    return std::max(a.size(), b.size());
}

}  // namespace

double hellinger_sq(std::span<const double> a, std::span<const double> b, size_t k) {
    return sum_terms(a, b, k, "hellinger_sq", [](double x, double y) {
        double t = std::sqrt(x) - std::sqrt(y);
        return t * t;
    });
}

double chi_sq(std::span<const double> a, std::span<const double> b, size_t k) {
    return sum_terms(a, b, k, "chi_sq", [](double x, double y) {
        if (y == 0) {
            return x == 0 ? 0.0 : kInf;
        }
        double t = x - y;
        return t * t / y;
    });
}

double kl(std::span<const double> a, std::span<const double> b) {
    return sum_terms(a, b, full_length(a, b), "kl", [](double x, double y) {
        if (x == 0) {
            return 0.0;
        }
        if (y == 0) {
            return kInf;
        }
        return x * std::log(x / y);
    });
}

double l1(std::span<const double> a, std::span<const double> b) {
    return l1_truncated(a, b, full_length(a, b));
}

double l1_truncated(std::span<const double> a, std::span<const double> b, size_t k) {
    return sum_terms(a, b, k, "l1", [](double x, double y) { return std::abs(x - y); });
}

double l2_sq(std::span<const double> a, std::span<const double> b, size_t k) {
    return sum_terms(a, b, k, "l2_sq", [](double x, double y) { return (x - y) * (x - y); });
}

double total_variation(std::span<const double> a, std::span<const double> b) {
    return 0.5 * l1(a, b);
}

double shannon_entropy(std::span<const double> a) {
    require_nonnegative(a, "shannon_entropy");
    double h = 0;
    for (double x : a) {
        if (x > 0) {
            h -= x * std::log(x);
        }
    }
    return h;
}

}  // namespace rskbounds
