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

#ifndef RSKBOUNDS_METRICS_H
#define RSKBOUNDS_METRICS_H

#include <cstddef>
#include <span>

// Distances between probability vectors. Vectors of different lengths are
// compared as if the shorter one were padded with zeros. Truncated variants
// sum over the first k coordinates only. Negative entries throw
// std::invalid_argument. Where a divergence is undefined because b_i = 0 < a_i
// the result is +infinity.
namespace rskbounds {

/// sum_{i<=k} (sqrt(a_i) - sqrt(b_i))^2
double hellinger_sq(std::span<const double> a, std::span<const double> b, size_t k);
/// sum_{i<=k} b_i (a_i / b_i - 1)^2, with 0/0 terms contributing 0.
double chi_sq(std::span<const double> a, std::span<const double> b, size_t k);
/// sum a_i ln(a_i / b_i), natural log.
double kl(std::span<const double> a, std::span<const double> b);
/// sum |a_i - b_i|
double l1(std::span<const double> a, std::span<const double> b);
/// sum_{i<=k} |a_i - b_i|
double l1_truncated(std::span<const double> a, std::span<const double> b, size_t k);
/// sum_{i<=k} (a_i - b_i)^2
double l2_sq(std::span<const double> a, std::span<const double> b, size_t k);
/// Total variation, half the l1 distance.
double total_variation(std::span<const double> a, std::span<const double> b);
/// -sum a_i ln a_i in nats.
double shannon_entropy(std::span<const double> a);

}  // namespace rskbounds

#endif
