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

#ifndef RSKBOUNDS_GREENE_H
#define RSKBOUNDS_GREENE_H

#include <cstddef>

#include "rskbounds/rsk.h"

// Oracles that never call into the RSK insertion code, so they can be used
// to distrust it.
namespace rskbounds {

/// Largest word the exhaustive Greene search accepts by default.
inline constexpr size_t kGreeneDefaultMaxN = 14;

/// Longest weakly increasing subsequence, O(n log n) patience piles.
size_t lis(const Word &w);
/// Same quantity by the O(n^2) dynamic program.
size_t lis_quadratic(const Word &w);

/// Maximum total length of k disjoint weakly increasing subsequences.
///
/// Exhaustive search over every assignment of positions to one of the k
/// subsequences or to "unused". Only feasible extensions are explored, and
/// assignments are identified up to relabeling of the subsequences by
/// memoizing on (position, sorted multiset of subsequence tails). The cost
/// is still exponential in general; words longer than max_n are refused
/// with std::length_error.
size_t greene_invariant(const Word &w, size_t k, size_t max_n = kGreeneDefaultMaxN);

/// greene_invariant(w, k) == lambda_1 + ... + lambda_k of sh_rsk(w).
bool check_greene(const Word &w, size_t k, size_t max_n = kGreeneDefaultMaxN);

/// sh_rsk of the bumped letters in original order dominates sh_rsk of the
/// bump stream out of row k. Repeated letters are standardized first.
bool check_lower_row_majorization(const Word &x, size_t k);

/// sh_rsk(w restricted to letters >= k) weakly dominates rows k, k+1, ...
/// of sh_rsk(w).
bool check_restriction_weak_majorization(const Word &w, int k);

}  // namespace rskbounds

#endif
