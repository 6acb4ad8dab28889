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

#include "rskbounds/greene.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rskbounds {

size_t lis(const Word &w) {
    // piles[i] is the smallest possible last letter of a weakly increasing
    // subsequence of length i + 1.
    std::vector<int> piles;
    for (int x : w.letters()) {
        auto it = std::upper_bound(piles.begin(), piles.end(), x);
        if (it == piles.end()) {
            piles.push_back(x);
        } else {
            *it = x;
        }
    }
    return piles.size();
}

size_t lis_quadratic(const Word &w) {
    std::vector<size_t> best(w.size(), 1);
    size_t out = 0;
    for (size_t i = 0; i < w.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (w[j] <= w[i]) {
                best[i] = std::max(best[i], best[j] + 1);
            }
        }
        out = std::max(out, best[i]);
    }
    return out;
}

namespace {

class GreeneSearch {
   public:
    GreeneSearch(const Word &w, size_t k) : w_(w), memo_(w.size()) {
        tails_.assign(k, 0);
    }

    size_t run() {
        return visit(0, tails_);
    }

   private:
    // tails holds the last letter of each subsequence (0 = still empty),
    // kept sorted so relabelings of the subsequences share one entry.
    size_t visit(size_t pos, const std::vector<int> &tails) {
        if (pos == w_.size()) {
            return 0;
        }
        auto &table = memo_[pos];
        if (auto it = table.find(tails); it != table.end()) {
            return it->second;
        }
        size_t best = visit(pos + 1, tails);
        int x = w_[pos];
        std::vector<int> next;
        for (size_t j = 0; j < tails.size(); j++) {
            if (tails[j] > x) {
                break;
            }
            if (j > 0 && tails[j] == tails[j - 1]) {
                continue;
            }
            next = tails;
            next[j] = x;
            std::sort(next.begin(), next.end());
            best = std::max(best, 1 + visit(pos + 1, next));
        }
        table.emplace(tails, best);
        return best;
    }

    const Word &w_;
    std::vector<int> tails_;
    std::vector<std::map<std::vector<int>, size_t>> memo_;
};

}  // namespace

size_t greene_invariant(const Word &w, size_t k, size_t max_n) {
    if (w.size() > max_n) {
        throw std::length_error("greene_invariant: word of length " + std::to_string(w.size()) +
                                " exceeds the exhaustive-search cap " + std::to_string(max_n));
    }
    if (k == 0 || w.empty()) {
        return 0;
    }
    // More subsequences than letters can never help.
    GreeneSearch search(w, std::min(k, w.size()));
    return search.run();
}

bool check_greene(const Word &w, size_t k, size_t max_n) {
    return static_cast<int64_t>(greene_invariant(w, k, max_n)) == prefix_sum(sh_rsk(w), k);
}

bool check_lower_row_majorization(const Word &x, size_t k) {
    Word s = standardize(x);
    Word bumped = bump_stream(s, k);
    Word original_order = subsequence_in_original_order(s, k);
    return dominates(sh_rsk(original_order), sh_rsk(bumped));
}

bool check_restriction_weak_majorization(const Word &w, int k) {
    if (k < 1) {
        throw std::invalid_argument("check_restriction_weak_majorization: k must be >= 1");
    }
    YoungDiagram lower_rows = sh_rsk(w).drop_rows(static_cast<size_t>(k - 1));
    return weakly_dominates(sh_rsk(restrict_geq(w, k)), lower_rows);
}

}  // namespace rskbounds
