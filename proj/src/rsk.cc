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

#include "rskbounds/rsk.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rskbounds {

Word::Word(std::vector<int> letters, int alphabet_size) : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 1) {
        throw std::invalid_argument("Word: alphabet size must be positive");
    }
    for (int x : letters_) {
        if (x < 1 || x > alphabet_size_) {
            throw std::invalid_argument("Word: letter " + std::to_string(x) + " outside [1.." +
                                        std::to_string(alphabet_size_) + "]");
        }
    }
}

Word::Word(std::vector<int> letters)
    : Word(letters, letters.empty() ? 1 : std::max(1, *std::max_element(letters.begin(), letters.end()))) {
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {
}

bool Word::has_distinct_letters() const {
    std::vector<int> sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string Word::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < letters_.size(); i++) {
        if (i) {
            out << ',';
        }
        out << letters_[i];
    }
    out << ')';
    return out.str();
}

YoungDiagram TableauPair::shape() const {
    std::vector<int> rows;
    rows.reserve(p.size());
    for (const auto &row : p) {
        rows.push_back(static_cast<int>(row.size()));
    }
    return YoungDiagram(std::move(rows));
}

bool TableauPair::valid() const {
    if (p.size() != q.size()) {
        return false;
    }
    size_t n = 0;
    for (size_t r = 0; r < p.size(); r++) {
        if (p[r].size() != q[r].size() || p[r].empty()) {
            return false;
        }
        if (r > 0 && p[r].size() > p[r - 1].size()) {
            return false;
        }
        n += p[r].size();
        for (size_t c = 0; c < p[r].size(); c++) {
            if (c > 0 && (p[r][c] < p[r][c - 1] || q[r][c] <= q[r][c - 1])) {
                return false;
            }
            if (r > 0 && (p[r][c] <= p[r - 1][c] || q[r][c] <= q[r - 1][c])) {
                return false;
            }
        }
    }
    std::vector<bool> seen(n + 1, false);
    for (const auto &row : q) {
        for (int v : row) {
            if (v < 1 || static_cast<size_t>(v) > n || seen[static_cast<size_t>(v)]) {
                return false;
            }
            seen[static_cast<size_t>(v)] = true;
        }
    }
    return true;
}

std::optional<int> insert_into(std::vector<int> &row, int letter) {
    auto it = std::upper_bound(row.begin(), row.end(), letter);
    if (it == row.end()) {
        row.push_back(letter);
        return std::nullopt;
    }
    int bumped = *it;
    *it = letter;
    return bumped;
}

RowInsertion insert(std::vector<int> row, int letter) {
    RowInsertion result;
    result.bumped = insert_into(row, letter);
    result.row = std::move(row);
    return result;
}

TableauPair rsk(const Word &w) {
    TableauPair out;
    for (size_t t = 0; t < w.size(); t++) {
        int x = w[t];
        size_t r = 0;
        while (true) {
            if (r == out.p.size()) {
                out.p.emplace_back();
                out.q.emplace_back();
            }
            auto bumped = insert_into(out.p[r], x);
            if (!bumped) {
                out.q[r].push_back(static_cast<int>(t + 1));
                break;
            }
            x = *bumped;
            r++;
        }
    }
    return out;
}

namespace {

YoungDiagram sh_rsk_rows(const Word &w) {
    std::vector<std::vector<int>> rows;
    for (int letter : w.letters()) {
        int x = letter;
        for (size_t r = 0;; r++) {
            if (r == rows.size()) {
                rows.emplace_back();
            }
            auto bumped = insert_into(rows[r], x);
            if (!bumped) {
                break;
            }
            x = *bumped;
        }
    }
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto &row : rows) {
        lengths.push_back(static_cast<int>(row.size()));
    }
    return YoungDiagram(std::move(lengths));
}

}  // namespace

YoungDiagram sh_rsk(const Word &w) {
    if (w.alphabet_size() <= ShapeAccumulator::kMaxAlphabet) {
        ShapeAccumulator acc(w.alphabet_size());
        for (int x : w.letters()) {
            acc.insert(x);
        }
        return acc.shape();
    }
    return sh_rsk_rows(w);
}

std::vector<Word> bump_streams(const Word &w, size_t max_k) {
    std::vector<std::vector<int>> streams(max_k);
    std::vector<std::vector<int>> rows;
    for (int letter : w.letters()) {
        int x = letter;
        for (size_t r = 0;; r++) {
            if (r == rows.size()) {
                rows.emplace_back();
            }
            auto bumped = insert_into(rows[r], x);
            if (!bumped) {
                break;
            }
            x = *bumped;
            if (r < max_k) {
                streams[r].push_back(x);
            }
        }
    }
    std::vector<Word> out;
    out.reserve(max_k);
    for (auto &s : streams) {
        out.emplace_back(std::move(s), w.alphabet_size());
    }
    return out;
}

Word bump_stream(const Word &w, size_t k) {
    if (k == 0) {
        return w;
    }
    return std::move(bump_streams(w, k)[k - 1]);
}

Word subsequence_in_original_order(const Word &w, size_t k) {
    if (k == 0) {
        return w;
    }
    Word s = standardize(w);
    Word bumped = bump_stream(s, k);
    std::vector<size_t> position_of(s.size() + 1);
    for (size_t i = 0; i < s.size(); i++) {
        position_of[static_cast<size_t>(s[i])] = i;
    }
    std::vector<size_t> positions;
    positions.reserve(bumped.size());
    for (int x : bumped.letters()) {
        positions.push_back(position_of[static_cast<size_t>(x)]);
    }
    std::sort(positions.begin(), positions.end());
    std::vector<int> out;
    out.reserve(positions.size());
    for (size_t p : positions) {
        out.push_back(w[p]);
    }
    return Word(std::move(out), w.alphabet_size());
}

Word restrict_geq(const Word &w, int k) {
    std::vector<int> out;
    std::copy_if(w.letters().begin(), w.letters().end(), std::back_inserter(out), [k](int x) { return x >= k; });
    return Word(std::move(out), w.alphabet_size());
}

Word restrict_leq(const Word &w, int k) {
    std::vector<int> out;
    std::copy_if(w.letters().begin(), w.letters().end(), std::back_inserter(out), [k](int x) { return x <= k; });
    return Word(std::move(out), w.alphabet_size());
}

Word standardize(const Word &w) {
    std::vector<size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return w[a] < w[b]; });
    std::vector<int> out(w.size());
    for (size_t rank = 0; rank < order.size(); rank++) {
        out[order[rank]] = static_cast<int>(rank + 1);
    }
    return Word(std::move(out), std::max<int>(1, static_cast<int>(w.size())));
}

ShapeAccumulator::ShapeAccumulator(int alphabet_size) : d_(alphabet_size) {
    if (d_ < 1 || d_ > kMaxAlphabet) {
        throw std::invalid_argument("ShapeAccumulator: alphabet size must be in [1..64]");
    }
    counts_.assign(static_cast<size_t>(d_) * static_cast<size_t>(d_), 0);
    masks_.assign(static_cast<size_t>(d_), 0);
    lengths_.assign(static_cast<size_t>(d_), 0);
}

void ShapeAccumulator::clear() {
    std::fill(counts_.begin(), counts_.end(), 0);
    std::fill(masks_.begin(), masks_.end(), 0);
    std::fill(lengths_.begin(), lengths_.end(), 0);
    n_ = 0;
}

void ShapeAccumulator::insert(int letter) {
    if (letter < 1 || letter > d_) {
        throw std::invalid_argument("ShapeAccumulator: letter outside alphabet");
    }
    unsigned x = static_cast<unsigned>(letter - 1);
    n_++;
    // Column strictness keeps at most d nonempty rows, so r < d_ always.
    for (size_t r = 0;; r++) {
        uint64_t &mask = masks_[r];
        uint32_t *counts = &counts_[r * static_cast<size_t>(d_)];
        uint64_t above = x >= 63 ? 0 : (mask & (~uint64_t{0} << (x + 1)));
        counts[x]++;
        mask |= uint64_t{1} << x;
        if (above == 0) {
            lengths_[r]++;
            return;
        }
        unsigned y = static_cast<unsigned>(__builtin_ctzll(above));
        if (--counts[y] == 0) {
            mask &= ~(uint64_t{1} << y);
        }
        x = y;
    }
}

YoungDiagram ShapeAccumulator::shape() const {
    std::vector<int> rows;
    for (int len : lengths_) {
        if (len == 0) {
            break;
        }
        rows.push_back(len);
    }
    return YoungDiagram(std::move(rows));
}

void ShapeAccumulator::shape_into(std::vector<int> &out) const {
    out.assign(lengths_.begin(), lengths_.end());
}

}  // namespace rskbounds
