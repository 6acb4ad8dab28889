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

#ifndef RSKBOUNDS_RSK_H
#define RSKBOUNDS_RSK_H

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "rskbounds/partitions.h"

/// Robinson-Schensted-Knuth insertion.
///
/// CONVENTION: rows are weakly increasing. Inserting letter x into a row
/// bumps the leftmost entry STRICTLY greater than x; if there is none, x is
/// appended. Equal letters therefore stack along a row, so the first row of
/// the shape is the longest weakly increasing subsequence. Every routine in
/// this library (bump streams, restrictions, Viennot geometry, the samplers)
/// relies on this single convention.
namespace rskbounds {

/// A finite word over the ordered alphabet [1..alphabet_size].
class Word {
   public:
    Word() = default;
    /// Throws std::invalid_argument if a letter lies outside [1..alphabet_size].
    Word(std::vector<int> letters, int alphabet_size);
    /// Alphabet size inferred as the largest letter (at least 1).
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters);

    const std::vector<int> &letters() const {
        return letters_;
    }
    int alphabet_size() const {
        return alphabet_size_;
    }
    size_t size() const {
        return letters_.size();
    }
    bool empty() const {
        return letters_.empty();
    }
    int operator[](size_t i) const {
        return letters_[i];
    }
    bool has_distinct_letters() const;
    bool operator==(const Word &other) const {
        return letters_ == other.letters_;
    }
    std::string str() const;

   private:
    std::vector<int> letters_;
    int alphabet_size_ = 1;
};

/// The insertion tableau P (semistandard) and recording tableau Q (standard).
struct TableauPair {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;

    YoungDiagram shape() const;
    /// Checks every TableauPair invariant: equal shapes, P semistandard,
    /// Q standard on 1..n.
    bool valid() const;
};

struct RowInsertion {
    std::vector<int> row;
    std::optional<int> bumped;
};

/// One row-insertion step on a weakly increasing row.
RowInsertion insert(std::vector<int> row, int letter);
/// In-place variant; returns the bumped letter if any.
std::optional<int> insert_into(std::vector<int> &row, int letter);

TableauPair rsk(const Word &w);
/// Shape of rsk(w) without building Q.
YoungDiagram sh_rsk(const Word &w);
/// Letters bumped from row k into row k+1, in bump order. k = 0 returns w.
Word bump_stream(const Word &w, size_t k);
/// bump_stream for every k in 1..max_k, computed in one pass.
std::vector<Word> bump_streams(const Word &w, size_t max_k);
/// The letters of bump_stream(w, k) in their original order in w.
/// Words with repeated letters are standardized first and mapped back.
Word subsequence_in_original_order(const Word &w, size_t k);

/// w with every letter smaller than k deleted.
Word restrict_geq(const Word &w, int k);
/// w with every letter larger than k deleted.
Word restrict_leq(const Word &w, int k);

/// Relabels w onto [1..n] with distinct letters; equal letters are numbered
/// left to right. Preserves the RSK shape.
Word standardize(const Word &w);

/// Incremental shape-only RSK for alphabets of at most 64 letters.
///
/// Each weakly increasing row is stored as per-letter counts plus a bitmask
/// of the letters present, so a row step is O(1).
class ShapeAccumulator {
   public:
    static constexpr int kMaxAlphabet = 64;

    explicit ShapeAccumulator(int alphabet_size);

    void insert(int letter);
    void clear();
    size_t size() const {
        return n_;
    }
    int row_length(size_t r) const {
        return lengths_[r];
    }
    YoungDiagram shape() const;
    /// Row lengths padded with zeros to the alphabet size.
    void shape_into(std::vector<int> &out) const;

   private:
    int d_;
    size_t n_ = 0;
    std::vector<uint32_t> counts_;
    std::vector<uint64_t> masks_;
    std::vector<int> lengths_;
};

}  // namespace rskbounds

#endif
