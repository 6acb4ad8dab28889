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

#include "gtest/gtest.h"
#include "rskbounds/rng.h"
#include "rskbounds/sampling.h"

using namespace rskbounds;

TEST(word, validation) {
    EXPECT_THROW(Word({0, 1}, 2), std::invalid_argument);
    EXPECT_THROW(Word({3}, 2), std::invalid_argument);
    EXPECT_EQ(Word({2, 5}).alphabet_size(), 5);
    EXPECT_TRUE(Word({3, 1, 2}).has_distinct_letters());
    EXPECT_FALSE(Word({1, 1}).has_distinct_letters());
}

TEST(insert, bumps_leftmost_strictly_greater) {
    RowInsertion r = insert({1, 2, 2, 3}, 2);
    EXPECT_EQ(r.row, (std::vector<int>{1, 2, 2, 2}));
    EXPECT_EQ(r.bumped, 3);
    r = insert({1, 2}, 2);
    EXPECT_EQ(r.row, (std::vector<int>{1, 2, 2}));
    EXPECT_FALSE(r.bumped);
}

TEST(rsk, known_shapes) {
    EXPECT_EQ(sh_rsk(Word{2, 3, 2, 1, 2, 2}), YoungDiagram({4, 1, 1}));
    EXPECT_EQ(sh_rsk(Word{2, 3, 3, 1, 2, 2}), YoungDiagram({3, 3}));
    EXPECT_EQ(sh_rsk(Word{1, 3, 2}), YoungDiagram({2, 1}));
    EXPECT_EQ(sh_rsk(Word{3, 1, 4, 2}), YoungDiagram({2, 2}));
    EXPECT_EQ(sh_rsk(Word{}).size(), 0);
}

TEST(rsk, tableaux_of_232122) {
    TableauPair t = rsk(Word{2, 3, 2, 1, 2, 2});
    EXPECT_EQ(t.p, (std::vector<std::vector<int>>{{1, 2, 2, 2}, {2}, {3}}));
    EXPECT_EQ(t.q, (std::vector<std::vector<int>>{{1, 2, 5, 6}, {3}, {4}}));
    EXPECT_TRUE(t.valid());
}

TEST(rsk, exhaustive_validity) {
    for (int d = 1; d <= 3; ++d) {
        for (size_t n = 0; n <= 6; ++n) {
            for_each_word(d, n, [](const Word &w) {
                TableauPair t = rsk(w);
                ASSERT_TRUE(t.valid()) << w.str();
                ASSERT_EQ(t.shape(), sh_rsk(w)) << w.str();
            });
        }
    }
}

TEST(rsk, bump_streams) {
    Word w{2, 3, 2, 1, 2, 2};
    EXPECT_EQ(bump_stream(w, 0), w);
    EXPECT_EQ(bump_stream(w, 1), (Word{3, 2}));
    EXPECT_EQ(bump_stream(Word{3, 1, 4, 2}, 1), (Word{3, 4}));
    auto all = bump_streams(w, 3);
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0], bump_stream(w, 1));
    EXPECT_EQ(all[1], bump_stream(w, 2));
    EXPECT_TRUE(all[2].empty());
}

TEST(rsk, bump_stream_shape_is_lower_rows) {
    // Inserting the row-k bump stream into an empty tableau rebuilds rows k+1...
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng.below(40);
        int d = 1 + static_cast<int>(rng.below(6));
        std::vector<int> letters(n);
        for (auto &x : letters) {
            x = 1 + static_cast<int>(rng.below(d));
        }
        Word w(letters, d);
        YoungDiagram shape = sh_rsk(w);
        for (size_t k = 1; k <= 3; ++k) {
            EXPECT_EQ(sh_rsk(bump_stream(w, k)), shape.drop_rows(k)) << w.str() << " k=" << k;
        }
    }
}

TEST(rsk, standardize_preserves_shape) {
    EXPECT_EQ(standardize(Word{2, 1, 2}), (Word{2, 1, 3}));
    for (size_t n = 1; n <= 6; ++n) {
        for_each_word(3, n, [](const Word &w) {
            Word s = standardize(w);
            ASSERT_TRUE(s.has_distinct_letters());
            ASSERT_EQ(sh_rsk(s), sh_rsk(w)) << w.str();
        });
    }
}

TEST(rsk, restrictions) {
    Word w{2, 3, 2, 1, 2, 2};
    EXPECT_EQ(restrict_geq(w, 2), (Word{2, 3, 2, 2, 2}));
    EXPECT_EQ(restrict_leq(w, 2), (Word{2, 2, 1, 2, 2}));
}

TEST(rsk, subsequence_in_original_order) {
    // 3142: row 1 bumps 3 then 4; they appear in that order.
    EXPECT_EQ(subsequence_in_original_order(Word{3, 1, 4, 2}, 1), (Word{3, 4}));
    Word s = subsequence_in_original_order(Word{2, 3, 2, 1, 2, 2}, 1);
    EXPECT_EQ(s.size(), 2u);
}

TEST(shape_accumulator, matches_full_rsk) {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        int d = 1 + static_cast<int>(rng.below(ShapeAccumulator::kMaxAlphabet));
        size_t n = rng.below(80);
        std::vector<int> letters(n);
        ShapeAccumulator acc(d);
        for (auto &x : letters) {
            x = 1 + static_cast<int>(rng.below(d));
            acc.insert(x);
        }
        ASSERT_EQ(acc.size(), n);
        ASSERT_EQ(acc.shape(), sh_rsk(Word(letters, d)));
        std::vector<int> padded;
        acc.shape_into(padded);
        ASSERT_EQ(padded.size(), static_cast<size_t>(d));
        acc.clear();
        ASSERT_EQ(acc.size(), 0u);
    }
    EXPECT_THROW(ShapeAccumulator(65), std::invalid_argument);
}
