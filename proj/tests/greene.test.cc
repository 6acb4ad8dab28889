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

#include "gtest/gtest.h"
#include "rskbounds/rng.h"
#include "rskbounds/rsk.h"
#include "rskbounds/sampling.h"

using namespace rskbounds;

namespace {

Word random_word(Rng &rng, size_t n, int d) {
    std::vector<int> letters(n);
    for (auto &x : letters) {
        x = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(d)));
    }
    return Word(std::move(letters), d);
}

}  // namespace

TEST(lis, known_values) {
    EXPECT_EQ(lis(Word{3, 1, 4, 2}), 2u);
    EXPECT_EQ(lis(Word{2, 3, 2, 1, 2, 2}), 4u);
    EXPECT_EQ(lis(Word{}), 0u);
    EXPECT_EQ(lis(Word{5, 4, 3, 2, 1}), 1u);
}

TEST(lis, patience_matches_quadratic_and_first_row) {
    Rng rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        Word w = random_word(rng, rng.below(60), 1 + static_cast<int>(rng.below(9)));
        size_t a = lis(w);
        ASSERT_EQ(a, lis_quadratic(w)) << w.str();
        ASSERT_EQ(static_cast<int>(a), sh_rsk(w)[0]) << w.str();
    }
}

TEST(greene, known_values) {
    Word w{2, 3, 2, 1, 2, 2};
    EXPECT_EQ(greene_invariant(w, 1), 4u);
    EXPECT_EQ(greene_invariant(w, 2), 5u);
    EXPECT_EQ(greene_invariant(w, 3), 6u);
    EXPECT_EQ(greene_invariant(w, 9), 6u);
    EXPECT_EQ(greene_invariant(Word{3, 1, 4, 2}, 2), 4u);
}

TEST(greene, refuses_long_words) {
    EXPECT_THROW(greene_invariant(Word(std::vector<int>(15, 1)), 1), std::length_error);
    EXPECT_NO_THROW(greene_invariant(Word(std::vector<int>(15, 1)), 1, 15));
}

TEST(greene, exhaustive_small_words) {
    for (size_t n = 1; n <= 6; ++n) {
        for_each_word(3, n, [](const Word &w) {
            for (size_t k = 1; k <= 3; ++k) {
                ASSERT_TRUE(check_greene(w, k)) << w.str() << " k=" << k;
            }
        });
    }
}

TEST(greene, deleting_a_letter_drops_each_prefix_by_at_most_one) {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        Word w = random_word(rng, 1 + rng.below(10), 4);
        size_t i = rng.below(w.size());
        std::vector<int> shorter = w.letters();
        shorter.erase(shorter.begin() + static_cast<ptrdiff_t>(i));
        Word v(shorter, w.alphabet_size());
        for (size_t k = 1; k <= 4; ++k) {
            size_t a = greene_invariant(w, k);
            size_t b = greene_invariant(v, k);
            ASSERT_TRUE(b <= a && a <= b + 1) << w.str() << " drop " << i << " k=" << k;
        }
    }
}

TEST(greene, row_k_from_invariant_differences) {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, 1 + rng.below(12), 5);
        YoungDiagram shape = sh_rsk(w);
        size_t previous = 0;
        for (size_t k = 1; k <= 5; ++k) {
            size_t g = greene_invariant(w, k);
            ASSERT_EQ(static_cast<int>(g - previous), shape[k - 1]) << w.str();
            previous = g;
        }
    }
}

TEST(greene, majorization_checks_on_random_words) {
    Rng rng(29);
    for (int trial = 0; trial < 2000; ++trial) {
        Word w = random_word(rng, rng.below(50), 1 + static_cast<int>(rng.below(8)));
        for (size_t k = 1; k <= 3; ++k) {
            ASSERT_TRUE(check_lower_row_majorization(w, k)) << w.str();
        }
        for (int k = 1; k <= w.alphabet_size(); ++k) {
            ASSERT_TRUE(check_restriction_weak_majorization(w, k)) << w.str();
        }
    }
}
