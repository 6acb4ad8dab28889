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

#ifndef RSKBOUNDS_RNG_H
#define RSKBOUNDS_RNG_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rskbounds {

/// xoshiro256** seeded through SplitMix64.
///
/// A generator is identified by (seed, stream, substream). Experiments use
/// the stream for the grid point and the substream for the sample index, so
/// every sample is reproducible on its own regardless of how work is split
/// across threads.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed, uint64_t stream = 0, uint64_t substream = 0);

    uint64_t next();
    uint64_t operator()() {
        return next();
    }
    static constexpr uint64_t min() {
        return 0;
    }
    static constexpr uint64_t max() {
        return ~uint64_t{0};
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound), bound > 0 (Lemire's method).
    uint64_t below(uint64_t bound);

   private:
    uint64_t s_[4];
};

/// Walker/Vose alias table: O(d) setup, O(1) per draw.
class AliasTable {
   public:
    /// Weights need not be normalized; at least one must be positive.
    explicit AliasTable(std::span<const double> weights);

    /// A 0-based index drawn with probability proportional to its weight.
    size_t sample(Rng &rng) const;
    size_t size() const {
        return prob_.size();
    }

   private:
    std::vector<double> prob_;
    std::vector<uint32_t> alias_;
};

}  // namespace rskbounds

#endif
