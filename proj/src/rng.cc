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

#include "rskbounds/rng.h"

#include <stdexcept>

namespace rskbounds {

namespace {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(uint64_t seed, uint64_t stream, uint64_t substream) {
    uint64_t state = seed;
    uint64_t h = splitmix64(state);
    state = h ^ stream;
    h = splitmix64(state);
    state = h ^ substream;
    for (auto &word : s_) {
        word = splitmix64(state);
    }
}

uint64_t Rng::next() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<uint64_t>(m);
        }
    }
    return static_cast<uint64_t>(m >> 64);
}

AliasTable::AliasTable(std::span<const double> weights) : prob_(weights.size()), alias_(weights.size()) {
    size_t d = weights.size();
    if (d == 0) {
        throw std::invalid_argument("AliasTable: no weights");
    }
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0)) {
            throw std::invalid_argument("AliasTable: negative weight");
        }
        total += w;
    }
    if (!(total > 0)) {
        throw std::invalid_argument("AliasTable: weights sum to zero");
    }
    std::vector<double> scaled(d);
    std::vector<uint32_t> small;
    std::vector<uint32_t> large;
    for (size_t i = 0; i < d; i++) {
        scaled[i] = weights[i] * static_cast<double>(d) / total;
        (scaled[i] < 1 ? small : large).push_back(static_cast<uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
        uint32_t s = small.back();
        small.pop_back();
        uint32_t l = large.back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1;
        if (scaled[l] < 1) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // Leftovers are 1 up to rounding.
    for (uint32_t i : large) {
        prob_[i] = 1;
        alias_[i] = i;
    }
    uint32_t heaviest = 0;
    for (size_t i = 1; i < d; i++) {
        if (weights[i] > weights[heaviest]) {
            heaviest = static_cast<uint32_t>(i);
        }
    }
    for (uint32_t i : small) {
        prob_[i] = weights[i] > 0 ? 1 : 0;
        alias_[i] = weights[i] > 0 ? i : heaviest;
    }
}

size_t AliasTable::sample(Rng &rng) const {
    double u = rng.uniform() * static_cast<double>(prob_.size());
    size_t column = static_cast<size_t>(u);
    if (column >= prob_.size()) {
        column = prob_.size() - 1;
    }
    return (u - static_cast<double>(column)) < prob_[column] ? column : alias_[column];
}

}  // namespace rskbounds
