// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AIPLAB_RANDOM_H_
#define AIPLAB_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace aiplab {

using Rng = std::mt19937_64;

// Seeds a named, independent substream of a trial seed. Streams with
// different names are decorrelated through SplitMix64 mixing.
uint64_t SubstreamSeed(uint64_t seed, std::string_view stream);
inline Rng MakeStream(uint64_t seed, std::string_view stream) {
  return Rng(SubstreamSeed(seed, stream));
}

// The helpers below avoid the std:: distributions so that sequences are
// identical across standard library implementations.

// Uniform double in [0, 1) with 53 random bits.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Bernoulli(p); p is clamped to [0, 1].
inline bool Bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return Uniform01(rng) < p;
}

// Uniform integer in [0, n). Requires n > 0.
uint64_t UniformIndex(Rng& rng, uint64_t n);

// Uniform double in [lo, hi).
inline double UniformReal(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * Uniform01(rng);
}

template <typename T>
void Shuffle(std::span<T> items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    const size_t j = UniformIndex(rng, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace aiplab

#endif  // AIPLAB_RANDOM_H_
