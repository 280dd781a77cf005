/*
 * Copyright 2026 The pnspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PNSPACE_RNG_HPP
#define PNSPACE_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace pns {

// Seeded generator with portable conversions; std distributions are
// implementation-defined and would make reports differ across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  /// Uniform multiple of 2^-bits in [lo, hi); sums of such values are exact.
  double dyadic(double lo, double hi, int bits = 6) {
    const double scale = static_cast<double>(std::uint64_t{1} << bits);
    const auto cells = static_cast<std::size_t>((hi - lo) * scale);
    return lo + static_cast<double>(index(cells)) / scale;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pns

#endif  // PNSPACE_RNG_HPP
