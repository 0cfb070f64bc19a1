/*
 * Copyright 2026 The AFE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AFE_COMMON_RNG_HPP_
#define AFE_COMMON_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace afe {

// Stream derivation: every stochastic step draws from a generator seeded by
// hash(master seed, component, index...). Results therefore never depend on
// the order in which parallel tasks are scheduled.
std::uint64_t DeriveSeed(std::uint64_t master, std::string_view component,
                         std::uint64_t index = 0, std::uint64_t sub_index = 0);

// Random source with portable distributions. The engine comes from <random>;
// the distributions are implemented here because the standard ones are
// implementation-defined and would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t master, std::string_view component, std::uint64_t index = 0,
      std::uint64_t sub_index = 0)
      : engine_(DeriveSeed(master, component, index, sub_index)) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t UniformInt(std::uint64_t n);

  bool Bernoulli(double p) { return p > 0.0 && Uniform() < p; }

  // Standard normal via Box-Muller.
  double Normal();

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(UniformInt(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace afe

#endif  // AFE_COMMON_RNG_HPP_
