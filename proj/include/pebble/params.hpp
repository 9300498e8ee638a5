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

#ifndef PEBBLE_PARAMS_HPP
#define PEBBLE_PARAMS_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "pebble/error.hpp"

namespace pebble {

/// Sparsity counts (lambda, k1, k2, l). Instances returned by
/// `validate_and_normalize_params` satisfy k1 + k2 - lambda >= l and have
/// gcd(lambda, k1, k2, l) = 1.
struct sparsity_params {
  int lambda = 1;
  int k1 = 0;
  int k2 = 0;
  int l = 0;

  /// Pebbles a vertex of the given kind starts with.
  int capacity(bool is_point) const noexcept { return is_point ? k1 : k2; }

  /// k1*|A| + k2*|B| - l.
  std::int64_t bound(std::int64_t points, std::int64_t lines) const noexcept {
    return std::int64_t{k1} * points + std::int64_t{k2} * lines - l;
  }

  std::string to_string() const {
    return std::to_string(lambda) + "," + std::to_string(k1) + "," + std::to_string(k2) + "," +
           std::to_string(l);
  }

  friend bool operator==(const sparsity_params&, const sparsity_params&) = default;
};

inline sparsity_params validate_and_normalize_params(int lambda, int k1, int k2, int l) {
  if (lambda < 1) {
    throw error(errc::non_positive_lambda, "lambda must be at least 1, got " + std::to_string(lambda));
  }
  if (k1 < 0 || k2 < 0 || l < 0) {
    throw error(errc::negative_parameter, "k1, k2 and l must be nonnegative");
  }
  const int g = std::gcd(std::gcd(lambda, k1), std::gcd(k2, l));
  sparsity_params p{lambda / g, k1 / g, k2 / g, l / g};
  if (p.k1 + p.k2 - p.lambda < p.l) {
    throw error(errc::parameter_condition_violated,
                "k1 + k2 - lambda >= l does not hold for (" + p.to_string() + ")");
  }
  return p;
}

inline sparsity_params validate_and_normalize_params(const sparsity_params& raw) {
  return validate_and_normalize_params(raw.lambda, raw.k1, raw.k2, raw.l);
}

}  // namespace pebble

#endif  // PEBBLE_PARAMS_HPP
