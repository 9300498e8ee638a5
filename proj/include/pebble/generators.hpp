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

#ifndef PEBBLE_GENERATORS_HPP
#define PEBBLE_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/geometry.hpp"
#include "pebble/params.hpp"
#include "pebble/recognition.hpp"

namespace pebble {

namespace detail {

inline std::vector<std::string> numbered(char prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

// a*b - k1*a - k2*b + l: surplus of a complete a x b incidence set over the
// tight count.
inline std::int64_t surplus(const sparsity_params& p, std::int64_t a, std::int64_t b) {
  return a * b - std::int64_t{p.k1} * a - std::int64_t{p.k2} * b + p.l;
}

}  // namespace detail

/// Uniform random geometry on points p1..pn and lines l1..lm: each of the n*m
/// incidences is present independently with probability `density`.
inline incidence_geometry random_geometry(std::size_t n, std::size_t m, double density,
                                          std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw error(errc::parameter_condition_violated, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<incidence> incs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // 53 random bits mapped to [0, 1); identical on every platform.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) incs.push_back({i, j});
    }
  }
  return incidence_geometry(detail::numbered('p', n), detail::numbered('l', m), std::move(incs));
}

struct generator_options {
  /// Re-run recognition after every augmentation step.
  bool check_each_step = false;
};

/// A (1, k1, k2, l)-tight geometry with n points and m lines. Starts from the
/// smallest a0 x b0 complete incidence set whose surplus is nonnegative while
/// every smaller box at or above (k2, k1) has nonpositive surplus, drops the surplus from the end,
/// then adds points wired to the first k1 lines and lines wired to the first
/// k2 points.
inline incidence_geometry construct_tight_geometry(const sparsity_params& raw, std::size_t n,
                                                   std::size_t m, const generator_options& opt = {}) {
  const auto p = validate_and_normalize_params(raw);
  if (p.lambda != 1) throw error(errc::lambda_not_one, "tight construction needs lambda = 1");
  const auto sn = static_cast<std::int64_t>(n), sm = static_cast<std::int64_t>(m);
  if (n < 1 || m < 1 || sn < p.k2 || sm < p.k1 || detail::surplus(p, sn, sm) < 0) {
    throw error(errc::infeasible_size,
                "need n >= max(k2, 1), m >= max(k1, 1) and nm >= k1*n + k2*m - l");
  }
  // With one side carrying no pebbles and l > 0, each vertex of the other
  // kind can carry at most k - l incidences, which rules out tightness once
  // there are two or more of them.
  if ((p.k2 == 0 && p.l > 0 && n > 1) || (p.k1 == 0 && p.l > 0 && m > 1)) {
    throw error(errc::infeasible_size, "no tight geometry of this size exists for (" +
                                           p.to_string() + ")");
  }

  std::int64_t a0 = 0, b0 = 0;
  bool found = false;
  const std::int64_t amin = std::max<std::int64_t>(p.k2, 1), bmin = std::max<std::int64_t>(p.k1, 1);
  for (std::int64_t s = amin + bmin; s <= sn + sm && !found; ++s) {
    for (std::int64_t a = amin; a <= sn && !found; ++a) {
      const std::int64_t b = s - a;
      if (b < bmin || b > sm) continue;
      if (detail::surplus(p, a, b) < 0) continue;
      bool minimal = true;
      for (std::int64_t x = amin; x <= a && minimal; ++x)
        for (std::int64_t y = bmin; y <= b && minimal; ++y)
          if ((x != a || y != b) && detail::surplus(p, x, y) > 0) minimal = false;
      if (minimal) a0 = a, b0 = b, found = true;
    }
  }
  if (!found) {
    throw error(errc::infeasible_size, "no minimal starting box within " + std::to_string(n) +
                                           " x " + std::to_string(m));
  }

  std::vector<incidence> incs;
  for (std::int64_t i = 0; i < a0; ++i)
    for (std::int64_t j = 0; j < b0; ++j)
      incs.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
  incs.resize(incs.size() - static_cast<std::size_t>(detail::surplus(p, a0, b0)));

  auto make = [&](std::size_t np, std::size_t nl) {
    return incidence_geometry(detail::numbered('p', np), detail::numbered('l', nl), incs);
  };
  auto check = [&](const incidence_geometry& g) {
    if (run_recognition(g, p).status != sparsity_status::tight) {
      throw error(errc::post_check_failed, "constructed geometry is not tight");
    }
  };

  auto np = static_cast<std::size_t>(a0), nl = static_cast<std::size_t>(b0);
  if (opt.check_each_step) check(make(np, nl));
  for (; np < n; ++np) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(p.k1); ++j) incs.push_back({np, j});
    if (opt.check_each_step) check(make(np + 1, nl));
  }
  for (; nl < m; ++nl) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.k2); ++i) incs.push_back({i, nl});
    if (opt.check_each_step) check(make(np, nl + 1));
  }
  auto g = make(np, nl);
  check(g);
  return g;
}

}  // namespace pebble

#endif  // PEBBLE_GENERATORS_HPP
