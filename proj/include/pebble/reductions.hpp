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

#ifndef PEBBLE_REDUCTIONS_HPP
#define PEBBLE_REDUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/geometry.hpp"
#include "pebble/hypergraph.hpp"
#include "pebble/params.hpp"

namespace pebble {

/// Points are the vertices, one line per hyperedge, and a point lies on a
/// line iff the vertex belongs to the hyperedge. Line i is named "e<i+1>",
/// prefixed with underscores if that collides with a vertex name.
inline incidence_geometry hypergraph_to_geometry(const hypergraph& h) {
  const std::set<std::string> taken(h.vertices().begin(), h.vertices().end());
  std::vector<std::string> lines;
  lines.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::string name = "e" + std::to_string(i + 1);
    while (taken.count(name)) name = "_" + name;
    lines.push_back(std::move(name));
  }
  std::vector<incidence> incs;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (auto v : h.edges()[i]) incs.push_back({v, i});
  return incidence_geometry(h.vertices(), std::move(lines), std::move(incs));
}

/// Incidence counts equivalent to the (k, l)-count on r-uniform hypergraphs:
/// (lambda, k, lambda*r - 1, l). Without an explicit lambda, the smallest
/// lambda >= 1 satisfying k1 + k2 - lambda >= l is used.
inline sparsity_params derive_params(int k, int l, int r, std::optional<int> lambda = std::nullopt) {
  if (r < 1) throw error(errc::parameter_condition_violated, "hyperedge size must be at least 1");
  if (k < 1) throw error(errc::parameter_condition_violated, "k must be at least 1");
  if (l < 0) throw error(errc::negative_parameter, "l must be nonnegative");
  if (lambda) return validate_and_normalize_params(*lambda, k, *lambda * r - 1, l);
  // k + (lambda*r - 1) - lambda = k - 1 + lambda*(r - 1).
  if (r == 1) {
    if (k - 1 < l) {
      throw error(errc::no_feasible_lambda,
                  "no lambda satisfies the parameter condition for r = 1, k = " + std::to_string(k) +
                      ", l = " + std::to_string(l));
    }
    return validate_and_normalize_params(1, k, 0, l);
  }
  int lam = 1;
  while (k - 1 + lam * (r - 1) < l) ++lam;
  return validate_and_normalize_params(lam, k, lam * r - 1, l);
}

/// derive_params for a uniform hypergraph; mixed hyperedge sizes are an error.
inline sparsity_params derive_params(const hypergraph& h, int k, int l,
                                     std::optional<int> lambda = std::nullopt) {
  const auto r = h.uniform_rank();
  if (!r) {
    throw error(errc::mixed_hyperedge_sizes,
                "derived parameters need a uniform hypergraph with at least one edge");
  }
  return derive_params(k, l, static_cast<int>(*r), lambda);
}

}  // namespace pebble

#endif  // PEBBLE_REDUCTIONS_HPP
