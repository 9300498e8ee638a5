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

#ifndef PEBBLE_RECOGNITION_HPP
#define PEBBLE_RECOGNITION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/game.hpp"
#include "pebble/geometry.hpp"
#include "pebble/multigraph.hpp"
#include "pebble/params.hpp"

namespace pebble {

enum class sparsity_status { tight, sparse_not_tight, not_sparse };

constexpr const char* status_name(sparsity_status s) noexcept {
  switch (s) {
    case sparsity_status::tight: return "tight";
    case sparsity_status::sparse_not_tight: return "sparse";
    case sparsity_status::not_sparse: return "not-sparse";
  }
  return "unknown";
}

struct verdict {
  sparsity_status status = sparsity_status::sparse_not_tight;
  std::int64_t remaining_pebbles = 0;
  std::optional<violation_witness> witness;
  /// Accepted incidences in processing order; extraction mode only.
  std::optional<std::vector<std::size_t>> accepted;
  /// Incidences rejected by extraction.
  std::vector<std::size_t> skipped;
  std::size_t accepted_edges = 0;
};

struct run_options {
  /// Check the four invariants after every move; throws InvariantViolated.
  bool debug_invariants = false;
  /// With |P| + |L| at most this, every support is checked; otherwise a
  /// seeded sample of `sampled_supports` supports.
  std::size_t exhaustive_support_limit = 6;
  std::size_t sampled_supports = 64;
  std::uint64_t sample_seed = 0;
};

/// Every support (A, B), A ⊆ P, B ⊆ L, including empty parts.
inline std::vector<support> all_supports(const incidence_geometry& g) {
  const std::size_t np = g.point_count(), nl = g.line_count();
  std::vector<support> out;
  const std::uint64_t total = std::uint64_t{1} << (np + nl);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < np; ++i)
      if (mask >> i & 1U) a.push_back(i);
    for (std::size_t j = 0; j < nl; ++j)
      if (mask >> (np + j) & 1U) b.push_back(j);
    out.push_back(support::induced(g, std::move(a), std::move(b)));
  }
  return out;
}

/// Uniformly random supports (each vertex kept with probability 1/2), plus
/// the full support.
inline std::vector<support> sample_supports(const incidence_geometry& g, std::size_t count,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<support> out;
  out.reserve(count + 1);
  out.push_back(support::full(g));
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < g.point_count(); ++i)
      if (rng() & 1U) a.push_back(i);
    for (std::size_t j = 0; j < g.line_count(); ++j)
      if (rng() & 1U) b.push_back(j);
    out.push_back(support::induced(g, std::move(a), std::move(b)));
  }
  return out;
}

inline std::vector<support> invariant_supports(const incidence_geometry& g, const run_options& opt) {
  if (g.point_count() + g.line_count() <= opt.exhaustive_support_limit) return all_supports(g);
  return sample_supports(g, opt.sampled_supports, opt.sample_seed);
}

/// Installs an observer that throws InvariantViolated on the first broken
/// invariant.
inline void attach_invariant_checker(game_state& state, std::vector<support> supports) {
  state.set_move_observer([supports = std::move(supports)](const game_state& s) {
    const auto report = s.check_invariants(supports);
    if (!report.ok) {
      throw error(errc::invariant_violated,
                  "invariant " + std::to_string(report.invariant) + ": " + report.detail);
    }
  });
}

namespace detail {

// Gathers pebbles on the endpoints of `e` until it can be accepted, then
// accepts it. Returns false when no further pebble is reachable.
inline bool gather_and_accept(game_state& state, std::size_t e) {
  const auto& edge = state.multigraph().edge(e);
  const std::size_t u = edge.point_vertex, v = edge.line_vertex;
  const int l = state.params().l;
  while (state.pebbles(u) + state.pebbles(v) <= l) {
    auto path = state.find_pebble_path(u, {u, v});
    if (!path) path = state.find_pebble_path(v, {u, v});
    if (!path) return false;
    state.move_pebble(*path);
  }
  state.accept_edge(e, state.pebbles(u) > 0 ? u : v);
  return true;
}

inline sparsity_status final_status(const game_state& state) {
  return state.total_pebbles() == state.params().l ? sparsity_status::tight
                                                   : sparsity_status::sparse_not_tight;
}

}  // namespace detail

/// Plays the recognition game to completion on an already-initialized state.
/// Incidences are taken in geometry order, copies 1..lambda each; the first
/// edge that cannot be accepted ends the game with a witness.
inline verdict play_recognition(game_state& state) {
  const auto& mg = state.multigraph();
  const auto& g = mg.geometry();
  verdict out;
  for (std::size_t i = 0; i < g.incidence_count(); ++i) {
    for (int c = 1; c <= mg.params().lambda; ++c) {
      const std::size_t e = mg.edge_id(i, c);
      if (state.is_processed(e)) continue;
      if (!detail::gather_and_accept(state, e)) {
        const auto& edge = mg.edge(e);
        out.status = sparsity_status::not_sparse;
        out.remaining_pebbles = state.total_pebbles();
        out.witness = state.extract_violation_witness(edge.point_vertex, edge.line_vertex);
        out.accepted_edges = state.accepted_edge_count();
        return out;
      }
    }
  }
  out.status = detail::final_status(state);
  out.remaining_pebbles = state.total_pebbles();
  out.accepted_edges = state.accepted_edge_count();
  return out;
}

inline verdict run_recognition(const incidence_geometry& g, const sparsity_params& p,
                               const run_options& opt = {}) {
  const auto params = validate_and_normalize_params(p);
  game_state state(build_multigraph(g, params));
  if (opt.debug_invariants) attach_invariant_checker(state, invariant_supports(g, opt));
  return play_recognition(state);
}

/// Greedy extraction for lambda = 1: rejected incidences are skipped and the
/// accepted set is a maximum sparse subset.
inline verdict play_extraction(game_state& state) {
  const auto& mg = state.multigraph();
  if (mg.params().lambda != 1) {
    throw error(errc::lambda_not_one, "extraction needs lambda = 1, got " +
                                          std::to_string(mg.params().lambda));
  }
  verdict out;
  out.accepted.emplace();
  for (std::size_t i = 0; i < mg.geometry().incidence_count(); ++i) {
    const std::size_t e = mg.edge_id(i, 1);
    if (state.is_processed(e)) continue;
    if (detail::gather_and_accept(state, e)) {
      out.accepted->push_back(i);
    } else {
      state.mark_processed(e);
      out.skipped.push_back(i);
    }
  }
  out.status = detail::final_status(state);
  out.remaining_pebbles = state.total_pebbles();
  out.accepted_edges = state.accepted_edge_count();
  return out;
}

inline verdict run_extraction(const incidence_geometry& g, const sparsity_params& p,
                              const run_options& opt = {}) {
  const auto params = validate_and_normalize_params(p);
  if (params.lambda != 1) {
    throw error(errc::lambda_not_one,
                "extraction needs lambda = 1, got " + std::to_string(params.lambda));
  }
  game_state state(build_multigraph(g, params));
  if (opt.debug_invariants) attach_invariant_checker(state, invariant_supports(g, opt));
  return play_extraction(state);
}

}  // namespace pebble

#endif  // PEBBLE_RECOGNITION_HPP
