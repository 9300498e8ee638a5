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

#ifndef PEBBLE_ORACLE_HPP
#define PEBBLE_ORACLE_HPP

// Exponential-time reference checks. Everything here works directly from the
// counting definition and never touches the pebble game.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/geometry.hpp"
#include "pebble/hypergraph.hpp"
#include "pebble/params.hpp"
#include "pebble/recognition.hpp"

namespace pebble {

struct oracle_bounds {
  std::size_t max_vertices = 16;   // |P| + |L| for support enumeration
  std::size_t max_incidences = 20; // |I| for maximum-subset search
  std::size_t max_ground = 12;     // |P| * |L| for basis enumeration
};

namespace detail {

using mask_t = std::uint64_t;

// Calls f(mask) for every size-`k` subset of {0..n-1}, lexicographically by
// sorted index list. Stops early when f returns true.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    mask_t m = 0;
    for (auto i : c) m |= mask_t{1} << i;
    if (f(m)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Vertex-mask view of a geometry: bit i < |P| is point i, bit |P| + j is line j.
struct mask_view {
  std::size_t np = 0;
  std::size_t nl = 0;
  mask_t point_bits = 0;
  std::vector<mask_t> incidence_bits;

  explicit mask_view(const incidence_geometry& g)
      : np(g.point_count()), nl(g.line_count()) {
    point_bits = np == 0 ? 0 : ((mask_t{1} << np) - 1);
    for (const auto& inc : g.incidences()) {
      incidence_bits.push_back(mask_t{1} << inc.point | mask_t{1} << (np + inc.line));
    }
  }

  std::size_t vertices() const noexcept { return np + nl; }

  std::int64_t points_in(mask_t m) const noexcept { return std::popcount(m & point_bits); }
  std::int64_t lines_in(mask_t m) const noexcept { return std::popcount(m & ~point_bits); }

  // Incidences inside the vertex mask, as an incidence bitmask.
  mask_t induced(mask_t m) const noexcept {
    mask_t out = 0;
    for (std::size_t i = 0; i < incidence_bits.size(); ++i)
      if ((m & incidence_bits[i]) == incidence_bits[i]) out |= mask_t{1} << i;
    return out;
  }

  support to_support(const incidence_geometry& g, mask_t m) const {
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < np; ++i)
      if (m >> i & 1U) a.push_back(i);
    for (std::size_t j = 0; j < nl; ++j)
      if (m >> (np + j) & 1U) b.push_back(j);
    return support::induced(g, std::move(a), std::move(b));
  }
};

// Supports whose full induced set already exceeds the bound; a subset S of
// incidences is sparse iff none of these constraints is violated by S.
struct tight_constraint {
  mask_t incidences;
  std::int64_t bound;
};

inline std::vector<tight_constraint> binding_constraints(const mask_view& mv,
                                                         const sparsity_params& p) {
  std::vector<tight_constraint> out;
  const mask_t total = mask_t{1} << mv.vertices();
  for (mask_t m = 1; m < total; ++m) {
    const auto a = mv.points_in(m), b = mv.lines_in(m);
    if (a == 0 || b == 0) continue;
    const mask_t inc = mv.induced(m);
    const std::int64_t bound = p.bound(a, b);
    if (std::int64_t{p.lambda} * std::popcount(inc) > bound) out.push_back({inc, bound});
  }
  return out;
}

inline bool satisfies(mask_t subset, const std::vector<tight_constraint>& cs, int lambda) {
  for (const auto& c : cs)
    if (std::int64_t{lambda} * std::popcount(subset & c.incidences) > c.bound) return false;
  return true;
}

inline void check_vertex_bound(const incidence_geometry& g, const oracle_bounds& bounds) {
  const std::size_t n = g.point_count() + g.line_count();
  if (n > bounds.max_vertices || n > 62) {
    throw error(errc::instance_too_large,
                "|P| + |L| = " + std::to_string(n) + " exceeds oracle bound " +
                    std::to_string(bounds.max_vertices));
  }
}

}  // namespace detail

/// Decides sparsity by checking every support (A, B) with A, B nonempty, in
/// order of increasing |A| + |B| and then lexicographically. The witness is
/// the first violating support in that order.
inline verdict brute_force_verdict(const incidence_geometry& g, const sparsity_params& raw,
                                   const oracle_bounds& bounds = {}) {
  const auto p = validate_and_normalize_params(raw);
  detail::check_vertex_bound(g, bounds);
  const detail::mask_view mv(g);
  verdict out;
  out.remaining_pebbles = p.bound(static_cast<std::int64_t>(g.point_count()),
                                  static_cast<std::int64_t>(g.line_count())) +
                          p.l - std::int64_t{p.lambda} * static_cast<std::int64_t>(g.incidence_count());
  for (std::size_t k = 2; k <= mv.vertices() && !out.witness; ++k) {
    detail::for_each_combination(mv.vertices(), k, [&](detail::mask_t m) {
      const auto a = mv.points_in(m), b = mv.lines_in(m);
      if (a == 0 || b == 0) return false;
      const auto induced = std::popcount(mv.induced(m));
      const auto excess = std::int64_t{p.lambda} * induced - p.bound(a, b);
      if (excess <= 0) return false;
      out.witness = violation_witness{mv.to_support(g, m), excess};
      return true;
    });
  }
  if (out.witness) {
    out.status = sparsity_status::not_sparse;
  } else if (out.remaining_pebbles == p.l) {
    out.status = sparsity_status::tight;
  } else {
    out.status = sparsity_status::sparse_not_tight;
  }
  return out;
}

inline bool brute_force_is_sparse(const incidence_geometry& g, const sparsity_params& p,
                                  const oracle_bounds& bounds = {}) {
  return brute_force_verdict(g, p, bounds).status != sparsity_status::not_sparse;
}

/// A maximum-cardinality I' ⊆ I with (P, L, I') sparse, found by exhaustive
/// search from the largest size down. Returns sorted incidence indices.
inline std::vector<std::size_t> max_sparse_subset(const incidence_geometry& g,
                                                  const sparsity_params& raw,
                                                  const oracle_bounds& bounds = {}) {
  const auto p = validate_and_normalize_params(raw);
  const std::size_t m = g.incidence_count();
  if (m > bounds.max_incidences || m > 62) {
    throw error(errc::instance_too_large,
                "|I| = " + std::to_string(m) + " exceeds oracle bound " +
                    std::to_string(bounds.max_incidences));
  }
  // Vertices without incidences never matter; drop them before enumerating.
  std::vector<bool> used_p(g.point_count(), false), used_l(g.line_count(), false);
  for (const auto& inc : g.incidences()) used_p[inc.point] = used_l[inc.line] = true;
  std::vector<std::string> pts, lns;
  std::vector<std::size_t> pmap(g.point_count()), lmap(g.line_count());
  for (std::size_t i = 0; i < g.point_count(); ++i)
    if (used_p[i]) pmap[i] = pts.size(), pts.push_back(g.point_name(i));
  for (std::size_t j = 0; j < g.line_count(); ++j)
    if (used_l[j]) lmap[j] = lns.size(), lns.push_back(g.line_name(j));
  std::vector<incidence> incs;
  for (const auto& inc : g.incidences()) incs.push_back({pmap[inc.point], lmap[inc.line]});
  const incidence_geometry compact(std::move(pts), std::move(lns), std::move(incs));
  detail::check_vertex_bound(compact, bounds);

  const detail::mask_view mv(compact);
  const auto constraints = detail::binding_constraints(mv, p);
  std::vector<std::size_t> best;
  for (std::size_t k = m + 1; k-- > 0;) {
    const bool found = detail::for_each_combination(m, k, [&](detail::mask_t s) {
      if (!detail::satisfies(s, constraints, p.lambda)) return false;
      for (std::size_t i = 0; i < m; ++i)
        if (s >> i & 1U) best.push_back(i);
      return true;
    });
    if (found) break;
  }
  return best;
}

/// Supports (A, B), both nonempty, whose induced incidences meet the count
/// with equality. Requires a sparse geometry.
inline std::vector<support> enumerate_blocks(const incidence_geometry& g, const sparsity_params& raw,
                                             const oracle_bounds& bounds = {}) {
  const auto p = validate_and_normalize_params(raw);
  if (!brute_force_is_sparse(g, p, bounds)) {
    throw error(errc::not_sparse_input, "blocks are only defined for sparse geometries");
  }
  const detail::mask_view mv(g);
  std::vector<support> out;
  for (std::size_t k = 2; k <= mv.vertices(); ++k) {
    detail::for_each_combination(mv.vertices(), k, [&](detail::mask_t m) {
      const auto a = mv.points_in(m), b = mv.lines_in(m);
      if (a == 0 || b == 0) return false;
      if (std::int64_t{p.lambda} * std::popcount(mv.induced(m)) == p.bound(a, b)) {
        out.push_back(mv.to_support(g, m));
      }
      return false;
    });
  }
  return out;
}

struct block_closure_report {
  std::size_t block_count = 0;
  std::size_t pairs_checked = 0;
  struct violation {
    support first;
    support second;
    bool union_is_block = true;
    bool intersection_is_block = true;
  };
  std::vector<violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// For every pair of blocks whose point sets and line sets both meet, checks
/// that the union and the intersection supports are blocks too.
inline block_closure_report verify_block_closure(const incidence_geometry& g,
                                                 const sparsity_params& raw,
                                                 const oracle_bounds& bounds = {}) {
  const auto blocks = enumerate_blocks(g, raw, bounds);
  const std::size_t np = g.point_count();
  auto to_mask = [np](const support& s) {
    detail::mask_t m = 0;
    for (auto a : s.points) m |= detail::mask_t{1} << a;
    for (auto b : s.lines) m |= detail::mask_t{1} << (np + b);
    return m;
  };
  const detail::mask_t point_bits = np == 0 ? 0 : (detail::mask_t{1} << np) - 1;
  std::vector<detail::mask_t> masks;
  for (const auto& b : blocks) masks.push_back(to_mask(b));
  const std::set<detail::mask_t> block_set(masks.begin(), masks.end());

  block_closure_report rep;
  rep.block_count = blocks.size();
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      const auto meet = masks[i] & masks[j];
      if ((meet & point_bits) == 0 || (meet & ~point_bits) == 0) continue;
      ++rep.pairs_checked;
      const bool u = block_set.count(masks[i] | masks[j]) != 0;
      const bool n = block_set.count(meet) != 0;
      if (!u || !n) rep.violations.push_back({blocks[i], blocks[j], u, n});
    }
  }
  return rep;
}

struct exchange_violation {
  std::vector<incidence> first_basis;
  std::vector<incidence> second_basis;
  incidence element;
};

struct matroid_report {
  /// Ground set P x L (all incidences present), for naming.
  incidence_geometry ground;
  std::size_t bases_count = 0;
  bool first_is_basis = true;   // pairwise mode only
  bool second_is_basis = true;  // pairwise mode only
  std::size_t violation_count = 0;
  std::vector<exchange_violation> violations;  // at most `max_listed`

  static constexpr std::size_t max_listed = 64;

  bool bases_nonempty() const noexcept { return bases_count > 0; }
  bool exchange_holds() const noexcept { return violation_count == 0; }
};

namespace detail {

inline incidence_geometry complete_ground(std::size_t n_points, std::size_t n_lines) {
  std::vector<std::string> pts, lns;
  for (std::size_t i = 0; i < n_points; ++i) pts.push_back("p" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n_lines; ++j) lns.push_back("l" + std::to_string(j + 1));
  std::vector<incidence> incs;
  for (std::size_t i = 0; i < n_points; ++i)
    for (std::size_t j = 0; j < n_lines; ++j) incs.push_back({i, j});
  return incidence_geometry(std::move(pts), std::move(lns), std::move(incs));
}

inline std::vector<incidence> unpack(const incidence_geometry& ground, mask_t s) {
  std::vector<incidence> out;
  for (std::size_t i = 0; i < ground.incidence_count(); ++i)
    if (s >> i & 1U) out.push_back(ground.incidences()[i]);
  return out;
}

inline void record(matroid_report& rep, const incidence_geometry& ground, mask_t b1, mask_t b2,
                   std::size_t elem) {
  ++rep.violation_count;
  if (rep.violations.size() < matroid_report::max_listed) {
    rep.violations.push_back({unpack(ground, b1), unpack(ground, b2), ground.incidences()[elem]});
  }
}

}  // namespace detail

/// Enumerates the tight subsets (bases) of the complete ground set P x L and
/// checks the basis-exchange axiom on every ordered pair.
inline matroid_report verify_matroid_exchange(std::size_t n_points, std::size_t n_lines,
                                              const sparsity_params& raw,
                                              const oracle_bounds& bounds = {}) {
  const auto p = validate_and_normalize_params(raw);
  const std::size_t m = n_points * n_lines;
  if (m > bounds.max_ground || m > 24) {
    throw error(errc::instance_too_large, "|P| x |L| = " + std::to_string(m) +
                                              " exceeds ground bound " +
                                              std::to_string(bounds.max_ground));
  }
  matroid_report rep;
  rep.ground = detail::complete_ground(n_points, n_lines);
  const detail::mask_view mv(rep.ground);
  const auto constraints = detail::binding_constraints(mv, p);
  const std::int64_t target = p.bound(static_cast<std::int64_t>(n_points),
                                      static_cast<std::int64_t>(n_lines));
  const detail::mask_t total = detail::mask_t{1} << m;
  std::vector<bool> is_basis(total, false);
  std::vector<detail::mask_t> bases;
  for (detail::mask_t s = 0; s < total; ++s) {
    if (std::int64_t{p.lambda} * std::popcount(s) != target) continue;
    if (!detail::satisfies(s, constraints, p.lambda)) continue;
    is_basis[s] = true;
    bases.push_back(s);
  }
  rep.bases_count = bases.size();
  for (auto b1 : bases) {
    for (auto b2 : bases) {
      const detail::mask_t only2 = b2 & ~b1, only1 = b1 & ~b2;
      for (std::size_t e = 0; e < m; ++e) {
        if (!(only2 >> e & 1U)) continue;
        bool exchanged = false;
        for (std::size_t c = 0; c < m && !exchanged; ++c) {
          if (!(only1 >> c & 1U)) continue;
          exchanged = is_basis[(b1 & ~(detail::mask_t{1} << c)) | detail::mask_t{1} << e];
        }
        if (!exchanged) detail::record(rep, rep.ground, b1, b2, e);
      }
    }
  }
  return rep;
}

/// Basis-exchange check for two supplied incidence sets over the same points
/// and lines: for each b in B2 \ B1, is there c in B1 \ B2 with B1 - c + b
/// tight?
inline matroid_report verify_exchange_pair(const incidence_geometry& first,
                                           const incidence_geometry& second,
                                           const sparsity_params& raw,
                                           const oracle_bounds& bounds = {}) {
  const auto p = validate_and_normalize_params(raw);
  auto same_names = [](std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };
  if (!same_names(first.points(), second.points()) || !same_names(first.lines(), second.lines())) {
    throw error(errc::ground_set_mismatch, "both geometries must have the same points and lines");
  }
  detail::check_vertex_bound(first, bounds);
  matroid_report rep;
  {
    std::vector<incidence> all;
    for (std::size_t i = 0; i < first.point_count(); ++i)
      for (std::size_t j = 0; j < first.line_count(); ++j) all.push_back({i, j});
    rep.ground = incidence_geometry(first.points(), first.lines(), std::move(all));
  }
  const std::size_t nl = first.line_count();
  auto index_of = [nl](const incidence& inc) { return inc.point * nl + inc.line; };
  std::set<std::size_t> b1, b2;
  for (const auto& inc : first.incidences()) b1.insert(index_of(inc));
  for (const auto& inc : second.incidences()) {
    const auto pi = *first.find_point(second.point_name(inc.point));
    const auto li = *first.find_line(second.line_name(inc.line));
    b2.insert(index_of({pi, li}));
  }
  auto tight = [&](const std::set<std::size_t>& s) {
    std::vector<std::size_t> keep(s.begin(), s.end());
    return brute_force_verdict(rep.ground.with_incidences(keep), p, bounds).status ==
           sparsity_status::tight;
  };
  rep.first_is_basis = tight(b1);
  rep.second_is_basis = tight(b2);
  rep.bases_count = static_cast<std::size_t>(rep.first_is_basis) + rep.second_is_basis;

  auto as_list = [&](const std::set<std::size_t>& s) {
    std::vector<incidence> out;
    for (auto i : s) out.push_back(rep.ground.incidences()[i]);
    return out;
  };
  for (auto e : b2) {
    if (b1.count(e)) continue;
    bool exchanged = false;
    for (auto c : b1) {
      if (b2.count(c)) continue;
      auto trial = b1;
      trial.erase(c);
      trial.insert(e);
      if (tight(trial)) {
        exchanged = true;
        break;
      }
    }
    if (!exchanged) {
      ++rep.violation_count;
      if (rep.violations.size() < matroid_report::max_listed) {
        rep.violations.push_back({as_list(b1), as_list(b2), rep.ground.incidences()[e]});
      }
    }
  }
  return rep;
}

/// Direct (k, l)-count on a hypergraph: every vertex set V' spanning at least
/// one hyperedge has |E(V')| <= k|V'| - l; tight adds |E| = k|V| - l.
inline sparsity_status hypergraph_verdict(const hypergraph& h, int k, int l,
                                          const oracle_bounds& bounds = {}) {
  const std::size_t n = h.vertex_count();
  if (n > bounds.max_vertices || n > 62) {
    throw error(errc::instance_too_large, "hypergraph has too many vertices for the oracle");
  }
  std::vector<detail::mask_t> edge_bits;
  for (const auto& e : h.edges()) {
    detail::mask_t m = 0;
    for (auto v : e) m |= detail::mask_t{1} << v;
    edge_bits.push_back(m);
  }
  const detail::mask_t total = detail::mask_t{1} << n;
  for (detail::mask_t m = 1; m < total; ++m) {
    std::int64_t spanned = 0;
    for (auto eb : edge_bits) spanned += (m & eb) == eb;
    if (spanned > 0 && spanned > std::int64_t{k} * std::popcount(m) - l) {
      return sparsity_status::not_sparse;
    }
  }
  const auto edges = static_cast<std::int64_t>(h.edge_count());
  return edges == std::int64_t{k} * static_cast<std::int64_t>(n) - l ? sparsity_status::tight
                                                                      : sparsity_status::sparse_not_tight;
}

}  // namespace pebble

#endif  // PEBBLE_ORACLE_HPP
