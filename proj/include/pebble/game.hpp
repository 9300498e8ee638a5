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

#ifndef PEBBLE_GAME_HPP
#define PEBBLE_GAME_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/geometry.hpp"
#include "pebble/multigraph.hpp"

namespace pebble {

/// A directed path in the accepted graph D, as the ordered list of edges
/// walked from `start`. An empty edge list is the zero-length path at `start`.
struct pebble_path {
  std::size_t start = 0;
  std::vector<std::size_t> edges;
  std::size_t end = 0;

  bool empty() const noexcept { return edges.empty(); }
};

/// A support certified to violate the count: deficit =
/// lambda|I ∩ (A x B)| - (k1|A| + k2|B| - l) >= 1.
struct violation_witness {
  support where;
  std::int64_t deficit = 0;
};

/// peb(V), span(V), out(V) for V = A ∪ B.
struct support_stats {
  std::int64_t peb_sum = 0;
  std::int64_t span_count = 0;
  std::int64_t out_count = 0;
};

struct invariant_report {
  bool ok = true;
  int invariant = 0;  // 1..4, 0 when ok
  std::string detail;
};

/// Mutable state of one pebble game: the oriented accepted graph D and the
/// pebble count of every vertex. Every move keeps peb(v) + out(v) = k_{τ(v)}.
class game_state {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit game_state(std::shared_ptr<const pebble_multigraph> mg) : mg_(std::move(mg)) {
    const std::size_t n = mg_->vertex_count();
    pebbles_.resize(n);
    for (std::size_t v = 0; v < n; ++v) pebbles_[v] = mg_->params().capacity(mg_->is_point(v));
    out_.assign(n, {});
    tail_.assign(mg_->edges().size(), npos);
    processed_.assign(mg_->edges().size(), false);
  }

  const pebble_multigraph& multigraph() const noexcept { return *mg_; }
  std::shared_ptr<const pebble_multigraph> multigraph_ptr() const noexcept { return mg_; }
  const sparsity_params& params() const noexcept { return mg_->params(); }

  int pebbles(std::size_t v) const { return pebbles_.at(v); }
  std::int64_t total_pebbles() const noexcept {
    std::int64_t s = 0;
    for (int p : pebbles_) s += p;
    return s;
  }
  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }

  bool is_accepted(std::size_t e) const { return tail_.at(e) != npos; }
  std::size_t tail(std::size_t e) const { return tail_.at(e); }
  std::size_t head(std::size_t e) const { return mg_->edge(e).other(tail_.at(e)); }
  std::size_t accepted_edge_count() const noexcept { return accepted_count_; }

  bool is_processed(std::size_t e) const { return processed_.at(e); }
  void mark_processed(std::size_t e) { processed_.at(e) = true; }

  /// Called after every successful accept_edge / move_pebble.
  void set_move_observer(std::function<void(const game_state&)> observer) {
    observer_ = std::move(observer);
  }

  /// Accept-Edge: orient `e` away from `source`, spending one of its pebbles.
  void accept_edge(std::size_t e, std::size_t source) {
    const auto& edge = mg_->edge(e);
    if (is_accepted(e)) throw error(errc::already_accepted, "edge already in D");
    if (source != edge.point_vertex && source != edge.line_vertex) {
      throw error(errc::source_not_endpoint, "source is not an endpoint of the edge");
    }
    if (pebbles_[edge.point_vertex] + pebbles_[edge.line_vertex] <= params().l) {
      throw error(errc::insufficient_pebbles, "endpoints hold at most l pebbles");
    }
    if (pebbles_[source] < 1) throw error(errc::source_has_no_pebble, "source holds no pebble");
    --pebbles_[source];
    tail_[e] = source;
    out_[source].push_back(e);
    processed_[e] = true;
    ++accepted_count_;
    notify();
  }

  /// Depth-first search along D from `from` for a vertex u holding a pebble
  /// with u outside `excluded`. Out-edges are explored in insertion order and
  /// the first hit wins.
  std::optional<pebble_path> find_pebble_path(
      std::size_t from, std::pair<std::size_t, std::size_t> excluded = {npos, npos}) const {
    auto donor = [&](std::size_t u) {
      return pebbles_[u] > 0 && u != excluded.first && u != excluded.second;
    };
    if (donor(from)) return pebble_path{from, {}, from};

    std::vector<bool> visited(mg_->vertex_count(), false);
    // Stack frames: (vertex, next out-edge position). The edge stack mirrors
    // the current DFS path.
    std::vector<std::pair<std::size_t, std::size_t>> frames{{from, 0}};
    std::vector<std::size_t> path_edges;
    visited[from] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next == out_[v].size()) {
        frames.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        continue;
      }
      const std::size_t e = out_[v][next++];
      const std::size_t w = mg_->edge(e).other(v);
      if (visited[w]) continue;
      visited[w] = true;
      path_edges.push_back(e);
      if (donor(w)) return pebble_path{from, path_edges, w};
      frames.emplace_back(w, 0);
    }
    return std::nullopt;
  }

  /// Move-Pebble: reverse every edge of `path` and shift one pebble from its
  /// end to its start. Zero-length paths are no-ops.
  void move_pebble(const pebble_path& path) {
    if (path.edges.empty()) {
      if (path.end != path.start) throw error(errc::path_not_in_d, "empty path with distinct ends");
      return;
    }
    std::size_t at = path.start;
    for (auto e : path.edges) {
      if (e >= tail_.size() || tail_[e] != at) {
        throw error(errc::path_not_in_d, "edge is not an out-edge of the current path vertex");
      }
      at = mg_->edge(e).other(at);
    }
    if (at != path.end) throw error(errc::path_not_in_d, "path does not end at its stated end");
    if (pebbles_[path.end] <= 0) throw error(errc::empty_target_pebbles, "path end holds no pebble");

    at = path.start;
    for (auto e : path.edges) {
      const std::size_t next = mg_->edge(e).other(at);
      auto& list = out_[at];
      list.erase(std::find(list.begin(), list.end(), e));
      out_[next].push_back(e);
      tail_[e] = next;
      at = next;
    }
    ++pebbles_[path.start];
    --pebbles_[path.end];
    notify();
  }

  /// Union of Reach(v) over the seeds, as a vertex mask.
  std::vector<bool> reach(const std::vector<std::size_t>& seeds) const {
    std::vector<bool> seen(mg_->vertex_count(), false);
    std::vector<std::size_t> stack;
    for (auto s : seeds) {
      if (!seen.at(s)) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto e : out_[v]) {
        const std::size_t w = mg_->edge(e).other(v);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  /// Certifies a failed acceptance of an edge between `point_v` and `line_v`:
  /// V = Reach(point_v) ∪ Reach(line_v) carries at most l pebbles, so the
  /// geometry restricted to V violates the count.
  violation_witness extract_violation_witness(std::size_t point_v, std::size_t line_v) const {
    if (!mg_->is_point(point_v) || mg_->is_point(line_v)) {
      throw error(errc::not_a_failure_state, "expected a point vertex and a line vertex");
    }
    const auto mask = reach({point_v, line_v});
    std::int64_t peb = 0;
    std::vector<std::size_t> a, b;
    for (std::size_t v = 0; v < mask.size(); ++v) {
      if (!mask[v]) continue;
      peb += pebbles_[v];
      if (mg_->is_point(v)) {
        a.push_back(v);
      } else {
        b.push_back(v - mg_->point_count());
      }
    }
    if (peb > params().l) {
      throw error(errc::not_a_failure_state, "reachable vertices still hold more than l pebbles");
    }
    violation_witness w;
    w.where = support::induced(mg_->geometry(), std::move(a), std::move(b));
    w.deficit = -count_inequality(w.where, params());
    if (w.deficit < 1) {
      throw error(errc::not_a_failure_state, "reachable support satisfies the count");
    }
    return w;
  }

  support_stats stats(const support& s) const {
    std::vector<bool> in(mg_->vertex_count(), false);
    for (auto p : s.points) in.at(mg_->point_vertex(p)) = true;
    for (auto l : s.lines) in.at(mg_->line_vertex(l)) = true;
    support_stats st;
    for (std::size_t v = 0; v < in.size(); ++v) {
      if (!in[v]) continue;
      st.peb_sum += pebbles_[v];
      for (auto e : out_[v]) {
        if (in[mg_->edge(e).other(v)]) {
          ++st.span_count;
        } else {
          ++st.out_count;
        }
      }
    }
    return st;
  }

  /// Checks the four pebble-game invariants: per vertex, and for each of the
  /// given supports. Returns the first violation found.
  invariant_report check_invariants(const std::vector<support>& supports) const {
    const auto& p = params();
    for (std::size_t v = 0; v < pebbles_.size(); ++v) {
      if (pebbles_[v] < 0 ||
          pebbles_[v] + static_cast<int>(out_[v].size()) != p.capacity(mg_->is_point(v))) {
        return {false, 1, "peb + out != capacity at vertex " + mg_->vertex_name(v)};
      }
    }
    for (const auto& s : supports) {
      const auto st = stats(s);
      const auto a = static_cast<std::int64_t>(s.points.size());
      const auto b = static_cast<std::int64_t>(s.lines.size());
      const std::int64_t capacity = std::int64_t{p.k1} * a + std::int64_t{p.k2} * b;
      if (st.peb_sum + st.span_count + st.out_count != capacity) {
        return {false, 2, "peb + span + out != k1|A| + k2|B| on " + describe(s)};
      }
      if (!s.has_both_parts()) continue;
      if (st.peb_sum + st.out_count < p.l) {
        return {false, 3, "peb + out < l on " + describe(s)};
      }
      if (st.span_count > capacity - p.l) {
        return {false, 4, "span > k1|A| + k2|B| - l on " + describe(s)};
      }
    }
    return {};
  }

 private:
  void notify() const {
    if (observer_) observer_(*this);
  }

  std::string describe(const support& s) const {
    std::string out = "{";
    for (auto p : s.points) out += mg_->geometry().point_name(p) + " ";
    out += "| ";
    for (auto l : s.lines) out += mg_->geometry().line_name(l) + " ";
    return out + "}";
  }

  std::shared_ptr<const pebble_multigraph> mg_;
  std::vector<int> pebbles_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> tail_;
  std::vector<bool> processed_;
  std::size_t accepted_count_ = 0;
  std::function<void(const game_state&)> observer_;
};

inline game_state init_state(std::shared_ptr<const pebble_multigraph> mg) {
  return game_state(std::move(mg));
}

}  // namespace pebble

#endif  // PEBBLE_GAME_HPP
