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

#ifndef PEBBLE_MULTIGRAPH_HPP
#define PEBBLE_MULTIGRAPH_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "pebble/geometry.hpp"
#include "pebble/params.hpp"

namespace pebble {

enum class vertex_kind { point = 1, line = 2 };

/// Copy `copy` (1-based, up to lambda) of the edge joining the two sides of
/// incidence number `incidence`.
struct multi_edge {
  std::size_t incidence = 0;
  int copy = 1;
  std::size_t point_vertex = 0;
  std::size_t line_vertex = 0;

  std::size_t other(std::size_t v) const noexcept {
    return v == point_vertex ? line_vertex : point_vertex;
  }
};

/// The lambda-fold incidence multigraph. Vertices 0..|P|-1 are the points in
/// geometry order, followed by the lines. Edges are stored incidence-major,
/// so edge `i * lambda + (c - 1)` is copy c of incidence i.
class pebble_multigraph {
 public:
  pebble_multigraph(incidence_geometry g, sparsity_params p)
      : geometry_(std::make_shared<const incidence_geometry>(std::move(g))), params_(p) {
    const auto& geo = *geometry_;
    const std::size_t n = geo.point_count() + geo.line_count();
    incident_.assign(n, {});
    edges_.reserve(geo.incidence_count() * static_cast<std::size_t>(p.lambda));
    for (std::size_t i = 0; i < geo.incidence_count(); ++i) {
      const auto& inc = geo.incidences()[i];
      for (int c = 1; c <= p.lambda; ++c) {
        const std::size_t id = edges_.size();
        edges_.push_back({i, c, inc.point, geo.point_count() + inc.line});
        incident_[inc.point].push_back(id);
        incident_[geo.point_count() + inc.line].push_back(id);
      }
    }
  }

  const incidence_geometry& geometry() const noexcept { return *geometry_; }
  const sparsity_params& params() const noexcept { return params_; }

  std::size_t vertex_count() const noexcept { return incident_.size(); }
  std::size_t point_count() const noexcept { return geometry_->point_count(); }

  vertex_kind kind(std::size_t v) const noexcept {
    return v < geometry_->point_count() ? vertex_kind::point : vertex_kind::line;
  }
  bool is_point(std::size_t v) const noexcept { return v < geometry_->point_count(); }

  std::size_t point_vertex(std::size_t point) const noexcept { return point; }
  std::size_t line_vertex(std::size_t line) const noexcept { return geometry_->point_count() + line; }

  const std::vector<multi_edge>& edges() const noexcept { return edges_; }
  const multi_edge& edge(std::size_t id) const { return edges_.at(id); }
  std::size_t edge_id(std::size_t incidence, int copy) const noexcept {
    return incidence * static_cast<std::size_t>(params_.lambda) + static_cast<std::size_t>(copy - 1);
  }

  /// Edges incident to `v`, in construction order.
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_.at(v); }

  const std::string& vertex_name(std::size_t v) const {
    return is_point(v) ? geometry_->point_name(v) : geometry_->line_name(v - point_count());
  }

 private:
  std::shared_ptr<const incidence_geometry> geometry_;
  sparsity_params params_;
  std::vector<multi_edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

inline std::shared_ptr<const pebble_multigraph> build_multigraph(const incidence_geometry& g,
                                                                 const sparsity_params& p) {
  return std::make_shared<const pebble_multigraph>(g, p);
}

}  // namespace pebble

#endif  // PEBBLE_MULTIGRAPH_HPP
