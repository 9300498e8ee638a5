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

#ifndef PEBBLE_HYPERGRAPH_HPP
#define PEBBLE_HYPERGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebble/error.hpp"

namespace pebble {

/// Hypergraph with ordered vertex names; each hyperedge is a nonempty list
/// of distinct vertex indices. Repeated hyperedges are allowed.
class hypergraph {
 public:
  hypergraph() = default;

  hypergraph(std::vector<std::string> vertices, std::vector<std::vector<std::size_t>> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].empty()) throw error(errc::parse_error, "empty vertex name");
      if (!seen.emplace(vertices_[i], i).second) {
        throw error(errc::duplicate_name, "vertex \"" + vertices_[i] + "\" listed twice");
      }
    }
    for (const auto& e : edges_) {
      if (e.empty()) throw error(errc::parse_error, "empty hyperedge");
      auto sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw error(errc::parse_error, "hyperedge repeats a vertex");
      }
      if (sorted.back() >= vertices_.size()) {
        throw error(errc::dangling_reference, "hyperedge vertex index out of range");
      }
    }
  }

  static hypergraph from_names(std::vector<std::string> vertices,
                               const std::vector<std::vector<std::string>>& named_edges) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
    std::vector<std::vector<std::size_t>> edges;
    edges.reserve(named_edges.size());
    for (const auto& ne : named_edges) {
      std::vector<std::size_t> e;
      for (const auto& name : ne) {
        auto it = index.find(name);
        if (it == index.end()) throw error(errc::dangling_reference, "unknown vertex \"" + name + "\"");
        e.push_back(it->second);
      }
      edges.push_back(std::move(e));
    }
    return hypergraph(std::move(vertices), std::move(edges));
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<std::size_t>>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Common hyperedge size, or nullopt for mixed sizes or no edges.
  std::optional<std::size_t> uniform_rank() const {
    if (edges_.empty()) return std::nullopt;
    const std::size_t r = edges_.front().size();
    for (const auto& e : edges_)
      if (e.size() != r) return std::nullopt;
    return r;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<std::size_t>> edges_;
};

}  // namespace pebble

#endif  // PEBBLE_HYPERGRAPH_HPP
