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

#ifndef PEBBLE_GEOMETRY_HPP
#define PEBBLE_GEOMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/params.hpp"

namespace pebble {

/// A point-line incidence, as indices into the owning geometry.
struct incidence {
  std::size_t point = 0;
  std::size_t line = 0;

  friend auto operator<=>(const incidence&, const incidence&) = default;
};

/// Rank-2 incidence geometry (P, L, I). Identifier order is the order given
/// at construction and drives every deterministic iteration downstream.
class incidence_geometry {
 public:
  incidence_geometry() = default;

  incidence_geometry(std::vector<std::string> points, std::vector<std::string> lines,
                     std::vector<incidence> incidences)
      : points_(std::move(points)), lines_(std::move(lines)), incidences_(std::move(incidences)) {
    index_names();
    std::set<incidence> seen;
    for (const auto& inc : incidences_) {
      if (inc.point >= points_.size() || inc.line >= lines_.size()) {
        throw error(errc::dangling_reference, "incidence index out of range");
      }
      if (!seen.insert(inc).second) {
        throw error(errc::duplicate_incidence,
                    "(" + points_[inc.point] + ", " + lines_[inc.line] + ") listed twice");
      }
    }
  }

  static incidence_geometry from_names(
      std::vector<std::string> points, std::vector<std::string> lines,
      const std::vector<std::pair<std::string, std::string>>& named_incidences) {
    incidence_geometry g;
    g.points_ = std::move(points);
    g.lines_ = std::move(lines);
    g.index_names();
    std::vector<incidence> incs;
    incs.reserve(named_incidences.size());
    for (const auto& [p, l] : named_incidences) {
      auto pi = g.point_index_.find(p);
      if (pi == g.point_index_.end()) {
        throw error(errc::dangling_reference, "unknown point \"" + p + "\"");
      }
      auto li = g.line_index_.find(l);
      if (li == g.line_index_.end()) {
        throw error(errc::dangling_reference, "unknown line \"" + l + "\"");
      }
      incs.push_back({pi->second, li->second});
    }
    return incidence_geometry(std::move(g.points_), std::move(g.lines_), std::move(incs));
  }

  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<std::string>& lines() const noexcept { return lines_; }
  const std::vector<incidence>& incidences() const noexcept { return incidences_; }

  std::size_t point_count() const noexcept { return points_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }
  std::size_t incidence_count() const noexcept { return incidences_.size(); }

  const std::string& point_name(std::size_t i) const { return points_.at(i); }
  const std::string& line_name(std::size_t i) const { return lines_.at(i); }

  std::optional<std::size_t> find_point(const std::string& name) const {
    auto it = point_index_.find(name);
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_line(const std::string& name) const {
    auto it = line_index_.find(name);
    if (it == line_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Same P and L, incidences restricted to `keep` (indices into incidences()).
  incidence_geometry with_incidences(const std::vector<std::size_t>& keep) const {
    std::vector<incidence> incs;
    incs.reserve(keep.size());
    for (auto i : keep) incs.push_back(incidences_.at(i));
    return incidence_geometry(points_, lines_, std::move(incs));
  }

 private:
  void index_names() {
    point_index_.clear();
    line_index_.clear();
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].empty()) throw error(errc::parse_error, "empty point name");
      if (!point_index_.emplace(points_[i], i).second) {
        throw error(errc::duplicate_name, "point \"" + points_[i] + "\" listed twice");
      }
    }
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (lines_[i].empty()) throw error(errc::parse_error, "empty line name");
      if (point_index_.count(lines_[i]) != 0) {
        throw error(errc::duplicate_name, "\"" + lines_[i] + "\" is both a point and a line");
      }
      if (!line_index_.emplace(lines_[i], i).second) {
        throw error(errc::duplicate_name, "line \"" + lines_[i] + "\" listed twice");
      }
    }
  }

  std::vector<std::string> points_;
  std::vector<std::string> lines_;
  std::vector<incidence> incidences_;
  std::map<std::string, std::size_t> point_index_;
  std::map<std::string, std::size_t> line_index_;
};

/// A pair (A, B) of point and line subsets together with the incidences of
/// the geometry that fall inside A x B. All three lists are sorted.
struct support {
  std::vector<std::size_t> points;
  std::vector<std::size_t> lines;
  std::vector<std::size_t> incidences;

  /// Builds the support (A, B) and its induced incidences I ∩ (A x B).
  static support induced(const incidence_geometry& g, std::vector<std::size_t> points,
                         std::vector<std::size_t> lines) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::vector<bool> in_a(g.point_count(), false), in_b(g.line_count(), false);
    for (auto p : points) in_a.at(p) = true;
    for (auto l : lines) in_b.at(l) = true;
    support s{std::move(points), std::move(lines), {}};
    for (std::size_t i = 0; i < g.incidence_count(); ++i) {
      const auto& inc = g.incidences()[i];
      if (in_a[inc.point] && in_b[inc.line]) s.incidences.push_back(i);
    }
    return s;
  }

  /// The support of the whole geometry.
  static support full(const incidence_geometry& g) {
    std::vector<std::size_t> a(g.point_count()), b(g.line_count());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = i;
    return induced(g, std::move(a), std::move(b));
  }

  bool has_both_parts() const noexcept { return !points.empty() && !lines.empty(); }

  friend bool operator==(const support&, const support&) = default;
};

/// k1|A| + k2|B| - l - lambda|I ∩ (A x B)|; negative iff the support violates
/// the sparsity count.
inline std::int64_t count_inequality(const support& s, const sparsity_params& p) {
  return p.bound(static_cast<std::int64_t>(s.points.size()),
                 static_cast<std::int64_t>(s.lines.size())) -
         std::int64_t{p.lambda} * static_cast<std::int64_t>(s.incidences.size());
}

}  // namespace pebble

#endif  // PEBBLE_GEOMETRY_HPP
