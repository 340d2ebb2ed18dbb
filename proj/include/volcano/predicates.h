// Copyright 2026 The Volcano Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "volcano/exec.h"
#include "volcano/vec.h"

namespace volcano {

struct Segment {
  Vec2 a, b;
};

/// Orientation determinant of (a, b, c) on coordinates divided by `scale`.
double orient(Vec2 a, Vec2 b, Vec2 c, double scale);

/// Proper crossing: each segment strictly separates the endpoints of the
/// other, with |orientation| > 1e-12 after normalization by `scale`.
bool segments_properly_cross(const Segment& s, const Segment& t, double scale);

/// Intersection point of two properly crossing segments.
Vec2 crossing_point(const Segment& s, const Segment& t);

/// Largest pairwise vertex distance.
double diameter(std::span<const Vec2> points, Exec exec = Exec::parallel);

/// Scale used to normalize the predicates: max(1e-300, bounding-box diagonal).
double extent(std::span<const Vec2> points);

std::vector<Segment> closed_segments(std::span<const Vec2> poly);

using IndexPair = std::pair<int, int>;

/// Index pairs (i < j) of nonadjacent edges of the closed polyline that
/// properly cross, sorted. Requires at least 4 vertices.
std::vector<IndexPair> polyline_self_intersect(std::span<const Vec2> poly,
                                               Exec exec = Exec::parallel);

/// Pairs (i, j) with segment i of `a` properly crossing segment j of `b`, sorted.
std::vector<IndexPair> crossings_between(std::span<const Segment> a,
                                         std::span<const Segment> b, double scale,
                                         Exec exec = Exec::parallel);

/// True iff no two of the segments properly cross.
bool ribs_pairwise_disjoint(std::span<const Segment> ribs, Exec exec = Exec::parallel);

/// Winding number of the closed polyline around q.
int winding_number(std::span<const Vec2> poly, Vec2 q);

double distance_to_polyline(std::span<const Vec2> poly, Vec2 q);

struct Enclosure {
  bool encloses;
  /// Smallest signed distance of an inner vertex to the outer boundary,
  /// positive inside.
  double min_clearance;
};

/// Throws ValidationError unless both polylines are simple.
Enclosure encloses(std::span<const Vec2> outer, std::span<const Vec2> inner,
                   Exec exec = Exec::parallel);

/// Positive shoelace area. Throws ValidationError for non-simple input.
double region_area(std::span<const Vec2> poly);

/// Proper crossings between the two closed polylines whose crossing point is
/// farther than exclusion_radius from tangency_point.
int flipout_crossings(std::span<const Vec2> top_image, std::span<const Vec2> unfolding,
                      Vec2 tangency_point, double exclusion_radius,
                      Exec exec = Exec::parallel);

}  // namespace volcano
