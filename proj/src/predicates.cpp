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

#include "volcano/predicates.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "volcano/error.h"

namespace volcano {

namespace {

constexpr double kOrientEps = 1e-12;

struct Box {
  double xmin, xmax, ymin, ymax;
};

Box box_of(const Segment& s) {
  return {std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y),
          std::max(s.a.y, s.b.y)};
}

bool boxes_overlap(const Box& p, const Box& q) {
  return p.xmin <= q.xmax && q.xmin <= p.xmax && p.ymin <= q.ymax && q.ymin <= p.ymax;
}

int orient_sign(Vec2 a, Vec2 b, Vec2 c, double scale) {
  const double o = orient(a, b, c, scale);
  return o > kOrientEps ? 1 : o < -kOrientEps ? -1 : 0;
}

// Adjacent edges of a closed polyline with n edges share a vertex.
bool adjacent(int i, int j, int n) {
  const int d = std::abs(i - j);
  return d <= 1 || d == n - 1;
}

// Sweep over segments sorted by xmin. `reject(i, j)` filters pairs before the
// predicate; found pairs are normalized by `key`.
template <typename Reject, typename Key>
std::vector<IndexPair> sweep_pairs(std::span<const Segment> segs, double scale, Exec exec,
                                   Reject reject, Key key) {
  const int n = static_cast<int>(segs.size());
  std::vector<Box> boxes(n);
  for (int i = 0; i < n; ++i) boxes[i] = box_of(segs[i]);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return boxes[a].xmin < boxes[b].xmin || (boxes[a].xmin == boxes[b].xmin && a < b);
  });

  std::vector<IndexPair> found;
#pragma omp parallel if (exec == Exec::parallel)
  {
    std::vector<IndexPair> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (int oi = 0; oi < n; ++oi) {
      const int i = order[oi];
      for (int oj = oi + 1; oj < n && boxes[order[oj]].xmin <= boxes[i].xmax; ++oj) {
        const int j = order[oj];
        if (reject(i, j) || !boxes_overlap(boxes[i], boxes[j])) continue;
        if (segments_properly_cross(segs[i], segs[j], scale)) local.push_back(key(i, j));
      }
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Reference: every pair, bounding-box prefilter only.
template <typename Reject, typename Key>
std::vector<IndexPair> brute_pairs(std::span<const Segment> segs, double scale,
                                   Reject reject, Key key) {
  const int n = static_cast<int>(segs.size());
  std::vector<IndexPair> found;
  for (int i = 0; i < n; ++i) {
    const Box bi = box_of(segs[i]);
    for (int j = i + 1; j < n; ++j) {
      if (reject(i, j) || !boxes_overlap(bi, box_of(segs[j]))) continue;
      if (segments_properly_cross(segs[i], segs[j], scale)) found.push_back(key(i, j));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

template <typename Reject, typename Key>
std::vector<IndexPair> find_pairs(std::span<const Segment> segs, double scale, Exec exec,
                                  Reject reject, Key key) {
  return exec == Exec::serial ? brute_pairs(segs, scale, reject, key)
                              : sweep_pairs(segs, scale, exec, reject, key);
}

std::vector<Vec2> endpoints(std::span<const Segment> segs) {
  std::vector<Vec2> pts;
  pts.reserve(2 * segs.size());
  for (const Segment& s : segs) {
    pts.push_back(s.a);
    pts.push_back(s.b);
  }
  return pts;
}

double segment_distance(Vec2 a, Vec2 b, Vec2 q) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double w = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
  w = std::clamp(w, 0.0, 1.0);
  return distance(q, a + w * ab);
}

}  // namespace

double orient(Vec2 a, Vec2 b, Vec2 c, double scale) {
  return cross((b - a) / scale, (c - a) / scale);
}

bool segments_properly_cross(const Segment& s, const Segment& t, double scale) {
  const int o1 = orient_sign(s.a, s.b, t.a, scale);
  const int o2 = orient_sign(s.a, s.b, t.b, scale);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  const int o3 = orient_sign(t.a, t.b, s.a, scale);
  const int o4 = orient_sign(t.a, t.b, s.b, scale);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

Vec2 crossing_point(const Segment& s, const Segment& t) {
  const Vec2 r = s.b - s.a, q = t.b - t.a;
  const double w = cross(t.a - s.a, q) / cross(r, q);
  return s.a + w * r;
}

double diameter(std::span<const Vec2> points, Exec exec) {
  const int n = static_cast<int>(points.size());
  double best = 0.0;
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::max(best, distance(points[i], points[j]));
  return best;
}

double extent(std::span<const Vec2> points) {
  if (points.empty()) return 1.0;
  double xmin = points[0].x, xmax = xmin, ymin = points[0].y, ymax = ymin;
  for (Vec2 p : points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::max(1e-300, std::hypot(xmax - xmin, ymax - ymin));
}

std::vector<Segment> closed_segments(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  std::vector<Segment> segs(n);
  for (std::size_t i = 0; i < n; ++i) segs[i] = {poly[i], poly[(i + 1) % n]};
  return segs;
}

std::vector<IndexPair> polyline_self_intersect(std::span<const Vec2> poly, Exec exec) {
  const int n = static_cast<int>(poly.size());
  if (n < 4) throw ValidationError("polyline_self_intersect needs >= 4 vertices");
  const std::vector<Segment> segs = closed_segments(poly);
  return find_pairs(
      segs, extent(poly), exec, [n](int i, int j) { return adjacent(i, j, n); },
      [](int i, int j) { return IndexPair{std::min(i, j), std::max(i, j)}; });
}

std::vector<IndexPair> crossings_between(std::span<const Segment> a,
                                         std::span<const Segment> b, double scale,
                                         Exec exec) {
  std::vector<Segment> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const int na = static_cast<int>(a.size());
  return find_pairs(
      all, scale, exec, [na](int i, int j) { return (i < na) == (j < na); },
      [na](int i, int j) {
        return i < na ? IndexPair{i, j - na} : IndexPair{j, i - na};
      });
}

bool ribs_pairwise_disjoint(std::span<const Segment> ribs, Exec exec) {
  const double scale = extent(endpoints(ribs));
  return find_pairs(
             ribs, scale, exec, [](int, int) { return false; },
             [](int i, int j) { return IndexPair{std::min(i, j), std::max(i, j)}; })
      .empty();
}

int winding_number(std::span<const Vec2> poly, Vec2 q) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[(i + 1) % n];
    const double side = cross(b - a, q - a);
    if (a.y <= q.y) {
      if (b.y > q.y && side > 0.0) ++wn;
    } else if (b.y <= q.y && side < 0.0) {
      --wn;
    }
  }
  return wn;
}

double distance_to_polyline(std::span<const Vec2> poly, Vec2 q) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    best = std::min(best, segment_distance(poly[i], poly[(i + 1) % n], q));
  return best;
}

Enclosure encloses(std::span<const Vec2> outer, std::span<const Vec2> inner, Exec exec) {
  if (!polyline_self_intersect(outer, exec).empty())
    throw ValidationError("encloses: outer polyline is not simple");
  if (!polyline_self_intersect(inner, exec).empty())
    throw ValidationError("encloses: inner polyline is not simple");
  const int m = static_cast<int>(inner.size());
  std::vector<double> clearance(m);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < m; ++i) {
    const double d = distance_to_polyline(outer, inner[i]);
    clearance[i] = winding_number(outer, inner[i]) != 0 ? d : -d;
  }
  const double min_clearance = *std::min_element(clearance.begin(), clearance.end());
  return {min_clearance >= 0.0, min_clearance};
}

double region_area(std::span<const Vec2> poly) {
  if (!polyline_self_intersect(poly).empty())
    throw ValidationError("region_area: polyline is not simple");
  double sum = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) sum += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * std::abs(sum);
}

int flipout_crossings(std::span<const Vec2> top_image, std::span<const Vec2> unfolding,
                      Vec2 tangency_point, double exclusion_radius, Exec exec) {
  const std::vector<Segment> a = closed_segments(top_image);
  const std::vector<Segment> b = closed_segments(unfolding);
  std::vector<Vec2> pts(top_image.begin(), top_image.end());
  pts.insert(pts.end(), unfolding.begin(), unfolding.end());
  int count = 0;
  for (auto [i, j] : crossings_between(a, b, extent(pts), exec)) {
    if (distance(crossing_point(a[i], b[j]), tangency_point) > exclusion_radius) ++count;
  }
  return count;
}

}  // namespace volcano
