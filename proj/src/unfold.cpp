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

#include "volcano/unfold.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "volcano/error.h"

namespace volcano {

namespace {

// |u - a0| = sqrt(p^2 + z^2) - p, written without cancellation for p > 0.
double lift_gap(double p, double z) {
  const double h = std::hypot(p, z);
  return p > 0.0 ? z * z / (h + p) : h - p;
}

}  // namespace

Vec2 unfold_rib_flat(const RibSample& rib) {
  if (rib.kind != RibKind::reflected) return rib.a0;
  return rib.b + rib.s * rib.tb - rib.p * rib.n;
}

UnfoldedRib unfold_rib(const RibSample& rib, double z) {
  if (!(z >= 0.0)) throw ValidationError("unfold_rib needs z >= 0");
  UnfoldedRib out;
  out.rib = rib;
  out.u0 = unfold_rib_flat(rib);
  const double gap = lift_gap(rib.p, z);
  out.u = rib.a0 + gap * rib.n;
  out.R0proj = gap;
  out.R = std::hypot(gap, z);
  return out;
}

Vec2 unfolded_tip(const Prismatoid& prism, double t) {
  return unfold_rib(rib_at(prism, t), prism.height()).u;
}

RibDistance rib_distance(const Prismatoid& prism, double t) {
  const UnfoldedRib r = unfold_rib(rib_at(prism, t), prism.height());
  return {r.R, r.R0proj};
}

std::vector<double> scan_rib_distance(const Prismatoid& prism, int n, Exec exec) {
  std::vector<double> out(n);
  const double z = prism.height();
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i)
    out[i] = unfold_rib(rib_at(prism, kTwoPi * i / n), z).R;
  return out;
}

std::vector<Vec2> SideUnfolding::polyline() const {
  std::vector<Vec2> out;
  out.reserve(samples.size());
  for (const UnfoldedRib& r : samples) out.push_back(r.u);
  return out;
}

std::vector<Segment> SideUnfolding::rib_segments() const {
  std::vector<Segment> out;
  out.reserve(samples.size());
  for (const UnfoldedRib& r : samples) out.push_back({r.rib.b, r.u});
  return out;
}

SideUnfolding sample_unfolding(const Prismatoid& prism, int n, double phase, Exec exec) {
  if (n < 64) throw ValidationError("side unfolding needs n >= 64");
  SideUnfolding out{prism, phase, {}, true};
  const std::vector<RibSample> ribs = sample_ribs(prism, n, phase, exec);
  out.samples.resize(n);
  const double z = prism.height();
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i) out.samples[i] = unfold_rib(ribs[i], z);
  return out;
}

SideUnfolding side_unfolding(const Prismatoid& prism, int n, double phase, Exec exec) {
  SideUnfolding out = sample_unfolding(prism, n, phase, exec);

  const auto crossings = polyline_self_intersect(out.polyline(), exec);
  if (!crossings.empty()) {
    std::vector<std::pair<double, double>> params;
    for (auto [i, j] : crossings) params.emplace_back(out.samples[i].rib.t, out.samples[j].rib.t);
    throw ResolutionError(
        fmt::format("side unfolding self-intersects at {} segment pairs (n={}); "
                    "increase the sample count",
                    crossings.size(), n),
        std::move(params));
  }
  return out;
}

}  // namespace volcano
