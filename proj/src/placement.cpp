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

#include "volcano/placement.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "volcano/error.h"

namespace volcano {

namespace {

constexpr double kTieRel = 1e-9;
constexpr double kSafeRel = 1e-9;
constexpr double kTangencyLimit = 1e-6;
constexpr int kMaxBasins = 64;

double golden_max(const auto& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

MaxResult maximize_R(const Prismatoid& prism, int scan, Exec exec) {
  const std::vector<double> R = scan_rib_distance(prism, scan, exec);
  const auto [min_it, max_it] = std::minmax_element(R.begin(), R.end());
  const double lo = *min_it, hi = *max_it;

  MaxResult out;
  if (hi - lo < kSafeRel * std::max(1.0, hi)) {
    out.all_safe = true;
    out.t_hat = 0.0;
    out.R_max = hi;
    out.ties = {0.0};
    return out;
  }

  // Discrete local maxima (cyclic), strongest first.
  const double h = kTwoPi / scan;
  std::vector<int> basins;
  for (int i = 0; i < scan; ++i) {
    const double prev = R[(i + scan - 1) % scan], next = R[(i + 1) % scan];
    const bool peak = R[i] > prev && R[i] >= next;
    if ((peak && R[i] >= hi - 0.05 * (hi - lo)) || i == max_it - R.begin()) basins.push_back(i);
  }
  std::stable_sort(basins.begin(), basins.end(), [&](int a, int b) { return R[a] > R[b]; });
  if (basins.size() > kMaxBasins) basins.resize(kMaxBasins);

  auto f = [&](double t) { return rib_distance(prism, t).R; };
  std::vector<std::pair<double, double>> refined;  // (t, R)
  for (int i : basins) {
    const double t = wrap_two_pi(golden_max(f, (i - 1) * h, (i + 1) * h));
    refined.emplace_back(t, f(t));
  }
  double best = hi;
  for (auto& [t, v] : refined) best = std::max(best, v);

  std::vector<double> ties;
  for (auto& [t, v] : refined) {
    if (v < (1.0 - kTieRel) * best) continue;
    const bool duplicate = std::any_of(ties.begin(), ties.end(), [&](double s) {
      const double d = std::abs(s - t);
      return std::min(d, kTwoPi - d) < 1e-6;
    });
    if (!duplicate) ties.push_back(t);
  }
  std::sort(ties.begin(), ties.end());
  out.ties = ties;
  out.t_hat = ties.front();
  out.R_max = best;
  return out;
}

Vec2 unfolding_velocity(const Prismatoid& prism, double t) {
  const double h = kTwoPi * 1e-6;
  return (unfolded_tip(prism, t + h) - unfolded_tip(prism, t - h)) / (2.0 * h);
}

TangencyResidual check_mutual_tangency(const Prismatoid& prism, double t) {
  const Vec2 du = unfolding_velocity(prism, t);
  if (norm(du) < 1e-12) return {0.0, true};
  const Vec2 ta = prism.top().unit_tangent(correspond(prism, t));
  return {std::abs(cross(ta, normalized(du))), false};
}

OffsetCurve offset_envelope(const Prismatoid& prism, double t_hat) {
  return {prism.top(), rib_distance(prism, t_hat).R0proj};
}

bool hull_membership(const SideUnfolding& U, double t_hat) {
  const Vec2 origin = unfolded_tip(U.prism, t_hat);
  const Vec2 dir = normalized(unfolding_velocity(U.prism, t_hat));
  double lo = 0.0, hi = 0.0;
  for (const UnfoldedRib& r : U.samples) {
    const double side = cross(dir, r.u - origin);
    lo = std::min(lo, side);
    hi = std::max(hi, side);
  }
  return lo >= -1e-8 || hi <= 1e-8;
}

FlipOutPlacement reflect_top_at(const Prismatoid& prism, double t, int n) {
  const UnfoldedRib rib = unfold_rib(rib_at(prism, t), prism.height());
  const Vec2 d = rib.rib.tb;
  const Vec2 mid = 0.5 * (rib.rib.a0 + rib.u);

  FlipOutPlacement out;
  out.t_hat = t;
  // Reflection across the line through `mid` with direction d.
  out.transform.linear = {2 * d.x * d.x - 1, 2 * d.x * d.y, 2 * d.x * d.y, 2 * d.y * d.y - 1};
  out.transform.translation = mid - out.transform.apply_linear(mid);
  out.top_image.resize(n);
  for (int i = 0; i < n; ++i) {
    const double ti = t + kTwoPi * i / n;
    out.top_image[i] = out.transform.apply(prism.top().eval(correspond(prism, ti)));
  }
  return out;
}

FlipOutPlacement flip_out(const Prismatoid& prism, double t_hat, int n, bool all_safe) {
  if (!all_safe) {
    const TangencyResidual tr = check_mutual_tangency(prism, t_hat);
    if (tr.residual >= kTangencyLimit)
      throw PlacementError(
          fmt::format("no mutual tangency at t={} (residual {:.3e}); the flipped-out "
                      "top would overlap the unfolding",
                      t_hat, tr.residual),
          tr.residual);
  }
  return reflect_top_at(prism, t_hat, n);
}

}  // namespace volcano
