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

#include "volcano/prismatoid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "volcano/error.h"

namespace volcano {

Prismatoid::Prismatoid(ParamCurve base, ParamCurve top, double height)
    : base_(std::move(base)), top_(std::move(top)), height_(height) {
  if (!base_.is_arc_length())
    throw ValidationError("prismatoid base must be arc-length parametrized");
  if (!(height_ >= 0.0) || !std::isfinite(height_))
    throw ValidationError("prismatoid height must be finite and >= 0");
}

Prismatoid Prismatoid::make(const CurveSpec& base, const CurveSpec& top, double height) {
  return {arc_length_reparam(ParamCurve(base)).first, ParamCurve(top), height};
}

const char* to_string(RibKind kind) {
  switch (kind) {
    case RibKind::reflected: return "reflected";
    case RibKind::nonreflected: return "nonreflected";
    case RibKind::bitangent: return "bitangent";
  }
  return "unknown";
}

double correspond(const Prismatoid& prism, double t) {
  return prism.top().invert_tangent_angle(prism.base().tangent_angle(t));
}

RibSample rib_at(const Prismatoid& prism, double t) {
  RibSample r;
  r.t = t;
  r.t_top = correspond(prism, t);
  const Jet jb = prism.base().jet(t);
  r.b = jb.p;
  r.tb = normalized(jb.d1);
  r.n = perp_right(r.tb);
  r.a0 = prism.top().eval(r.t_top);
  const Vec2 d = r.a0 - r.b;
  r.s = dot(d, r.tb);
  r.p = dot(d, r.n);
  const double z = prism.height();
  r.rib_len = std::sqrt(r.s * r.s + r.p * r.p + z * z);
  r.kind = r.p < -kBitangentTol  ? RibKind::reflected
           : r.p > kBitangentTol ? RibKind::nonreflected
                                 : RibKind::bitangent;
  return r;
}

std::vector<RibSample> sample_ribs(const Prismatoid& prism, int n, double phase, Exec exec) {
  if (n < 16) throw ValidationError("sample_ribs needs n >= 16");
  std::vector<RibSample> out(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i) out[i] = rib_at(prism, phase + kTwoPi * i / n);
  return out;
}

std::vector<double> find_bitangents(const Prismatoid& prism, int scan, Exec exec) {
  const std::vector<RibSample> ribs = sample_ribs(prism, scan, 0.0, exec);
  auto sign_of = [](double p) { return p < -kBitangentTol ? -1 : p > kBitangentTol ? 1 : 0; };

  std::vector<int> nonzero;
  for (int i = 0; i < scan; ++i)
    if (sign_of(ribs[i].p) != 0) nonzero.push_back(i);
  std::vector<double> roots;
  if (nonzero.empty()) {
    for (const RibSample& r : ribs) roots.push_back(r.t);
    return roots;
  }

  auto p_at = [&](double t) { return rib_at(prism, t).p; };
  const std::size_t m = nonzero.size();
  for (std::size_t k = 0; k < m; ++k) {
    const int i = nonzero[k];
    const int j = nonzero[(k + 1) % m];
    const int si = sign_of(ribs[i].p);
    if (si == sign_of(ribs[j].p)) continue;
    double lo = ribs[i].t;
    double hi = j > i ? ribs[j].t : ribs[j].t + kTwoPi;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double pm = p_at(mid);
      if (pm == 0.0) { lo = hi = mid; break; }
      ((pm < 0.0) == (si < 0) ? lo : hi) = mid;
    }
    roots.push_back(wrap_two_pi(0.5 * (lo + hi)));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace volcano
