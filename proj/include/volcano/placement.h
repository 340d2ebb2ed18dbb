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

#include <array>
#include <vector>

#include "volcano/curve.h"
#include "volcano/exec.h"
#include "volcano/prismatoid.h"
#include "volcano/unfold.h"

namespace volcano {

/// Global maximum of R(t) = |u(t) - a(t)|.
struct MaxResult {
  double t_hat = 0.0;
  double R_max = 0.0;
  /// Every refined maximum within relative 1e-9 of R_max, ascending.
  std::vector<double> ties;
  /// R is constant within tolerance, so every rib is an admissible attachment.
  bool all_safe = false;
};

/// Dense scan of `scan` samples, then golden-section refinement of each
/// candidate basin to 1e-12 in t.
MaxResult maximize_R(const Prismatoid& prism, int scan = 8192, Exec exec = Exec::parallel);

/// Centered difference of u(t) with step 2pi * 1e-6.
Vec2 unfolding_velocity(const Prismatoid& prism, double t);

struct TangencyResidual {
  double residual = 0.0;  // |cross| of the unit tangents of the top and U
  bool degenerate = false;  // |u'| < 1e-12: U is stationary at t
};

TangencyResidual check_mutual_tangency(const Prismatoid& prism, double t);

/// Offset of the projected top by |u(t_hat) - a0(t_hat)|.
OffsetCurve offset_envelope(const Prismatoid& prism, double t_hat);

/// True when the line through u(t_hat) along u'(t_hat) supports the sampled
/// U (all vertices within 1e-8 of one closed side).
bool hull_membership(const SideUnfolding& U, double t_hat);

/// x -> linear * x + translation.
struct Isometry {
  std::array<double, 4> linear{1.0, 0.0, 0.0, 1.0};  // row-major 2x2
  Vec2 translation;

  Vec2 apply(Vec2 p) const {
    return {linear[0] * p.x + linear[1] * p.y + translation.x,
            linear[2] * p.x + linear[3] * p.y + translation.y};
  }
  Vec2 apply_linear(Vec2 v) const {
    return {linear[0] * v.x + linear[1] * v.y, linear[2] * v.x + linear[3] * v.y};
  }
  double det() const { return linear[0] * linear[3] - linear[1] * linear[2]; }
};

struct FlipOutPlacement {
  double t_hat = 0.0;
  Isometry transform;  // orientation reversing
  /// Image of the top sampled at the corresponding parameters of
  /// t_hat + 2pi i / n, so top_image[0] lands on u(t_hat).
  std::vector<Vec2> top_image;
};

/// Mirrors the top across the line parallel to the base tangent midway
/// between a0(t) and u(t). No tangency check; used for negative controls.
FlipOutPlacement reflect_top_at(const Prismatoid& prism, double t, int n = 1024);

/// Refuses with PlacementError when the tangency residual at t_hat is >= 1e-6,
/// unless `all_safe`.
FlipOutPlacement flip_out(const Prismatoid& prism, double t_hat, int n = 1024,
                          bool all_safe = false);

}  // namespace volcano
