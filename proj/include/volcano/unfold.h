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

#include <vector>

#include "volcano/exec.h"
#include "volcano/predicates.h"
#include "volcano/prismatoid.h"
#include "volcano/vec.h"

namespace volcano {

struct UnfoldedRib {
  RibSample rib;
  Vec2 u;   // unfolded tip
  Vec2 u0;  // tip of the flat unfolding of the projected rib
  double R = 0.0;       // |u - a| with a the 3D top point
  double R0proj = 0.0;  // |u - a0|
};

/// Closed side unfolding U, sampled at t = phase + 2pi k / N.
struct SideUnfolding {
  Prismatoid prism;
  double phase = 0.0;
  std::vector<UnfoldedRib> samples;
  bool closed = true;

  std::vector<Vec2> polyline() const;
  std::vector<Segment> rib_segments() const;
};

/// Reflection of a0 across the base tangent line for reflected ribs; a0
/// itself otherwise.
Vec2 unfold_rib_flat(const RibSample& rib);

/// Rotates the rib about the base tangent line into the base plane, on the
/// outward side: u = b + s tb + sqrt(p^2 + z^2) n.
UnfoldedRib unfold_rib(const RibSample& rib, double z);

/// Tip u(t) of the unfolded rib at an arbitrary parameter.
Vec2 unfolded_tip(const Prismatoid& prism, double t);

/// Samples U without checking simplicity. Requires n >= 64.
SideUnfolding sample_unfolding(const Prismatoid& prism, int n, double phase = 0.0,
                               Exec exec = Exec::parallel);

/// Requires n >= 64. Throws ResolutionError when the sampled tip polyline
/// crosses itself.
SideUnfolding side_unfolding(const Prismatoid& prism, int n, double phase = 0.0,
                             Exec exec = Exec::parallel);

struct RibDistance {
  double R;
  double R0proj;
};

RibDistance rib_distance(const Prismatoid& prism, double t);

/// R(t) = |u(t) - a(t)| on a uniform grid of n parameters starting at 0.
std::vector<double> scan_rib_distance(const Prismatoid& prism, int n,
                                      Exec exec = Exec::parallel);

}  // namespace volcano
