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

#include "volcano/curve.h"
#include "volcano/exec.h"
#include "volcano/vec.h"

namespace volcano {

/// Convex hull of a top curve A at height z over a base curve B in z = 0.
/// The top is stored by its planar shape, so top().eval(t) is the projection
/// a0 of the 3D top point.
class Prismatoid {
 public:
  /// `base` must be arc-length parametrized; throws ValidationError otherwise
  /// or when height is negative or not finite.
  Prismatoid(ParamCurve base, ParamCurve top, double height);

  /// Builds both curves from specs and reparametrizes the base.
  static Prismatoid make(const CurveSpec& base, const CurveSpec& top, double height);

  const ParamCurve& base() const { return base_; }
  const ParamCurve& top() const { return top_; }
  double height() const { return height_; }
  bool flat() const { return height_ == 0.0; }

  /// Same curves at a different height.
  Prismatoid with_height(double height) const { return {base_, top_, height}; }

 private:
  ParamCurve base_;
  ParamCurve top_;
  double height_;
};

enum class RibKind { reflected, nonreflected, bitangent };

const char* to_string(RibKind kind);

/// |p| below this (length units) classifies a rib as a bi-tangent.
inline constexpr double kBitangentTol = 1e-9;

/// One hull rib from b(t) on the base to the top point over a0.
struct RibSample {
  double t = 0.0;
  double t_top = 0.0;  // top parameter with a parallel tangent
  Vec2 b;
  Vec2 tb;  // unit tangent of the base
  Vec2 n;   // outward unit normal of the base
  Vec2 a0;  // top point projected into the base plane
  double s = 0.0;  // (a0 - b) . tb
  double p = 0.0;  // (a0 - b) . n, negative on the inner side of the tangent
  double rib_len = 0.0;
  RibKind kind = RibKind::bitangent;
};

/// Top parameter whose tangent has the same direction as the base tangent at t.
double correspond(const Prismatoid& prism, double t);

RibSample rib_at(const Prismatoid& prism, double t);

/// Ribs at t = phase + 2pi k / n. Requires n >= 16.
std::vector<RibSample> sample_ribs(const Prismatoid& prism, int n, double phase = 0.0,
                                   Exec exec = Exec::parallel);

/// Roots of p(t) in [0, 2pi), ascending. When the curves coincide (p is zero
/// everywhere) every scan parameter is returned.
std::vector<double> find_bitangents(const Prismatoid& prism, int scan = 8192,
                                    Exec exec = Exec::parallel);

}  // namespace volcano
