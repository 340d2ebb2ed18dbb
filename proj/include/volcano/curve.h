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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "volcano/vec.h"

namespace volcano {

enum class CurveFamily { circle, ellipse, superellipse, fourier };

std::string_view to_string(CurveFamily family);
/// Throws ValidationError for an unknown name.
CurveFamily curve_family_from_string(std::string_view name);

/// Trigonometric series x(t) = sum_k x_cos[k] cos(kt) + x_sin[k] sin(kt),
/// likewise for y. Index k is the harmonic number; index 0 of the sine lists
/// is ignored.
struct FourierCoeffs {
  std::vector<double> x_cos, x_sin, y_cos, y_sin;
  friend bool operator==(const FourierCoeffs&, const FourierCoeffs&) = default;
};

/// Description of a closed convex planar curve. The shape is built in a local
/// frame, rotated by `rotation` radians and then translated.
struct CurveSpec {
  CurveFamily family = CurveFamily::circle;
  /// circle: {r}; ellipse: {a, b}; superellipse: {a, b, n}; unused by fourier.
  std::vector<double> params;
  FourierCoeffs fourier;
  double rotation = 0.0;
  Vec2 translation;

  static CurveSpec circle(double r, Vec2 center = {});
  static CurveSpec ellipse(double a, double b, double rotation = 0.0,
                           Vec2 center = {});
  static CurveSpec superellipse(double a, double b, int n, double rotation = 0.0,
                                Vec2 center = {});
  static CurveSpec fourier_series(FourierCoeffs coeffs, double rotation = 0.0,
                                  Vec2 center = {});

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Position with first and second parameter derivatives.
struct Jet {
  Vec2 p, d1, d2;
};

struct ArcLengthKnot {
  double param;   // raw parameter
  double length;  // cumulative arc length from raw parameter 0
  double speed;   // |d/dparam| at the knot
};

/// Cumulative arc length of a raw parametrization on uniform panels.
struct ArcLengthTable {
  std::vector<ArcLengthKnot> knots;
  double total_length = 0.0;
};

/// A closed, strictly convex, counterclockwise C2 curve with period 2pi.
///
/// Values are cheap to copy; all state is immutable and shared.
class ParamCurve {
 public:
  /// Validates the spec (parameters, closure, orientation, convexity) and
  /// throws ValidationError naming the failed invariant.
  explicit ParamCurve(CurveSpec spec);

  const CurveSpec& spec() const;
  /// True for curves produced by arc_length_reparam.
  bool is_arc_length() const;
  /// Present only for arc-length curves.
  const ArcLengthTable* arc_length_table() const;

  Jet jet(double t) const;
  Vec2 eval(double t) const;
  /// order must be 1 or 2.
  Vec2 derivative(double t, int order) const;
  double speed(double t) const;
  /// Signed curvature, positive for counterclockwise convex curves.
  double curvature(double t) const;
  Vec2 unit_tangent(double t) const;
  Vec2 outward_normal(double t) const;

  /// Tangent direction angle, lifted continuously over the real line so that
  /// tangent_angle(t + 2pi) = tangent_angle(t) + 2pi.
  double tangent_angle(double t) const;
  /// Unique t in [0, 2pi) with tangent_angle(t) = phi (mod 2pi).
  double invert_tangent_angle(double phi) const;

  /// Signed area enclosed by the curve, from dense trapezoid quadrature.
  double enclosed_area() const;

 private:
  struct Impl;
  explicit ParamCurve(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend std::pair<ParamCurve, ArcLengthTable> arc_length_reparam(
      const ParamCurve& curve);
};

/// Constant-speed reparametrization (speed = total_length / 2pi).
/// Throws ConvergenceError if the panel quadrature cannot be certified.
std::pair<ParamCurve, ArcLengthTable> arc_length_reparam(const ParamCurve& curve);

/// Parallel curve o(t) = a(t) + k n(t) at outward distance k >= 0.
class OffsetCurve {
 public:
  OffsetCurve(ParamCurve source, double k);

  const ParamCurve& source() const { return source_; }
  double offset() const { return k_; }

  Vec2 eval(double t) const;
  /// (1 + k kappa) a'(t): the normal of the source is normal to the offset.
  Vec2 derivative(double t) const;
  Vec2 outward_normal(double t) const { return source_.outward_normal(t); }
  double curvature(double t) const;

 private:
  ParamCurve source_;
  double k_;
};

OffsetCurve offset(const ParamCurve& curve, double k);

/// Uniform samples of a curve at t = phase + 2pi i / n.
std::vector<Vec2> sample_polyline(const ParamCurve& curve, int n, double phase = 0.0);

}  // namespace volcano
