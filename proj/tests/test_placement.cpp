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


#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "volcano/cli/scene.h"
#include "volcano/error.h"
#include "volcano/placement.h"

namespace volcano {
namespace {

constexpr double kPi = M_PI;
const double kSqrt125 = std::sqrt(1.25);

Prismatoid Preset(const std::string& name, double z) {
  return cli::build_prismatoid(cli::preset_scene(name)).with_height(z);
}

Prismatoid Concentric(double rb, double ra, double z) {
  return Prismatoid::make(CurveSpec::circle(rb), CurveSpec::circle(ra), z);
}

Prismatoid RotatedEllipseInCircle() {
  return Prismatoid::make(CurveSpec::circle(1.0), CurveSpec::ellipse(0.6, 0.3, kPi / 6), 0.0);
}

TEST(MaximizeR, ConcentricIsAllSafe) {
  const MaxResult m = maximize_R(Concentric(1.0, 0.5, 0.0));
  EXPECT_TRUE(m.all_safe);
  EXPECT_EQ(m.t_hat, 0.0);
  EXPECT_NEAR(m.R_max, 1.0, 1e-12);
  ASSERT_EQ(m.ties.size(), 1u);
  EXPECT_EQ(m.ties[0], 0.0);
}

TEST(MaximizeR, EnclosingTopIsAllSafe) {
  const MaxResult m = maximize_R(Preset("enclosing", 0.0));
  EXPECT_TRUE(m.all_safe);
  EXPECT_EQ(m.R_max, 0.0);
}

TEST(MaximizeR, SymmetricEllipseHasTwoTies) {
  const Prismatoid p = RotatedEllipseInCircle();
  const MaxResult m = maximize_R(p);
  EXPECT_FALSE(m.all_safe);
  ASSERT_EQ(m.ties.size(), 2u);
  EXPECT_NEAR(m.ties[1] - m.ties[0], kPi, 1e-6);
  // Brute force over a million directions: R = 2 (1 - h_E(n)) with h_E the
  // support function of the ellipse.
  const double c = std::cos(kPi / 6), s = std::sin(kPi / 6);
  double best = -1.0, best_t = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const double t = kTwoPi * i / 1000000;
    const double nx = c * std::cos(t) + s * std::sin(t), ny = -s * std::cos(t) + c * std::sin(t);
    const double r = 2.0 * (1.0 - std::hypot(0.6 * nx, 0.3 * ny));
    if (r > best) best = r, best_t = t;
  }
  EXPECT_NEAR(m.R_max, best, 1e-10);
  EXPECT_NEAR(std::remainder(m.ties[0] - best_t, kPi), 0.0, 1e-5);
  EXPECT_NEAR(m.ties[0], 2 * kPi / 3, 1e-6);
  EXPECT_NEAR(m.ties[1], 5 * kPi / 3, 1e-6);
  EXPECT_EQ(m.t_hat, m.ties[0]);
}

TEST(MaximizeR, DominatesScan) {
  for (const auto& name : cli::preset_names()) {
    for (double z : {0.0, 1.0}) {
      const Prismatoid p = Preset(name, z);
      const MaxResult m = maximize_R(p);
      for (double r : scan_rib_distance(p, 4096)) EXPECT_GE(m.R_max, r - 1e-9) << name;
      EXPECT_NEAR(rib_distance(p, m.t_hat).R, m.R_max, 1e-12) << name;
      EXPECT_NE(std::find(m.ties.begin(), m.ties.end(), m.t_hat), m.ties.end()) << name;
    }
  }
}

TEST(MaximizeR, ArgmaxStableUnderLifting) {
  for (const auto& name : cli::gallery_preset_names()) {
    const double flat = maximize_R(Preset(name, 0.0)).t_hat;
    for (double z : {0.25, 1.0, 4.0})
      EXPECT_NEAR(maximize_R(Preset(name, z)).t_hat, flat, 1e-6) << name << " z=" << z;
  }
}

TEST(MaximizeR, MaximumOnReflectedPortion) {
  for (const auto& name : cli::preset_names()) {
    for (double z : {0.0, 1.0}) {
      const Prismatoid p = Preset(name, z);
      if (find_bitangents(p).empty()) continue;
      EXPECT_EQ(rib_at(p, maximize_R(p).t_hat).kind, RibKind::reflected) << name;
    }
  }
}

TEST(Tangency, ConcentricCircles) {
  for (double z : {0.0, 1.0}) {
    for (double t : {0.0, 0.9, 3.1, 5.0}) {
      const TangencyResidual r = check_mutual_tangency(Concentric(1.0, 0.5, z), t);
      EXPECT_LT(r.residual, 1e-8);
      EXPECT_FALSE(r.degenerate);
    }
  }
}

TEST(Tangency, EnclosingTopFollowsTop) {
  // u = a0 everywhere, so U moves along the top and stays tangent to it.
  for (double t : {0.0, 1.0, 4.0}) {
    const TangencyResidual r = check_mutual_tangency(Preset("enclosing", 0.0), t);
    EXPECT_FALSE(r.degenerate);
    EXPECT_LT(r.residual, 1e-8);
  }
}

TEST(Tangency, AtArgmax) {
  for (const auto& name : cli::preset_names()) {
    for (double z : {0.0, 1.0}) {
      const Prismatoid p = Preset(name, z);
      EXPECT_LT(check_mutual_tangency(p, maximize_R(p).t_hat).residual, 1e-6) << name;
    }
  }
}

TEST(Tangency, DiscriminatesGenericParameters) {
  const Prismatoid p = Preset("rounded_square_in_mouse", 0.0);
  const double t_hat = maximize_R(p).t_hat;
  for (double dt : {0.4, 1.1, 2.0, 2.9}) {
    EXPECT_GT(check_mutual_tangency(p, t_hat + dt).residual, 1e-3) << dt;
  }
}

TEST(Tangency, VelocityMatchesFiniteDifferences) {
  const Prismatoid p = Preset("rounded_square_in_mouse", 0.7);
  for (double t : {0.3, 1.7, 4.2}) {
    const Vec2 fd = oracle::derivative5([&](double s) { return unfolded_tip(p, s); }, t, 1e-4);
    const Vec2 v = unfolding_velocity(p, t);
    EXPECT_NEAR(norm(v - fd), 0.0, 1e-7 * std::max(1.0, norm(fd)));
  }
}

TEST(Envelope, ConcentricCircles) {
  const Prismatoid flat = Concentric(1.0, 0.5, 0.0);
  const OffsetCurve o = offset_envelope(flat, 0.0);
  for (double t : {0.0, 2.0, 4.0}) EXPECT_NEAR(norm(o.eval(t)), 1.5, 1e-12);
  const Prismatoid cone = Concentric(1.0, 0.5, 1.0);
  const OffsetCurve oc = offset_envelope(cone, maximize_R(cone).t_hat);
  for (double t : {0.0, 2.0, 4.0}) EXPECT_NEAR(norm(oc.eval(t)), 1.0 + kSqrt125, 1e-9);
}

TEST(Envelope, TouchesAtArgmax) {
  for (const auto& name : cli::gallery_preset_names()) {
    const Prismatoid p = Preset(name, 1.0);
    const double t_hat = maximize_R(p).t_hat;
    const OffsetCurve o = offset_envelope(p, t_hat);
    const Vec2 touch = o.eval(correspond(p, t_hat));
    EXPECT_LT(distance(touch, unfolded_tip(p, t_hat)), 1e-9) << name;
  }
}

TEST(Hull, TruncatedCone) {
  const Prismatoid p = Concentric(1.0, 0.5, 1.0);
  const MaxResult m = maximize_R(p);
  EXPECT_TRUE(hull_membership(side_unfolding(p, 256, m.t_hat), m.t_hat));
}

TEST(Hull, ReflexPortionOfMouseFails) {
  const Prismatoid p = Preset("rounded_square_in_mouse", 0.0);
  // Minimum of R over the reflected ribs.
  double best = 1e300, t_min = 0.0;
  for (int i = 0; i < 8192; ++i) {
    const double t = kTwoPi * i / 8192;
    const RibSample r = rib_at(p, t);
    const double R = rib_distance(p, t).R;
    if (r.kind == RibKind::reflected && R < best) best = R, t_min = t;
  }
  EXPECT_FALSE(hull_membership(side_unfolding(p, 1024, t_min), t_min));
}

TEST(Hull, TrueAtArgmax) {
  for (const auto& name : cli::preset_names()) {
    for (double z : {0.0, 1.0}) {
      const Prismatoid p = Preset(name, z);
      const double t_hat = maximize_R(p).t_hat;
      EXPECT_TRUE(hull_membership(side_unfolding(p, 1024, t_hat), t_hat)) << name;
    }
  }
}

TEST(FlipOut, NestedCircles) {
  const Prismatoid p = Concentric(1.0, 0.5, 0.0);
  const FlipOutPlacement f = flip_out(p, 0.0, 256, true);
  EXPECT_NEAR(f.transform.det(), -1.0, 1e-12);
  const Vec2 center = f.transform.apply({0.0, 0.0});
  EXPECT_NEAR(center.x, 2.0, 1e-12);
  EXPECT_NEAR(center.y, 0.0, 1e-12);
  for (const Vec2& q : f.top_image) EXPECT_NEAR(distance(q, {2.0, 0.0}), 0.5, 1e-12);
  EXPECT_NEAR(f.top_image[0].x, 1.5, 1e-12);
  EXPECT_EQ(f.top_image.size(), 256u);
}

TEST(FlipOut, EnclosingTopReflectsInPlace) {
  const Prismatoid p = Preset("enclosing", 0.0);
  const FlipOutPlacement f = flip_out(p, 0.0, 256, true);
  const Vec2 a = p.top().eval(correspond(p, 0.0));
  EXPECT_LT(distance(f.transform.apply(a), a), 1e-12);
  EXPECT_NEAR(f.transform.det(), -1.0, 1e-12);
}

TEST(FlipOut, Invariants) {
  for (const auto& name : cli::preset_names()) {
    for (double z : {0.0, 1.0}) {
      const Prismatoid p = Preset(name, z);
      const MaxResult m = maximize_R(p);
      const FlipOutPlacement f = flip_out(p, m.t_hat, 512, m.all_safe);
      const double t_top = correspond(p, m.t_hat);
      const Vec2 u = unfolded_tip(p, m.t_hat);
      EXPECT_NEAR(f.transform.det(), -1.0, 1e-12) << name;
      EXPECT_LT(distance(f.transform.apply(p.top().eval(t_top)), u), 1e-9) << name;
      // Orthogonal linear part.
      const Vec2 e1 = f.transform.apply_linear({1, 0}), e2 = f.transform.apply_linear({0, 1});
      EXPECT_NEAR(norm(e1), 1.0, 1e-12);
      EXPECT_NEAR(dot(e1, e2), 0.0, 1e-12);
      const TangencyResidual tr = check_mutual_tangency(p, m.t_hat);
      if (!tr.degenerate) {
        const Vec2 img_t = normalized(f.transform.apply_linear(p.top().unit_tangent(t_top)));
        EXPECT_LT(std::abs(cross(img_t, normalized(unfolding_velocity(p, m.t_hat)))), 1e-6) << name;
        // A' sits on the far side of the tangent line from b.
        const Vec2 b = p.base().eval(m.t_hat);
        const Vec2 center = f.transform.apply(p.top().eval(t_top + M_PI));
        EXPECT_LT(cross(img_t, b - u) * cross(img_t, center - u), 0.0) << name;
      }
    }
  }
}

TEST(FlipOut, RefusesNonTangentPlacement) {
  const Prismatoid p = Preset("rounded_square_in_mouse", 0.0);
  const double t = maximize_R(p).t_hat + 1.0;
  EXPECT_THROW(flip_out(p, t), PlacementError);
  try {
    flip_out(p, t);
  } catch (const PlacementError& e) {
    EXPECT_GT(e.residual(), 1e-6);
  }
  EXPECT_NO_THROW(reflect_top_at(p, t));
}

}  // namespace
}  // namespace volcano
