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

#include "volcano/curve.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "volcano/error.h"

namespace volcano {

namespace {

constexpr int kConvexitySamples = 1024;
constexpr int kLiftSamples = 2048;
constexpr int kArcPanels = 512;
constexpr int kMaxPanelRefinements = 4;
constexpr double kClosureTol = 1e-12;

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGl8Nodes = {
    0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
    0.9602898564975363};
constexpr std::array<double, 4> kGl8Weights = {
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
    0.1012285362903763};
// 4-point rule, used only to certify the 8-point panel sums.
constexpr std::array<double, 2> kGl4Nodes = {0.3399810435848563,
                                             0.8611363115940526};
constexpr std::array<double, 2> kGl4Weights = {0.6521451548625461,
                                               0.3478548451374538};

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// Local-frame jet of the raw family parametrization.
Jet family_jet(const CurveSpec& spec, double t) {
  const double c = std::cos(t), s = std::sin(t);
  switch (spec.family) {
    case CurveFamily::circle: {
      const double r = spec.params[0];
      return {{r * c, r * s}, {-r * s, r * c}, {-r * c, -r * s}};
    }
    case CurveFamily::ellipse: {
      const double a = spec.params[0], b = spec.params[1];
      return {{a * c, b * s}, {-a * s, b * c}, {-a * c, -b * s}};
    }
    case CurveFamily::superellipse: {
      // Polar form r(t) = f(t)^(-1/n), f = (cos t / a)^n + (sin t / b)^n.
      const double a = spec.params[0], b = spec.params[1];
      const int n = static_cast<int>(spec.params[2]);
      const double ca = c / a, sb = s / b;
      const double ca_n2 = std::pow(ca, n - 2), sb_n2 = std::pow(sb, n - 2);
      const double ca_n1 = ca_n2 * ca, sb_n1 = sb_n2 * sb;
      const double ca_n = ca_n1 * ca, sb_n = sb_n1 * sb;
      const double f = ca_n + sb_n;
      const double df = n * (-ca_n1 * (s / a) + sb_n1 * (c / b));
      const double ddf = n * ((n - 1) * ca_n2 * (s / a) * (s / a) - ca_n +
                              (n - 1) * sb_n2 * (c / b) * (c / b) - sb_n);
      const double inv_n = 1.0 / n;
      const double r = std::pow(f, -inv_n);
      const double dr = -inv_n * r / f * df;
      const double ddr = -inv_n * ((-inv_n - 1.0) * r / (f * f) * df * df + r / f * ddf);
      const Vec2 radial{c, s}, tangential{-s, c};
      return {r * radial, dr * radial + r * tangential,
              ddr * radial + 2.0 * dr * tangential - r * radial};
    }
    case CurveFamily::fourier: {
      const FourierCoeffs& f = spec.fourier;
      Jet j;
      const std::size_t harmonics =
          std::max({f.x_cos.size(), f.x_sin.size(), f.y_cos.size(), f.y_sin.size()});
      auto coeff = [](const std::vector<double>& v, std::size_t k) {
        return k < v.size() ? v[k] : 0.0;
      };
      for (std::size_t k = 0; k < harmonics; ++k) {
        const double kd = static_cast<double>(k);
        const double ck = std::cos(kd * t), sk = std::sin(kd * t);
        const double xc = coeff(f.x_cos, k), xs = k ? coeff(f.x_sin, k) : 0.0;
        const double yc = coeff(f.y_cos, k), ys = k ? coeff(f.y_sin, k) : 0.0;
        j.p += Vec2{xc * ck + xs * sk, yc * ck + ys * sk};
        j.d1 += kd * Vec2{-xc * sk + xs * ck, -yc * sk + ys * ck};
        j.d2 += -kd * kd * Vec2{xc * ck + xs * sk, yc * ck + ys * sk};
      }
      return j;
    }
  }
  return {};
}

Jet spec_jet(const CurveSpec& spec, double t) {
  Jet j = family_jet(spec, t);
  if (spec.rotation != 0.0) {
    j.p = rotated(j.p, spec.rotation);
    j.d1 = rotated(j.d1, spec.rotation);
    j.d2 = rotated(j.d2, spec.rotation);
  }
  j.p += spec.translation;
  return j;
}

void validate_params(const CurveSpec& spec) {
  auto need = [&](std::size_t count, const char* what) {
    if (spec.params.size() != count)
      throw ValidationError(fmt::format("{} curve needs {} parameters ({}), got {}",
                                        to_string(spec.family), count, what,
                                        spec.params.size()));
  };
  if (!all_finite(spec.params) || !std::isfinite(spec.rotation) ||
      !std::isfinite(spec.translation.x) || !std::isfinite(spec.translation.y))
    throw ValidationError("curve parameters must be finite");
  switch (spec.family) {
    case CurveFamily::circle:
      need(1, "radius");
      if (!(spec.params[0] > 0.0)) throw ValidationError("circle radius must be > 0");
      break;
    case CurveFamily::ellipse:
      need(2, "semi-axes a, b");
      if (!(spec.params[0] > 0.0 && spec.params[1] > 0.0))
        throw ValidationError("ellipse semi-axes must be > 0");
      break;
    case CurveFamily::superellipse: {
      need(3, "a, b, exponent n");
      if (!(spec.params[0] > 0.0 && spec.params[1] > 0.0))
        throw ValidationError("superellipse semi-axes must be > 0");
      const double n = spec.params[2];
      if (n < 2.0 || n != std::floor(n) || std::fmod(n, 2.0) != 0.0 || n > 64.0)
        throw ValidationError("superellipse exponent must be an even integer >= 2");
      break;
    }
    case CurveFamily::fourier: {
      const FourierCoeffs& f = spec.fourier;
      if (!all_finite(f.x_cos) || !all_finite(f.x_sin) || !all_finite(f.y_cos) ||
          !all_finite(f.y_sin))
        throw ValidationError("fourier coefficients must be finite");
      if (f.x_cos.size() + f.x_sin.size() < 2 || f.y_cos.size() + f.y_sin.size() < 2)
        throw ValidationError("fourier curve needs at least one harmonic in x and y");
      break;
    }
  }
}

void validate_shape(const CurveSpec& spec) {
  const Jet j0 = spec_jet(spec, 0.0), j1 = spec_jet(spec, kTwoPi);
  const double scale = std::max(1.0, norm(j0.p));
  if (distance(j0.p, j1.p) > kClosureTol * scale)
    throw ValidationError("curve is not closed: position(0) != position(2pi)");

  double area2 = 0.0;
  double min_curvature = std::numeric_limits<double>::infinity();
  double max_abs_curvature = 0.0;
  for (int i = 0; i < kConvexitySamples; ++i) {
    const double t = kTwoPi * i / kConvexitySamples;
    const Jet j = spec_jet(spec, t);
    if (!std::isfinite(j.p.x) || !std::isfinite(j.p.y) || !std::isfinite(j.d1.x) ||
        !std::isfinite(j.d1.y) || !std::isfinite(j.d2.x) || !std::isfinite(j.d2.y))
      throw ValidationError(fmt::format("curve derivatives not finite at t={}", t));
    const double v = norm(j.d1);
    if (!(v > 0.0))
      throw ValidationError(fmt::format("curve is singular (zero speed) at t={}", t));
    const double k = cross(j.d1, j.d2) / (v * v * v);
    min_curvature = std::min(min_curvature, k);
    max_abs_curvature = std::max(max_abs_curvature, std::abs(k));
    area2 += cross(j.p, j.d1);
  }
  if (!(area2 > 0.0))
    throw ValidationError("curve must be counterclockwise (positive enclosed area)");
  // Superellipses with n >= 4 have isolated zero-curvature points at the axes.
  const bool weak_allowed =
      spec.family == CurveFamily::superellipse && spec.params[2] > 2.0;
  const bool ok = weak_allowed ? min_curvature >= -1e-9 * max_abs_curvature
                               : min_curvature > 0.0;
  if (!ok)
    throw ValidationError(fmt::format(
        "curve is not strictly convex: curvature {} <= 0 at a sample", min_curvature));
}

double gl8(const CurveSpec& spec, double lo, double hi) {
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < kGl8Nodes.size(); ++i) {
    sum += kGl8Weights[i] * (norm(spec_jet(spec, mid - half * kGl8Nodes[i]).d1) +
                             norm(spec_jet(spec, mid + half * kGl8Nodes[i]).d1));
  }
  return half * sum;
}

double gl4(const CurveSpec& spec, double lo, double hi) {
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < kGl4Nodes.size(); ++i) {
    sum += kGl4Weights[i] * (norm(spec_jet(spec, mid - half * kGl4Nodes[i]).d1) +
                             norm(spec_jet(spec, mid + half * kGl4Nodes[i]).d1));
  }
  return half * sum;
}

ArcLengthTable build_arc_table(const CurveSpec& spec) {
  for (int depth = 0; depth <= kMaxPanelRefinements; ++depth) {
    const int panels = kArcPanels << depth;
    ArcLengthTable table;
    table.knots.reserve(panels + 1);
    double cumulative = 0.0, coarse = 0.0;
    for (int k = 0; k <= panels; ++k) {
      const double param = kTwoPi * k / panels;
      table.knots.push_back({param, cumulative, norm(spec_jet(spec, param).d1)});
      if (k == panels) break;
      const double next = kTwoPi * (k + 1) / panels;
      cumulative += gl8(spec, param, next);
      coarse += gl4(spec, param, next);
    }
    table.total_length = cumulative;
    if (std::abs(cumulative - coarse) <= 1e-12 * cumulative) return table;
  }
  throw ConvergenceError("arc-length quadrature did not converge");
}

// Monotone cubic Hermite guess for the raw parameter at arc length s in a
// panel, with Fritsch-Carlson slope limiting.
double hermite_guess(const ArcLengthKnot& k0, const ArcLengthKnot& k1, double s) {
  const double ds = k1.length - k0.length;
  const double secant = (k1.param - k0.param) / ds;
  double m0 = 1.0 / k0.speed, m1 = 1.0 / k1.speed;
  m0 = std::min(m0, 3.0 * secant);
  m1 = std::min(m1, 3.0 * secant);
  const double h = (s - k0.length) / ds;
  const double h2 = h * h, h3 = h2 * h;
  return (2 * h3 - 3 * h2 + 1) * k0.param + (h3 - 2 * h2 + h) * ds * m0 +
         (-2 * h3 + 3 * h2) * k1.param + (h3 - h2) * ds * m1;
}

std::vector<double> build_lift(const auto& jet_of) {
  std::vector<double> lift(kLiftSamples + 1);
  double prev = 0.0;
  for (int i = 0; i <= kLiftSamples; ++i) {
    const Vec2 d = jet_of(kTwoPi * i / kLiftSamples).d1;
    double a = std::atan2(d.y, d.x);
    if (i > 0) a += kTwoPi * std::round((prev - a) / kTwoPi);
    lift[i] = a;
    prev = a;
  }
  // Closure: the tangent turns exactly once.
  lift[kLiftSamples] = lift[0] + kTwoPi;
  return lift;
}

}  // namespace

std::string_view to_string(CurveFamily family) {
  switch (family) {
    case CurveFamily::circle: return "circle";
    case CurveFamily::ellipse: return "ellipse";
    case CurveFamily::superellipse: return "superellipse";
    case CurveFamily::fourier: return "fourier";
  }
  return "unknown";
}

CurveFamily curve_family_from_string(std::string_view name) {
  for (CurveFamily f : {CurveFamily::circle, CurveFamily::ellipse,
                        CurveFamily::superellipse, CurveFamily::fourier}) {
    if (to_string(f) == name) return f;
  }
  throw ValidationError(fmt::format("unknown curve family '{}'", name));
}

CurveSpec CurveSpec::circle(double r, Vec2 center) {
  return {CurveFamily::circle, {r}, {}, 0.0, center};
}
CurveSpec CurveSpec::ellipse(double a, double b, double rotation, Vec2 center) {
  return {CurveFamily::ellipse, {a, b}, {}, rotation, center};
}
CurveSpec CurveSpec::superellipse(double a, double b, int n, double rotation,
                                  Vec2 center) {
  return {CurveFamily::superellipse, {a, b, static_cast<double>(n)}, {}, rotation, center};
}
CurveSpec CurveSpec::fourier_series(FourierCoeffs coeffs, double rotation, Vec2 center) {
  return {CurveFamily::fourier, {}, std::move(coeffs), rotation, center};
}

struct ParamCurve::Impl {
  CurveSpec spec;
  std::shared_ptr<const ArcLengthTable> table;
  std::vector<double> lift;

  double raw_param_at_length(double s) const {
    const auto& knots = table->knots;
    if (s <= 0.0) return 0.0;
    if (s >= table->total_length) return kTwoPi;
    auto it = std::upper_bound(knots.begin(), knots.end(), s,
                               [](double v, const ArcLengthKnot& k) { return v < k.length; });
    const std::size_t hi = std::clamp<std::size_t>(it - knots.begin(), 1, knots.size() - 1);
    const ArcLengthKnot& k0 = knots[hi - 1];
    const ArcLengthKnot& k1 = knots[hi];
    double lo_p = k0.param, hi_p = k1.param;
    double p = std::clamp(hermite_guess(k0, k1, s), lo_p, hi_p);
    const double tol = 1e-15 * table->total_length;
    for (int iter = 0; iter < 60; ++iter) {
      const double f = k0.length + gl8(spec, k0.param, p) - s;
      if (std::abs(f) <= tol) break;
      if (f > 0.0) hi_p = p; else lo_p = p;
      const double v = norm(spec_jet(spec, p).d1);
      double next = p - f / v;
      if (!(next > lo_p && next < hi_p)) next = 0.5 * (lo_p + hi_p);
      if (std::abs(next - p) <= 1e-17 * kTwoPi) break;
      p = next;
    }
    return p;
  }

  Jet jet(double t) const {
    const double tt = wrap_two_pi(t);
    if (!table) return spec_jet(spec, tt);
    const double c = table->total_length / kTwoPi;
    const double raw = raw_param_at_length(tt * c);
    const Jet j = spec_jet(spec, raw);
    const double v = norm(j.d1);
    const double dtau = c / v;
    const double ddtau = -c * dot(j.d1, j.d2) / (v * v * v) * dtau;
    return {j.p, j.d1 * dtau, j.d2 * (dtau * dtau) + j.d1 * ddtau};
  }
};

ParamCurve::ParamCurve(CurveSpec spec) {
  validate_params(spec);
  validate_shape(spec);
  auto impl = std::make_shared<Impl>();
  impl->spec = std::move(spec);
  impl->lift = build_lift([&](double t) { return spec_jet(impl->spec, t); });
  impl_ = std::move(impl);
}

ParamCurve::ParamCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const CurveSpec& ParamCurve::spec() const { return impl_->spec; }
bool ParamCurve::is_arc_length() const { return impl_->table != nullptr; }
const ArcLengthTable* ParamCurve::arc_length_table() const { return impl_->table.get(); }

Jet ParamCurve::jet(double t) const { return impl_->jet(t); }
Vec2 ParamCurve::eval(double t) const { return jet(t).p; }

Vec2 ParamCurve::derivative(double t, int order) const {
  if (order != 1 && order != 2)
    throw ValidationError("derivative order must be 1 or 2");
  const Jet j = jet(t);
  return order == 1 ? j.d1 : j.d2;
}

double ParamCurve::speed(double t) const { return norm(jet(t).d1); }

double ParamCurve::curvature(double t) const {
  const Jet j = jet(t);
  const double v = norm(j.d1);
  return cross(j.d1, j.d2) / (v * v * v);
}

Vec2 ParamCurve::unit_tangent(double t) const { return normalized(jet(t).d1); }
Vec2 ParamCurve::outward_normal(double t) const { return perp_right(unit_tangent(t)); }

double ParamCurve::tangent_angle(double t) const {
  const double turns = std::floor(t / kTwoPi);
  const double tt = wrap_two_pi(t);
  const auto& lift = impl_->lift;
  const double h = kTwoPi / kLiftSamples;
  const int k = std::min(static_cast<int>(tt / h), kLiftSamples - 1);
  const double w = (tt - k * h) / h;
  const double approx = lift[k] + w * (lift[k + 1] - lift[k]);
  const Vec2 d = jet(tt).d1;
  double a = std::atan2(d.y, d.x);
  a += kTwoPi * std::round((approx - a) / kTwoPi);
  return a + kTwoPi * turns;
}

double ParamCurve::invert_tangent_angle(double phi) const {
  const auto& lift = impl_->lift;
  const double target = lift[0] + wrap_two_pi(phi - lift[0]);
  auto it = std::upper_bound(lift.begin(), lift.end(), target);
  const int k = std::clamp(static_cast<int>(it - lift.begin()) - 1, 0, kLiftSamples - 1);
  const double h = kTwoPi / kLiftSamples;
  double lo = k * h, hi = (k + 1) * h;
  // The lift table is approximate between knots; widen until bracketed.
  auto f = [&](double t) {
    // Evaluate without the full-turn offset at t = 2pi.
    return t >= kTwoPi ? tangent_angle(t - kTwoPi) + kTwoPi - target
                       : tangent_angle(t) - target;
  };
  double flo = f(lo), fhi = f(hi);
  for (int widen = 0; (flo > 0.0 || fhi < 0.0) && widen < 8; ++widen) {
    if (flo > 0.0) { lo = std::max(0.0, lo - h); flo = f(lo); }
    if (fhi < 0.0) { hi = std::min(kTwoPi, hi + h); fhi = f(hi); }
  }
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double ft = f(t);
    if (std::abs(ft) <= 1e-14) break;
    if (ft > 0.0) hi = t; else lo = t;
    if (hi - lo <= 1e-15) break;
    const Jet j = jet(t);
    const double v = norm(j.d1);
    const double slope = cross(j.d1, j.d2) / (v * v);
    double next = slope > 0.0 ? t - ft / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  return wrap_two_pi(t);
}

double ParamCurve::enclosed_area() const {
  constexpr int n = 4096;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Jet j = jet(kTwoPi * i / n);
    sum += cross(j.p, j.d1);
  }
  return 0.5 * sum * kTwoPi / n;
}

std::pair<ParamCurve, ArcLengthTable> arc_length_reparam(const ParamCurve& curve) {
  auto impl = std::make_shared<ParamCurve::Impl>();
  impl->spec = curve.spec();
  impl->table = std::make_shared<const ArcLengthTable>(build_arc_table(impl->spec));
  impl->lift = build_lift([&](double t) { return impl->jet(t); });
  ArcLengthTable copy = *impl->table;
  return {ParamCurve(std::shared_ptr<const ParamCurve::Impl>(std::move(impl))),
          std::move(copy)};
}

OffsetCurve::OffsetCurve(ParamCurve source, double k) : source_(std::move(source)), k_(k) {
  if (!(k >= 0.0) || !std::isfinite(k))
    throw ValidationError("offset distance must be finite and >= 0");
}

Vec2 OffsetCurve::eval(double t) const {
  return source_.eval(t) + k_ * source_.outward_normal(t);
}

Vec2 OffsetCurve::derivative(double t) const {
  const Jet j = source_.jet(t);
  const double v = norm(j.d1);
  const double kappa = cross(j.d1, j.d2) / (v * v * v);
  return (1.0 + k_ * kappa) * j.d1;
}

double OffsetCurve::curvature(double t) const {
  const double kappa = source_.curvature(t);
  return kappa / (1.0 + k_ * kappa);
}

OffsetCurve offset(const ParamCurve& curve, double k) { return OffsetCurve(curve, k); }

std::vector<Vec2> sample_polyline(const ParamCurve& curve, int n, double phase) {
  std::vector<Vec2> out(n);
  for (int i = 0; i < n; ++i) out[i] = curve.eval(phase + kTwoPi * i / n);
  return out;
}

}  // namespace volcano
