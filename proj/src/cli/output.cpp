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

#include "volcano/cli/output.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"
#include "volcano/error.h"
#include "volcano/placement.h"

namespace volcano::cli {

namespace {

using nlohmann::json;

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;

  void add(Vec2 p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
};

std::string path_data(const std::vector<Vec2>& pts, bool closed) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i)
    d += fmt::format("{}{:.6f} {:.6f}", i == 0 ? "M" : " L", pts[i].x, pts[i].y);
  if (closed) d += " Z";
  return d;
}

}  // namespace

std::string report_json(const Scene& scene, const OverlapReport& report, double timing_ms) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["scene"] = json::parse(print_scene(scene));
  doc["t_hat"] = report.max.t_hat;
  doc["ties"] = report.max.ties;
  doc["R_max"] = report.max.R_max;
  doc["all_safe"] = report.max.all_safe;
  doc["tangency_residual"] = report.tangency_residual;
  doc["verdict"] = std::string(to_string(report.verdict));
  doc["checks"] = {{"u_simple", report.u_simple},
                   {"ribs_disjoint", report.ribs_disjoint},
                   {"envelope_encloses", report.envelope_encloses},
                   {"hull_ok", report.hull_ok},
                   {"flipout_crossings", report.flipout_crossings},
                   {"placement_refused", report.placement_refused}};
  doc["certificate"] = {{"min_clearance", report.min_clearance + 0.0},  // no -0
                        {"touch_distance", report.touch_distance},
                        {"exclusion_radius", report.exclusion_radius}};
  doc["samples_used"] = report.samples;
  doc["timing_ms"] = timing_ms;
  return doc.dump(2) + "\n";
}

std::string render_svg(const Scene& scene, const RenderOptions& options) {
  const Prismatoid prism = build_prismatoid(scene);
  const int n = scene.samples;
  const MaxResult max = maximize_R(prism);
  const SideUnfolding U = sample_unfolding(prism, n, max.t_hat);

  const std::vector<Vec2> base = sample_polyline(prism.base(), n);
  std::vector<Vec2> top(n), envelope;
  for (int i = 0; i < n; ++i) top[i] = prism.top().eval(U.samples[i].rib.t_top);
  const std::vector<Vec2> unfolding = U.polyline();
  if (options.show_offset) {
    const OffsetCurve env = offset_envelope(prism, max.t_hat);
    for (int i = 0; i < n; ++i) envelope.push_back(env.eval(U.samples[i].rib.t_top));
  }
  std::vector<Vec2> flipped;
  if (options.show_flipout) flipped = reflect_top_at(prism, max.t_hat, n).top_image;

  Bounds box;
  for (const std::vector<Vec2>* pts :
       std::initializer_list<const std::vector<Vec2>*>{&base, &top, &unfolding, &envelope, &flipped})
    for (Vec2 p : *pts) box.add(p);
  const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double margin = 0.05 * span;
  const double stroke = 0.004 * span;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6f} {:.6f} {:.6f} {:.6f}\" "
      "width=\"800\" height=\"{:.0f}\">\n",
      box.xmin - margin, -(box.ymax + margin), box.xmax - box.xmin + 2 * margin,
      box.ymax - box.ymin + 2 * margin,
      800.0 * (box.ymax - box.ymin + 2 * margin) / (box.xmax - box.xmin + 2 * margin));
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";
  if (options.show_ribs > 0) {
    svg += fmt::format("<g id=\"ribs\" stroke=\"#9a9a9a\" stroke-width=\"{:.6f}\">\n", 0.5 * stroke);
    const int count = std::min(options.show_ribs, n);
    for (int r = 0; r < count; ++r) {
      const UnfoldedRib& s = U.samples[static_cast<std::size_t>(r) * n / count];
      svg += fmt::format("<line x1=\"{:.6f}\" y1=\"{:.6f}\" x2=\"{:.6f}\" y2=\"{:.6f}\"/>\n",
                         s.rib.b.x, s.rib.b.y, s.u.x, s.u.y);
    }
    svg += "</g>\n";
  }
  svg += fmt::format("<path id=\"base\" stroke=\"#000000\" stroke-width=\"{:.6f}\" d=\"{}\"/>\n",
                     stroke, path_data(base, true));
  svg += fmt::format(
      "<path id=\"top\" stroke=\"#d08000\" stroke-width=\"{:.6f}\" d=\"{}\"/>\n", stroke,
      path_data(top, true));
  svg += fmt::format(
      "<path id=\"unfolding\" stroke=\"#1f4fd0\" stroke-width=\"{:.6f}\" d=\"{}\"/>\n",
      stroke, path_data(unfolding, true));
  if (options.show_offset)
    svg += fmt::format(
        "<path id=\"offset\" stroke=\"#2a9d3a\" stroke-width=\"{:.6f}\" "
        "stroke-dasharray=\"{:.6f} {:.6f}\" d=\"{}\"/>\n",
        stroke, 4 * stroke, 3 * stroke, path_data(envelope, true));
  if (options.show_flipout)
    svg += fmt::format(
        "<path id=\"flipout\" stroke=\"#c0202a\" stroke-width=\"{:.6f}\" d=\"{}\"/>\n",
        stroke, path_data(flipped, true));
  const Vec2 attach = U.samples[0].u;
  svg += fmt::format(
      "<circle id=\"attachment\" cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" fill=\"#c0202a\"/>\n",
      attach.x, attach.y, 2 * stroke);
  svg += "</g>\n</svg>\n";
  return svg;
}

namespace {

// Base parameters splitting the summed normalized chord length of base and
// top into k equal parts, so neither polygon gets long edges where the
// correspondence crowds the other.
std::vector<double> export_params(const Prismatoid& prism, int k) {
  const int m = std::max(8192, 64 * k);
  const auto ribs = sample_ribs(prism, m);
  std::vector<double> base_len(m + 1, 0.0), top_len(m + 1, 0.0);
  for (int j = 1; j <= m; ++j) {
    const RibSample& prev = ribs[j - 1];
    const RibSample& cur = ribs[j % m];
    base_len[j] = base_len[j - 1] + distance(prev.b, cur.b);
    top_len[j] = top_len[j - 1] + distance(prev.a0, cur.a0);
  }
  std::vector<double> measure(m + 1);
  for (int j = 0; j <= m; ++j)
    measure[j] = 0.5 * (base_len[j] / base_len[m] + top_len[j] / top_len[m]);
  std::vector<double> params(k);
  for (int i = 0; i < k; ++i) {
    const double target = static_cast<double>(i) / k;
    const auto hi = std::upper_bound(measure.begin(), measure.end(), target);
    const int j = static_cast<int>(hi - measure.begin()) - 1;
    const double frac = (target - measure[j]) / (measure[j + 1] - measure[j]);
    params[i] = kTwoPi * (j + frac) / m;
  }
  return params;
}

}  // namespace

std::string export_polygonal(const Scene& scene, int k) {
  if (k < 3) throw ValidationError("polygonal export needs k >= 3");
  const Prismatoid prism = build_prismatoid(scene);
  std::vector<RibSample> ribs;
  for (double t : export_params(prism, k)) ribs.push_back(rib_at(prism, t));
  std::string out;
  out += "# volcano polygonal prismatoid v1\n";
  out += fmt::format("k {}\n", k);
  out += fmt::format("height {}\n", prism.height());
  out += "base\n";
  for (const RibSample& r : ribs) out += fmt::format("{} {} 0\n", r.b.x, r.b.y);
  out += "top\n";
  for (const RibSample& r : ribs)
    out += fmt::format("{} {} {}\n", r.a0.x, r.a0.y, prism.height());
  return out;
}

}  // namespace volcano::cli
