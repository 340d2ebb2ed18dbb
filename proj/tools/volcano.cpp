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

// Command-line front end: unfold, render and export scenes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "volcano/cli/output.h"
#include "volcano/cli/scene.h"
#include "volcano/error.h"
#include "volcano/verify.h"

namespace {

using namespace volcano;
using namespace volcano::cli;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitOverlap = 2;
constexpr int kExitResolution = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

Scene scene_with_samples(const std::string& source, std::optional<int> samples) {
  Scene scene = load_scene(source);
  if (samples) {
    if (*samples < kMinSamples || *samples > kMaxSamples)
      throw ValidationError("--samples must be in [64, 1000000]");
    scene.samples = *samples;
  }
  return scene;
}

int run_unfold(const std::string& source, const std::string& out,
               std::optional<int> samples) {
  const Scene scene = scene_with_samples(source, samples);
  const auto start = std::chrono::steady_clock::now();
  const OverlapReport report = full_report(build_prismatoid(scene), scene.samples);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  write_file(out, report_json(scene, report, ms));
  std::cout << to_string(report.verdict) << " t_hat=" << report.max.t_hat
            << " R_max=" << report.max.R_max << "\n";
  switch (report.verdict) {
    case Verdict::nonoverlapping: return kExitOk;
    case Verdict::overlap_detected: return kExitOverlap;
    case Verdict::resolution_insufficient: return kExitResolution;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volcano unfoldings of smooth prismatoids"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> samples;
  app.add_option("--samples", samples, "Samples along the base (overrides the scene)");

  std::string scene_arg, out_path;
  auto* unfold = app.add_subcommand("unfold", "Compute and certify the unfolding; write a JSON report");
  unfold->add_option("scene", scene_arg, "Scene file or preset:<name>")->required();
  unfold->add_option("--out", out_path, "Report path")->required();

  RenderOptions render_opts;
  auto* render = app.add_subcommand("render", "Write an SVG overhead view");
  render->add_option("scene", scene_arg, "Scene file or preset:<name>")->required();
  render->add_option("--out", out_path, "SVG path")->required();
  render->add_option("--ribs", render_opts.show_ribs, "Number of unfolded ribs to draw");
  render->add_flag("--offset", render_opts.show_offset, "Draw the offset envelope");
  render->add_flag("--flipout", render_opts.show_flipout, "Draw the flipped-out top");

  int k = 0;
  auto* export_poly = app.add_subcommand("export-poly", "Write a polygonal approximation");
  export_poly->add_option("scene", scene_arg, "Scene file or preset:<name>")->required();
  export_poly->add_option("--k", k, "Vertices per polygon")->required();
  export_poly->add_option("--out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*unfold) return run_unfold(scene_arg, out_path, samples);
    if (*render) {
      write_file(out_path, render_svg(scene_with_samples(scene_arg, samples), render_opts));
      return kExitOk;
    }
    if (*export_poly) {
      write_file(out_path, export_polygonal(scene_with_samples(scene_arg, samples), k));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
