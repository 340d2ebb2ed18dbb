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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <string>

#include "volcano/cli/output.h"
#include "volcano/cli/scene.h"
#include "volcano/error.h"

namespace volcano::cli {
namespace {

namespace fs = std::filesystem;

const std::string kTool = VOLCANO_TOOL_PATH;
const std::string kScenes = VOLCANO_SCENE_DIR;

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int RunTool(const std::string& args) {
  const int status = std::system((kTool + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path Tmp(const std::string& name) {
  return fs::temp_directory_path() / ("volcano_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Scene, TruncatedConePreset) {
  const Scene s = parse_scene(R"({"preset": "truncated_cone"})");
  EXPECT_EQ(s.base, CurveSpec::circle(1.0));
  EXPECT_EQ(s.top, CurveSpec::circle(0.5));
  EXPECT_EQ(s.height, 1.0);
  EXPECT_EQ(s.samples, kDefaultSamples);
  EXPECT_EQ(s.preset, "truncated_cone");
  EXPECT_EQ(load_scene("preset:truncated_cone"), s);
}

TEST(Scene, PresetOverrides) {
  const Scene s = parse_scene(R"({"preset": "truncated_cone", "height": 2.5, "samples": 256})");
  EXPECT_EQ(s.height, 2.5);
  EXPECT_EQ(s.samples, 256);
}

TEST(Scene, ExplicitDocument) {
  const Scene s = load_scene(kScenes + "/ellipse_in_circle.json");
  EXPECT_EQ(s.base, CurveSpec::circle(1.0));
  EXPECT_EQ(s.top, CurveSpec::ellipse(0.6, 0.3, 0.5235987755982988, {0.1, -0.05}));
  EXPECT_EQ(s.height, 0.5);
  EXPECT_EQ(s.samples, 1024);
  EXPECT_FALSE(s.preset.has_value());
  EXPECT_EQ(parse_scene(print_scene(s)), s);
}

TEST(Scene, PrintedFormIsStable) {
  // Same bytes as the canonical example in docs/formats.md.
  const std::string expected = R"({
  "base": {
    "family": "circle",
    "params": {
      "r": 1.0
    },
    "rotation": 0.0,
    "translation": [
      0.0,
      0.0
    ]
  },
  "height": 0.5,
  "samples": 1024,
  "top": {
    "family": "ellipse",
    "params": {
      "a": 0.6,
      "b": 0.3
    },
    "rotation": 0.5235987755982988,
    "translation": [
      0.1,
      -0.05
    ]
  }
}
)";
  EXPECT_EQ(print_scene(load_scene(kScenes + "/ellipse_in_circle.json")), expected);
}

TEST(Scene, AllFamiliesParse) {
  EXPECT_EQ(load_scene(kScenes + "/superellipse_lifted.json").base,
            CurveSpec::superellipse(1.2, 1.0, 4));
  const Scene m = load_scene(kScenes + "/mouse_rounded_square.json");
  EXPECT_EQ(m.base.family, CurveFamily::fourier);
  EXPECT_EQ(m.base.fourier.x_cos, (std::vector<double>{0.0, 1.1, 0.253}));
  EXPECT_EQ(m.top.fourier.y_sin, (std::vector<double>{0.0, 0.45, 0.0, -0.045}));
}

TEST(Scene, RoundTripAllPresets) {
  for (const auto& name : preset_names()) {
    const Scene s = preset_scene(name);
    EXPECT_EQ(parse_scene(print_scene(s)), s) << name;
    // Expanded form (without the preset tag) also round-trips.
    Scene expanded = s;
    expanded.preset.reset();
    EXPECT_EQ(parse_scene(print_scene(expanded)), expanded) << name;
  }
}

TEST(Scene, GalleryIsSubsetOfPresets) {
  const auto all = preset_names();
  const auto gallery = gallery_preset_names();
  EXPECT_EQ(gallery.size(), 5u);
  for (const auto& g : gallery) EXPECT_NE(std::find(all.begin(), all.end(), g), all.end());
}

void ExpectParseError(std::string_view text, std::string_view needle) {
  try {
    parse_scene(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(Scene, MalformedDocuments) {
  ExpectParseError("{\n\"preset\": \n}", "line 3");
  ExpectParseError(R"({"preset": "cone", "base": {"family": "circle", "params": {"r": 1}}})",
                   "exactly one");
  ExpectParseError(R"({"base": {"family": "circle", "params": {"r": 1}}})", "top");
  ExpectParseError(R"({"preset": "cone", "colour": 1})", "colour");
  ExpectParseError(
      R"({"base": {"family": "circle", "params": {"radius": 1}},
          "top": {"family": "circle", "params": {"r": 0.5}}, "height": 0})",
      "base.params");
  ExpectParseError(
      R"({"base": {"family": "blob", "params": {}},
          "top": {"family": "circle", "params": {"r": 0.5}}, "height": 0})",
      "base.family");
  ExpectParseError(
      R"({"base": {"family": "circle", "params": {"r": 1}},
          "top": {"family": "circle", "params": {"r": "x"}}, "height": 0})",
      "top.params.r");
  ExpectParseError(R"({"preset": "cone", "samples": 1.5})", "samples");
  ExpectParseError("[1, 2]", "object");
  EXPECT_THROW(load_scene("/nonexistent/scene.json"), ParseError);
}

TEST(Scene, InvalidValues) {
  EXPECT_THROW(parse_scene(R"({"preset": "cone", "samples": 10})"), ValidationError);
  EXPECT_THROW(parse_scene(R"({"preset": "cone", "samples": 2000000})"), ValidationError);
  EXPECT_THROW(parse_scene(R"({"preset": "cone", "height": -1})"), ValidationError);
  EXPECT_THROW(parse_scene(R"({"preset": "dodecahedron"})"), ValidationError);
  try {
    load_scene(kScenes + "/nonconvex.json");
    ADD_FAILURE();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("top curve"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("convex"), std::string::npos);
  }
}

TEST(Report, JsonFieldsAndVerdict) {
  const Scene s = preset_scene("truncated_cone");
  const OverlapReport r = full_report(build_prismatoid(s), s.samples);
  const auto doc = nlohmann::json::parse(report_json(s, r, 12.5));
  EXPECT_EQ(doc["tool"], kToolName);
  EXPECT_EQ(doc["version"], kToolVersion);
  EXPECT_EQ(doc["verdict"], "nonoverlapping");
  EXPECT_EQ(doc["timing_ms"], 12.5);
  EXPECT_EQ(doc["t_hat"], r.max.t_hat);
  EXPECT_EQ(doc["R_max"], r.max.R_max);
  EXPECT_EQ(doc["ties"].size(), r.max.ties.size());
  EXPECT_EQ(doc["samples_used"], r.samples);
  for (const char* key : {"u_simple", "ribs_disjoint", "envelope_encloses", "hull_ok"})
    EXPECT_TRUE(doc["checks"][key].get<bool>()) << key;
  EXPECT_EQ(doc["checks"]["flipout_crossings"], 0);
  EXPECT_EQ(parse_scene(doc["scene"].dump()), s);
}

TEST(Report, JsonIsDeterministic) {
  const Scene s = preset_scene("ellipse_in_rounded_square");
  const std::string a = report_json(s, full_report(build_prismatoid(s), s.samples), 1.0);
  const std::string b = report_json(s, full_report(build_prismatoid(s), s.samples), 1.0);
  EXPECT_EQ(a, b);
}

TEST(Render, SvgIsDeterministicAndComplete) {
  const Scene s = preset_scene("rounded_square_in_mouse");
  const RenderOptions opts{60, true, true};
  const std::string a = render_svg(s, opts), b = render_svg(s, opts);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  for (const char* id : {"id=\"base\"", "id=\"top\"", "id=\"unfolding\"", "id=\"ribs\"",
                         "id=\"offset\"", "id=\"flipout\""})
    EXPECT_NE(a.find(id), std::string::npos) << id;
  const std::string plain = render_svg(s, {});
  EXPECT_EQ(plain.find("id=\"offset\""), std::string::npos);
  EXPECT_EQ(plain.find("id=\"flipout\""), std::string::npos);
}

struct PolyFile {
  int k = 0;
  double height = 0.0;
  std::vector<std::array<double, 3>> base, top;
};

PolyFile ParsePoly(const std::string& text) {
  PolyFile out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# volcano polygonal prismatoid v1");
  std::string key;
  in >> key >> out.k;
  EXPECT_EQ(key, "k");
  in >> key >> out.height;
  EXPECT_EQ(key, "height");
  in >> key;
  EXPECT_EQ(key, "base");
  for (int i = 0; i < out.k; ++i) {
    std::array<double, 3> v;
    in >> v[0] >> v[1] >> v[2];
    out.base.push_back(v);
  }
  in >> key;
  EXPECT_EQ(key, "top");
  for (int i = 0; i < out.k; ++i) {
    std::array<double, 3> v;
    in >> v[0] >> v[1] >> v[2];
    out.top.push_back(v);
  }
  EXPECT_FALSE(in.fail());
  return out;
}

double Shoelace(const std::vector<std::array<double, 3>>& v) {
  double a = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * a;
}

TEST(Export, TruncatedConeSquares) {
  const PolyFile f = ParsePoly(export_polygonal(preset_scene("truncated_cone"), 4));
  ASSERT_EQ(f.k, 4);
  EXPECT_EQ(f.height, 1.0);
  for (int i = 0; i < 4; ++i) {
    const double ang = M_PI / 2 * i;
    EXPECT_NEAR(f.base[i][0], std::cos(ang), 1e-12);
    EXPECT_NEAR(f.base[i][1], std::sin(ang), 1e-12);
    EXPECT_EQ(f.base[i][2], 0.0);
    EXPECT_NEAR(f.top[i][0], 0.5 * std::cos(ang), 1e-12);
    EXPECT_NEAR(f.top[i][1], 0.5 * std::sin(ang), 1e-12);
    EXPECT_EQ(f.top[i][2], 1.0);
  }
}

TEST(Export, Triangles) {
  const PolyFile f = ParsePoly(export_polygonal(preset_scene("crossed_ellipse"), 3));
  EXPECT_EQ(f.base.size(), 3u);
  EXPECT_EQ(f.top.size(), 3u);
  EXPECT_GT(Shoelace(f.base), 0.0);
  EXPECT_GT(Shoelace(f.top), 0.0);
  EXPECT_THROW(export_polygonal(preset_scene("cone"), 2), ValidationError);
}

TEST(Export, FineAreasMatchSmoothCurves) {
  for (const auto& name : gallery_preset_names()) {
    const Scene s = preset_scene(name);
    const Prismatoid p = build_prismatoid(s);
    const PolyFile f = ParsePoly(export_polygonal(s, 256));
    EXPECT_NEAR(Shoelace(f.base), p.base().enclosed_area(), 1e-3 * p.base().enclosed_area()) << name;
    EXPECT_NEAR(Shoelace(f.top), p.top().enclosed_area(), 1e-3 * p.top().enclosed_area()) << name;
  }
}

TEST(Export, BitExactExample) {
  const std::string expected =
      "# volcano polygonal prismatoid v1\n"
      "k 4\n"
      "height 1\n"
      "base\n"
      "1 0 0\n"
      "4.269379648556338e-14 1 0\n"
      "-1 2.810008490046868e-14 0\n"
      "-1.7059086994174482e-14 -1 0\n"
      "top\n"
      "0.5 1.9554602620312778e-17 1\n"
      "2.134689824278169e-14 0.5 1\n"
      "-0.5 1.427208705515937e-14 1\n"
      "-8.529543497087241e-15 -0.5 1\n";
  EXPECT_EQ(export_polygonal(preset_scene("truncated_cone"), 4), expected);
}

TEST(Tool, ExitCodes) {
  const fs::path out = Tmp("report.json");
  EXPECT_EQ(RunTool("unfold preset:truncated_cone --out " + out.string()), 0);
  const auto doc = nlohmann::json::parse(Slurp(out));
  EXPECT_EQ(doc["verdict"], "nonoverlapping");
  for (const auto& name : gallery_preset_names())
    EXPECT_EQ(RunTool("unfold preset:" + name + " --out " + out.string()), 0) << name;
  EXPECT_EQ(RunTool("unfold " + kScenes + "/mouse_rounded_square.json --out " + out.string()), 0);
  EXPECT_EQ(RunTool("unfold " + kScenes + "/corrupted.json --out " + out.string()), 1);
  EXPECT_EQ(RunTool("unfold " + kScenes + "/nonconvex.json --out " + out.string()), 1);
  EXPECT_EQ(RunTool("unfold /nonexistent.json --out " + out.string()), 1);
  EXPECT_EQ(RunTool("unfold preset:cone --out /nonexistent/dir/r.json"), 1);
  EXPECT_EQ(RunTool("--samples 8 unfold preset:cone --out " + out.string()), 1);
  EXPECT_EQ(RunTool("frobnicate"), 1);
  EXPECT_EQ(RunTool("--version"), 0);
  fs::remove(out);
}

TEST(Tool, SamplesOverride) {
  const fs::path out = Tmp("samples.json");
  ASSERT_EQ(RunTool("--samples 256 unfold preset:truncated_cone --out " + out.string()), 0);
  EXPECT_EQ(nlohmann::json::parse(Slurp(out))["samples_used"], 256);
  fs::remove(out);
}

TEST(Tool, RenderAndExportAreDeterministic) {
  const fs::path a = Tmp("a.svg"), b = Tmp("b.svg"), poly = Tmp("poly.txt");
  const std::string args = " --ribs 60 --offset --flipout";
  ASSERT_EQ(RunTool("render preset:rounded_square_in_mouse --out " + a.string() + args), 0);
  ASSERT_EQ(RunTool("render preset:rounded_square_in_mouse --out " + b.string() + args), 0);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(RunTool("render preset:cone --out /nonexistent/dir/x.svg"), 1);
  ASSERT_EQ(RunTool("export-poly preset:truncated_cone --k 4 --out " + poly.string()), 0);
  EXPECT_EQ(Slurp(poly), export_polygonal(preset_scene("truncated_cone"), 4));
  EXPECT_EQ(RunTool("export-poly preset:truncated_cone --k 2 --out " + poly.string()), 1);
  for (const auto& p : {a, b, poly}) fs::remove(p);
}

TEST(Tool, ReportMatchesLibraryExceptTiming) {
  const fs::path out = Tmp("lib.json");
  ASSERT_EQ(RunTool("unfold preset:crossed_ellipse --out " + out.string()), 0);
  auto doc = nlohmann::json::parse(Slurp(out));
  const Scene s = preset_scene("crossed_ellipse");
  auto lib = nlohmann::json::parse(report_json(s, full_report(build_prismatoid(s), s.samples), 0.0));
  doc.erase("timing_ms");
  lib.erase("timing_ms");
  EXPECT_EQ(doc, lib);
  fs::remove(out);
}

}  // namespace
}  // namespace volcano::cli
