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

#include "volcano/cli/scene.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "volcano/error.h"

namespace volcano::cli {

namespace {

using nlohmann::json;

// Rounded square s (e^{it} + alpha e^{-3it}); `shear` maps x -> x + shear y.
CurveSpec rounded_square(double s, double alpha, double rotation, Vec2 center,
                         double shear = 0.0) {
  FourierCoeffs f;
  f.x_cos = {0.0, s, 0.0, s * alpha};
  f.y_sin = {0.0, s, 0.0, -s * alpha};
  if (shear != 0.0) f.x_sin = {0.0, shear * s, 0.0, -shear * s * alpha};
  return CurveSpec::fourier_series(f, rotation, center);
}

// Egg with a flattened flank: s (e^{it} + 0.17 e^{2it} + 0.06 e^{-2it}).
CurveSpec mouse(double s, double rotation, Vec2 center) {
  FourierCoeffs f;
  f.x_cos = {0.0, s, s * 0.23};
  f.y_sin = {0.0, s, s * 0.11};
  return CurveSpec::fourier_series(f, rotation, center);
}

struct Preset {
  const char* name;
  bool gallery;
  CurveSpec base;
  CurveSpec top;
  double height;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = [] {
    // Unit slant rib over a unit base with a vanishing top.
    const double tip = 1e-6;
    const double cone_height = std::sqrt(1.0 - (1.0 - tip) * (1.0 - tip));
    return std::vector<Preset>{
        {"ellipse_in_rounded_square", true, rounded_square(1.0, 0.1, 0.0, {}),
         CurveSpec::ellipse(0.55, 0.25, 0.52, {0.1, 0.05}), 0.0},
        {"rounded_square_in_mouse", true, mouse(1.1, 0.3, {0.05, 0.0}),
         rounded_square(0.45, 0.1, 0.35, {0.05, 0.0}), 0.0},
        {"parallelogram_in_rounded_square", true, rounded_square(1.0, 0.1, 0.2, {}),
         rounded_square(0.4, 0.08, 0.0, {0.05, 0.05}, 0.5), 0.0},
        {"ellipse_in_ellipse", true, CurveSpec::ellipse(1.4, 0.9),
         CurveSpec::ellipse(0.6, 0.3, 0.7, {0.15, -0.1}), 0.0},
        {"crossed_ellipse", true, rounded_square(1.0, 0.1, 0.0, {}),
         CurveSpec::ellipse(1.5, 0.35, 0.3, {0.1, 0.0}), 0.0},
        {"truncated_cone", false, CurveSpec::circle(1.0), CurveSpec::circle(0.5), 1.0},
        {"cone", false, CurveSpec::circle(1.0), CurveSpec::circle(tip), cone_height},
        {"nested_circles", false, CurveSpec::circle(1.0), CurveSpec::circle(0.5), 0.0},
        {"enclosing", false, CurveSpec::circle(1.0),
         CurveSpec::ellipse(2.0, 1.6, 0.4, {0.1, 0.0}), 0.0},
    };
  }();
  return table;
}

std::string field_path(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

const json& require(const json& obj, const std::string& key, const std::string& prefix) {
  if (!obj.contains(key))
    throw ParseError(fmt::format("missing field '{}'", field_path(prefix, key)));
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(fmt::format("field '{}': expected a number", path));
  return v.get<double>();
}

std::vector<double> number_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(fmt::format("field '{}': expected an array", path));
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(number(v[i], fmt::format("{}[{}]", path, i)));
  return out;
}

CurveSpec parse_curve(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw ParseError(fmt::format("field '{}': expected an object", path));
  const json& family = require(doc, "family", path);
  if (!family.is_string())
    throw ParseError(fmt::format("field '{}.family': expected a string", path));
  CurveSpec spec;
  try {
    spec.family = curve_family_from_string(family.get<std::string>());
  } catch (const ValidationError& e) {
    throw ParseError(fmt::format("field '{}.family': {}", path, e.what()));
  }
  const std::string ppath = field_path(path, "params");
  const json& params = require(doc, "params", path);
  if (!params.is_object())
    throw ParseError(fmt::format("field '{}': expected an object", ppath));
  auto get = [&](const char* key) {
    return number(require(params, key, ppath), field_path(ppath, key));
  };
  auto get_list = [&](const char* key) {
    return params.contains(key) ? number_list(params.at(key), field_path(ppath, key))
                                : std::vector<double>{};
  };
  switch (spec.family) {
    case CurveFamily::circle: spec.params = {get("r")}; break;
    case CurveFamily::ellipse: spec.params = {get("a"), get("b")}; break;
    case CurveFamily::superellipse: spec.params = {get("a"), get("b"), get("n")}; break;
    case CurveFamily::fourier:
      spec.fourier = {get_list("x_cos"), get_list("x_sin"), get_list("y_cos"),
                      get_list("y_sin")};
      break;
  }
  if (doc.contains("rotation")) spec.rotation = number(doc.at("rotation"), path + ".rotation");
  if (doc.contains("translation")) {
    const auto t = number_list(doc.at("translation"), path + ".translation");
    if (t.size() != 2)
      throw ParseError(fmt::format("field '{}.translation': expected [x, y]", path));
    spec.translation = {t[0], t[1]};
  }
  return spec;
}

json curve_json(const CurveSpec& spec) {
  json params = json::object();
  switch (spec.family) {
    case CurveFamily::circle: params["r"] = spec.params.at(0); break;
    case CurveFamily::ellipse:
      params["a"] = spec.params.at(0);
      params["b"] = spec.params.at(1);
      break;
    case CurveFamily::superellipse:
      params["a"] = spec.params.at(0);
      params["b"] = spec.params.at(1);
      params["n"] = spec.params.at(2);
      break;
    case CurveFamily::fourier:
      params["x_cos"] = spec.fourier.x_cos;
      params["x_sin"] = spec.fourier.x_sin;
      params["y_cos"] = spec.fourier.y_cos;
      params["y_sin"] = spec.fourier.y_sin;
      break;
  }
  return {{"family", std::string(to_string(spec.family))},
          {"params", params},
          {"rotation", spec.rotation},
          {"translation", {spec.translation.x, spec.translation.y}}};
}

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

void validate_curve(const CurveSpec& spec, const char* which) {
  try {
    ParamCurve curve(spec);
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{} curve: {}", which, e.what()));
  }
}

}  // namespace

Scene parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("malformed scene at line {}: {}", line_of(text, e.byte),
                                 e.what()));
  }
  if (!doc.is_object()) throw ParseError("scene must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "preset" && key != "base" && key != "top" && key != "height" &&
        key != "samples")
      throw ParseError(fmt::format("unknown field '{}'", key));
  }

  Scene scene;
  const bool has_preset = doc.contains("preset");
  const bool has_curves = doc.contains("base") || doc.contains("top");
  if (has_preset == has_curves)
    throw ParseError("scene needs exactly one of 'preset' or 'base'+'top'");
  if (has_preset) {
    if (!doc.at("preset").is_string())
      throw ParseError("field 'preset': expected a string");
    scene = preset_scene(doc.at("preset").get<std::string>());
  } else {
    scene.base = parse_curve(require(doc, "base", ""), "base");
    scene.top = parse_curve(require(doc, "top", ""), "top");
    scene.height = number(require(doc, "height", ""), "height");
  }
  if (has_preset && doc.contains("height")) scene.height = number(doc.at("height"), "height");
  if (doc.contains("samples")) {
    const json& s = doc.at("samples");
    if (!s.is_number_integer()) throw ParseError("field 'samples': expected an integer");
    const auto v = s.get<long long>();
    if (v < kMinSamples || v > kMaxSamples)
      throw ValidationError(
          fmt::format("samples must be in [{}, {}], got {}", kMinSamples, kMaxSamples, v));
    scene.samples = static_cast<int>(v);
  }
  if (!(scene.height >= 0.0) || !std::isfinite(scene.height))
    throw ValidationError("height must be finite and >= 0");
  validate_curve(scene.base, "base");
  validate_curve(scene.top, "top");
  return scene;
}

Scene load_scene(std::string_view source) {
  constexpr std::string_view prefix = "preset:";
  if (source.starts_with(prefix)) return preset_scene(source.substr(prefix.size()));
  std::ifstream in{std::filesystem::path(source)};
  if (!in) throw ParseError(fmt::format("cannot read scene file '{}'", source));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string print_scene(const Scene& scene) {
  json doc;
  if (scene.preset) {
    doc["preset"] = *scene.preset;
  } else {
    doc["base"] = curve_json(scene.base);
    doc["top"] = curve_json(scene.top);
  }
  doc["height"] = scene.height;
  doc["samples"] = scene.samples;
  return doc.dump(2) + "\n";
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const Preset& p : presets()) out.emplace_back(p.name);
  return out;
}

std::vector<std::string> gallery_preset_names() {
  std::vector<std::string> out;
  for (const Preset& p : presets())
    if (p.gallery) out.emplace_back(p.name);
  return out;
}

Scene preset_scene(std::string_view name) {
  for (const Preset& p : presets()) {
    if (name == p.name) return {p.base, p.top, p.height, kDefaultSamples, std::string(name)};
  }
  throw ValidationError(fmt::format("unknown preset '{}'", name));
}

Prismatoid build_prismatoid(const Scene& scene) {
  return Prismatoid::make(scene.base, scene.top, scene.height);
}

}  // namespace volcano::cli
