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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "volcano/curve.h"
#include "volcano/prismatoid.h"

namespace volcano::cli {

inline constexpr int kDefaultSamples = 1024;
inline constexpr int kMinSamples = 64;
inline constexpr int kMaxSamples = 1000000;

/// Input document for the command-line tool. When `preset` is set, base and
/// top hold the preset's curves.
struct Scene {
  CurveSpec base;
  CurveSpec top;
  double height = 0.0;
  int samples = kDefaultSamples;
  std::optional<std::string> preset;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Parses a JSON scene document. Throws ParseError for malformed text or
/// fields (message names the line or the field path) and ValidationError
/// for curves or values that violate an invariant.
Scene parse_scene(std::string_view text);

/// `preset:<name>` selects a shipped preset; anything else is a file path.
Scene load_scene(std::string_view source);

/// Canonical JSON text; parse_scene(print_scene(s)) == s.
std::string print_scene(const Scene& scene);

/// Every shipped preset, in a fixed order.
std::vector<std::string> preset_names();
/// The five flat gallery configurations (rendered at any height).
std::vector<std::string> gallery_preset_names();
/// Throws ValidationError for an unknown name.
Scene preset_scene(std::string_view name);

Prismatoid build_prismatoid(const Scene& scene);

}  // namespace volcano::cli
