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

#include <string>

#include "volcano/cli/scene.h"
#include "volcano/verify.h"

namespace volcano::cli {

inline constexpr const char* kToolName = "volcano";
inline constexpr const char* kToolVersion = "0.1.0";

/// JSON report document: scene echo, attachment parameters, per-check
/// results and verdict. `timing_ms` is the only nondeterministic field.
std::string report_json(const Scene& scene, const OverlapReport& report, double timing_ms);

struct RenderOptions {
  int show_ribs = 0;  // number of unfolded ribs drawn, evenly spaced
  bool show_offset = false;
  bool show_flipout = false;
};

/// Overhead SVG of the base, projected top, unfolded ribs and U, with the
/// optional envelope and flipped-out top.
std::string render_svg(const Scene& scene, const RenderOptions& options);

/// Plain-text polygonal prismatoid: k-gons of base and top at matched
/// correspondence parameters. Requires k >= 3.
std::string export_polygonal(const Scene& scene, int k);

}  // namespace volcano::cli
