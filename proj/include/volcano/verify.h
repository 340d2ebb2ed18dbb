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

#include <string_view>
#include <vector>

#include "volcano/exec.h"
#include "volcano/placement.h"
#include "volcano/predicates.h"
#include "volcano/prismatoid.h"

namespace volcano {

enum class Verdict { nonoverlapping, overlap_detected, resolution_insufficient };

std::string_view to_string(Verdict verdict);

/// Outcome of the full unfold-and-place pipeline.
///
/// The verdict is nonoverlapping exactly when U is simple, the unfolded ribs
/// are pairwise noncrossing, the offset envelope encloses and touches U, the
/// tangent at u(t_hat) supports U and the flipped-out top crosses U nowhere
/// outside the contact neighborhood.
struct OverlapReport {
  bool u_simple = false;
  bool ribs_disjoint = false;
  bool envelope_encloses = false;
  bool hull_ok = false;
  double tangency_residual = 0.0;
  bool tangency_degenerate = false;
  int flipout_crossings = 0;
  Verdict verdict = Verdict::resolution_insufficient;

  MaxResult max;
  int samples = 0;  // sample count of the final attempt
  double min_clearance = 0.0;   // U inside the envelope, positive inside
  double touch_distance = 0.0;  // closest approach of U to the envelope
  double exclusion_radius = 0.0;
  bool placement_refused = false;
};

/// Clearance and contact tolerances of the envelope certificate.
inline constexpr double kEnvelopeClearanceTol = 1e-7;
inline constexpr double kEnvelopeTouchTol = 1e-6;

/// One attempt at a fixed sample count against a precomputed maximum.
OverlapReport check_unfolding(const Prismatoid& prism, const MaxResult& max, int n,
                              Exec exec = Exec::parallel);

/// Full pipeline. A resolution_insufficient attempt is retried with doubled n,
/// up to 16 times the requested count.
OverlapReport full_report(const Prismatoid& prism, int n = 1024, Exec exec = Exec::parallel);

}  // namespace volcano
