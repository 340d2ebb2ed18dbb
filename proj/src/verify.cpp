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

#include "volcano/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "volcano/error.h"

namespace volcano {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::nonoverlapping: return "nonoverlapping";
    case Verdict::overlap_detected: return "overlap_detected";
    case Verdict::resolution_insufficient: return "resolution_insufficient";
  }
  return "unknown";
}

OverlapReport check_unfolding(const Prismatoid& prism, const MaxResult& max, int n,
                              Exec exec) {
  OverlapReport rep;
  rep.max = max;
  rep.samples = n;
  const double t_hat = max.t_hat;

  // Phase the grid so that sample 0 is the attachment rib.
  const SideUnfolding U = sample_unfolding(prism, n, t_hat, exec);
  const std::vector<Vec2> poly = U.polyline();
  rep.u_simple = polyline_self_intersect(poly, exec).empty();
  rep.ribs_disjoint = ribs_pairwise_disjoint(U.rib_segments(), exec);

  const TangencyResidual tr = check_mutual_tangency(prism, t_hat);
  rep.tangency_residual = tr.residual;
  rep.tangency_degenerate = tr.degenerate;

  // Envelope vertices share the correspondence parameters of U's samples.
  const OffsetCurve envelope = offset_envelope(prism, t_hat);
  std::vector<Vec2> env(n);
  for (int i = 0; i < n; ++i) env[i] = envelope.eval(U.samples[i].rib.t_top);
  if (rep.u_simple) {
    const Enclosure enc = encloses(env, poly, exec);
    rep.min_clearance = enc.min_clearance;
    double touch = std::numeric_limits<double>::infinity();
    for (Vec2 q : poly) touch = std::min(touch, distance_to_polyline(env, q));
    rep.touch_distance = touch;
    rep.envelope_encloses =
        enc.min_clearance >= -kEnvelopeClearanceTol && touch < kEnvelopeTouchTol;
  }
  rep.hull_ok = hull_membership(U, t_hat);

  FlipOutPlacement placement;
  try {
    placement = flip_out(prism, t_hat, n, max.all_safe);
  } catch (const PlacementError&) {
    rep.placement_refused = true;
    placement = reflect_top_at(prism, t_hat, n);
  }
  rep.exclusion_radius = 1e-6 * diameter(poly, exec);
  rep.flipout_crossings = flipout_crossings(placement.top_image, poly, U.samples[0].u,
                                            rep.exclusion_radius, exec);

  if (!rep.u_simple || !rep.ribs_disjoint) {
    rep.verdict = Verdict::resolution_insufficient;
  } else if (rep.envelope_encloses && rep.hull_ok && rep.flipout_crossings == 0) {
    rep.verdict = Verdict::nonoverlapping;
  } else {
    rep.verdict = Verdict::overlap_detected;
  }
  return rep;
}

OverlapReport full_report(const Prismatoid& prism, int n, Exec exec) {
  const MaxResult max = maximize_R(prism, 8192, exec);
  OverlapReport rep;
  for (int m = n; m <= 16 * n; m *= 2) {
    rep = check_unfolding(prism, max, m, exec);
    if (rep.verdict != Verdict::resolution_insufficient) break;
  }
  return rep;
}

}  // namespace volcano
