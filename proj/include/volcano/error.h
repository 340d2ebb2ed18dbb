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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace volcano {

/// Input that violates a curve, prismatoid or scene invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure that failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled unfolding crossed itself; the sampling is too coarse for the
/// input since smooth inputs cannot produce a self-overlapping unfolding.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what,
                  std::vector<std::pair<double, double>> crossing_params)
      : std::runtime_error(what), crossing_params_(std::move(crossing_params)) {}

  /// Parameter pairs (t_i, t_j) of the crossing segments.
  const std::vector<std::pair<double, double>>& crossing_params() const {
    return crossing_params_;
  }

 private:
  std::vector<std::pair<double, double>> crossing_params_;
};

/// Flip-out requested at a rib without mutual tangency.
class PlacementError : public std::runtime_error {
 public:
  PlacementError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Malformed scene document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace volcano
