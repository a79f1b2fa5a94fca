/*
 * Copyright 2026 The spectra authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string_view>
#include <vector>

#include "spectra/surd.hpp"

namespace spectra {

enum class Bound { Min, Max };

// Bounds of lambda at each position of a finite digit string x, taken over
// all two-sided extensions of x by arbitrary {1,2} tails. Both extremes are
// attained by alternating tails, so every bound lies in Q(sqrt 3).
//
// Thresholds must be rational or lie in Q(sqrt 3); others throw DomainError.
class ExtensionBounds {
 public:
  explicit ExtensionBounds(std::string_view digits);

  std::size_t size() const { return n_; }
  // sign(bound of lambda_i - t).
  int compare(std::size_t i, Bound which, const QuadSurd& t) const;
  // First position whose minimum exceeds t, or -1.
  long first_min_above(const QuadSurd& t) const;
  // Exact bound value.
  QuadSurd value(std::size_t i, Bound which) const;

 private:
  struct Mat {
    Integer a, b, c, d;
  };
  std::size_t n_;
  std::vector<int> x_;
  std::vector<Mat> fwd_;  // fwd_[j]: digits x_j .. x_{n-1}
  std::vector<Mat> bwd_;  // bwd_[i]: digits x_{i-1} .. x_0
};

}  // namespace spectra
