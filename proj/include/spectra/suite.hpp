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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spectra {

struct SuiteConfig {
  std::uint64_t seed = 20260101;
  int workers = 1;
  // Full two-sided check at n = 68 for criterion 3 (the sampled gate always runs).
  bool full = true;
  // Criteria to run; empty runs 1..11.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // runtime ceiling; exceeding it fails the criterion
};

// Runs the acceptance criteria in order, reporting each result as it lands.
std::vector<CriterionResult> run_acceptance(const SuiteConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "[PASS] 3 name (12.3 s / 1800 s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace spectra
