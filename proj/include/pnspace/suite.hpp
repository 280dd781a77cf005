/*
 * Copyright 2026 The pnspace Authors
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

#ifndef PNSPACE_SUITE_HPP
#define PNSPACE_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pnspace/report.hpp"

namespace pns {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

/// Names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::string space_path;
  /// Overrides the space file's subspace; empty keeps it.
  std::string subspace;
  std::vector<std::string> suites;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t horizon = 100;
  double tol = 1e-3;
  /// Record wall-clock times; off by default so reports are byte-identical.
  bool timing = false;
};

struct ReportDocument {
  Json json;
  Verdict verdict = Verdict::pass;

  /// 0 pass, 1 fail, 2 inconclusive.
  int exit_code() const;
  std::string dump() const { return json.dump(2) + "\n"; }
};

/// Throws ParseError / IoError / InvalidArgument for bad configurations.
ReportDocument run_suite(const SuiteConfig& config);

}  // namespace pns

#endif  // PNSPACE_SUITE_HPP
