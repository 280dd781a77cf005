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

#ifndef PNSPACE_REPORT_HPP
#define PNSPACE_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include <json.hpp>

namespace pns {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

/// Outcome of one sampled check. A failing report always carries a witness.
struct VerificationReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Signed; negative means the checked relation was violated by that much.
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string witness;
  Json details = Json::object();

  bool passed() const { return verdict == Verdict::pass; }

  void fail(std::string why) {
    verdict = Verdict::fail;
    if (witness.empty()) witness = std::move(why);
  }

  void inconclusive(std::string why) {
    if (verdict == Verdict::pass) verdict = Verdict::inconclusive;
    if (witness.empty()) witness = std::move(why);
  }

  /// Folds a sub-report in: worst margin wins, failures dominate.
  void absorb(const VerificationReport& other);

  Json to_json() const;
};

/// Tracks the worst margin over indexed samples; ties keep the lowest index.
class MarginTracker {
 public:
  explicit MarginTracker(double pass_threshold = 0.0)
      : threshold_(pass_threshold) {}

  void observe(double margin, std::size_t index,
               const std::function<std::string()>& describe);

  double worst() const { return worst_; }
  bool violated() const { return worst_ < threshold_; }
  const std::string& witness() const { return witness_; }

  /// Writes margin, verdict and witness into `report`.
  void finish(VerificationReport& report, const std::string& failure) const;

 private:
  double threshold_;
  double worst_ = std::numeric_limits<double>::infinity();
  std::size_t worst_index_ = 0;
  bool any_ = false;
  std::string witness_;
};

/// JSON number, or the strings "inf"/"-inf"/"nan" when not finite.
Json json_number(double x);

}  // namespace pns

#endif  // PNSPACE_REPORT_HPP
