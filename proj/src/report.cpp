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

#include "pnspace/report.hpp"

#include <cmath>

namespace pns {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

void VerificationReport::absorb(const VerificationReport& other) {
  samples += other.samples;
  if (other.worst_margin < worst_margin) worst_margin = other.worst_margin;
  if (other.verdict == Verdict::fail) {
    if (verdict != Verdict::fail) witness.clear();
    fail(other.check + ": " + other.witness);
  } else if (other.verdict == Verdict::inconclusive) {
    inconclusive(other.check + ": " + other.witness);
  }
  details[other.check] = other.to_json();
}

Json VerificationReport::to_json() const {
  Json j;
  j["check"] = check;
  j["pass"] = passed();
  j["verdict"] = to_string(verdict);
  j["margin"] = json_number(worst_margin);
  j["witness"] = witness;
  j["samples"] = samples;
  j["seed"] = seed;
  if (!details.empty()) j["details"] = details;
  return j;
}

void MarginTracker::observe(double margin, std::size_t index,
                            const std::function<std::string()>& describe) {
  if (!any_ || margin < worst_ || (margin == worst_ && index < worst_index_)) {
    const bool record = !any_ || margin < worst_;
    any_ = true;
    worst_ = margin;
    worst_index_ = index;
    if (record && margin < threshold_) witness_ = describe();
  }
}

void MarginTracker::finish(VerificationReport& report,
                           const std::string& failure) const {
  if (worst_ < report.worst_margin) report.worst_margin = worst_;
  if (violated()) report.fail(failure + ": " + witness_);
}

Json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace pns
