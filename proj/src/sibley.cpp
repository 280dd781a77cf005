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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pnspace/distfn.hpp"
#include "pnspace/error.hpp"

namespace pns {

namespace {

struct ShiftedSteps {
  std::vector<double> at;
  std::vector<double> value;

  ShiftedSteps(const DistFn& f, double shift) {
    for (const auto& s : f.steps()) {
      at.push_back(s.at + shift);
      value.push_back(s.value);
    }
  }

  // Value on the plateau immediately right of x.
  double right_limit(double x) const {
    const auto k = std::upper_bound(at.begin(), at.end(), x) - at.begin();
    return k == 0 ? 0.0 : value[static_cast<std::size_t>(k - 1)];
  }
};

}  // namespace

bool sibley_condition(const DistFn& f, const DistFn& g, double h) {
  const double lo = -1.0 / h;
  const double hi = 1.0 / h;
  // F(x - h) jumps at a + h, F(x + h) at a - h. All three functions are
  // constant on the left-open pieces between consecutive candidates, so the
  // plateau right of each candidate inside [lo, hi) is all there is to check.
  const ShiftedSteps delayed(f, h);
  const ShiftedSteps advanced(f, -h);
  const ShiftedSteps same(g, 0.0);

  auto holds_right_of = [&](double c) {
    const double g_val = same.right_limit(c);
    return delayed.right_limit(c) - h <= g_val &&
           g_val <= advanced.right_limit(c) + h;
  };

  if (!holds_right_of(lo)) return false;
  for (const auto* arr : {&delayed.at, &advanced.at, &same.at})
    for (double c : *arr)
      if (c > lo && c < hi && !holds_right_of(c)) return false;
  return true;
}

SibleyDistance sibley(const DistFn& f, const DistFn& g, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("sibley tolerance must be > 0");
  if (f == g) return {0.0};
  auto both = [&](double h) {
    return sibley_condition(f, g, h) && sibley_condition(g, f, h);
  };
  // Both conditions hold trivially at h = 1 and are monotone in h.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (both(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi};
}

SibleyDistance sibley_to_eps0(const DistFn& f) {
  // On each piece [start, end) of h the right limit F(h+) is a constant v,
  // and F(h+) > 1 - h there iff h > 1 - v.
  std::vector<double> bounds{0.0};
  for (const auto& s : f.steps())
    if (s.at > 0.0) bounds.push_back(s.at);
  bounds.push_back(std::numeric_limits<double>::infinity());

  double best = 1.0;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const double start = bounds[k];
    if (start >= best) break;
    const double end = bounds[k + 1];
    const double v = f.right_limit(start);
    const double candidate = std::max(start, 1.0 - v);
    if (candidate < end) best = std::min(best, candidate);
  }
  return {best};
}

VerificationReport weak_convergence_check(std::span<const DistFn> seq,
                                          const DistFn& limit, double tol) {
  VerificationReport report;
  report.check = "weak_convergence";
  report.samples = seq.size();
  if (seq.empty()) throw InvalidArgument("weak convergence of an empty sequence");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be > 0");

  const std::size_t tail_start = seq.size() - std::max<std::size_t>(seq.size() / 4, 1);

  // Metric criterion.
  double worst_metric = 0.0;
  for (std::size_t n = tail_start; n < seq.size(); ++n)
    worst_metric = std::max(worst_metric, sibley(seq[n], limit, tol * 1e-3).value);
  const bool metric_converges = worst_metric < tol;

  // Pointwise criterion at continuity points of the limit, kept at least tol
  // away from its jumps.
  const auto jumps = limit.breakpoints();
  const double reach = std::max(1.0, jumps.empty() ? 0.0 : jumps.back()) + 1.0;
  std::vector<double> points{-0.5};
  constexpr int kPoints = 64;
  for (int k = 1; k <= kPoints; ++k) {
    const double x = reach * k / kPoints;
    const bool near_jump = std::any_of(jumps.begin(), jumps.end(), [&](double b) {
      return std::abs(x - b) < tol;
    });
    if (!near_jump && x >= tol) points.push_back(x);
  }
  double worst_point_gap = 0.0;
  double worst_x = 0.0;
  for (double x : points)
    for (std::size_t n = tail_start; n < seq.size(); ++n) {
      const double gap = std::abs(seq[n](x) - limit(x));
      if (gap > worst_point_gap) {
        worst_point_gap = gap;
        worst_x = x;
      }
    }
  const bool pointwise_converges = worst_point_gap <= tol;

  const double final_distance = sibley(seq.back(), limit, tol * 1e-3).value;
  report.worst_margin = tol - worst_metric;
  report.details["converges"] = metric_converges && pointwise_converges;
  report.details["metric_converges"] = metric_converges;
  report.details["pointwise_converges"] = pointwise_converges;
  report.details["final_distance"] = final_distance;
  report.details["tail_start"] = tail_start + 1;
  report.details["continuity_points"] = points.size();
  if (metric_converges != pointwise_converges) {
    std::ostringstream os;
    os.precision(17);
    os << "criteria disagree: tail d_S max " << worst_metric
       << ", pointwise gap " << worst_point_gap << " at x = " << worst_x;
    report.fail(os.str());
  }
  return report;
}

}  // namespace pns
