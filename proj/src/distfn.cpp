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

#include "pnspace/distfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Index of the first step with at >= x, i.e. the number of steps with at < x.
std::size_t count_below(std::span<const Step> steps, double x) {
  return static_cast<std::size_t>(
      std::lower_bound(steps.begin(), steps.end(), x,
                       [](const Step& s, double v) { return s.at < v; }) -
      steps.begin());
}

std::size_t count_at_or_below(std::span<const Step> steps, double x) {
  return static_cast<std::size_t>(
      std::upper_bound(steps.begin(), steps.end(), x,
                       [](double v, const Step& s) { return v < s.at; }) -
      steps.begin());
}

std::vector<double> merged_abscissas(const DistFn& f, const DistFn& g) {
  std::vector<double> xs;
  xs.reserve(f.steps().size() + g.steps().size());
  for (const auto& s : f.steps()) xs.push_back(s.at);
  for (const auto& s : g.steps()) xs.push_back(s.at);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

DistFn DistFn::from_steps(std::vector<Step> steps) {
  double prev_at = -kInf;
  double prev_value = 0.0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (!std::isfinite(s.at))
      throw InvalidArgument("step " + std::to_string(i) +
                            ": abscissa must be finite");
    if (s.at < 0.0)
      throw InvalidArgument("step " + std::to_string(i) +
                            ": negative abscissa, F must vanish on (-inf, 0]");
    if (!(s.at > prev_at))
      throw InvalidArgument("step " + std::to_string(i) +
                            ": abscissas must be strictly increasing");
    if (!(s.value >= 0.0 && s.value <= 1.0))
      throw InvalidArgument("step " + std::to_string(i) +
                            ": value outside [0, 1]");
    if (s.value < prev_value)
      throw InvalidArgument("step " + std::to_string(i) +
                            ": values must be nondecreasing");
    prev_at = s.at;
    prev_value = s.value;
  }
  return from_sorted_unchecked(std::move(steps));
}

DistFn DistFn::from_sorted_unchecked(std::vector<Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  double level = 0.0;
  for (auto s : steps) {
    s.value = std::clamp(s.value, 0.0, 1.0);
    if (s.value <= level) continue;
    if (!out.empty() && out.back().at == s.at) {
      out.back().value = s.value;
    } else {
      out.push_back(s);
    }
    level = s.value;
  }
  return DistFn(std::move(out));
}

DistFn DistFn::unit_step(double a) {
  if (std::isnan(a) || a < 0.0)
    throw InvalidArgument("unit step position must be >= 0 or +inf");
  if (std::isinf(a)) return DistFn{};
  return DistFn(std::vector<Step>{{a, 1.0}});
}

double DistFn::eval(double x) const {
  if (x == kInf) return 1.0;
  const std::size_t k = count_below(steps_, x);
  return k == 0 ? 0.0 : steps_[k - 1].value;
}

double DistFn::right_limit(double x) const {
  if (x == kInf) return 1.0;
  const std::size_t k = count_at_or_below(steps_, x);
  return k == 0 ? 0.0 : steps_[k - 1].value;
}

bool DistFn::is_eps0() const {
  return steps_.size() == 1 && steps_[0].at == 0.0 && steps_[0].value == 1.0;
}

std::vector<double> DistFn::breakpoints() const {
  std::vector<double> xs;
  xs.reserve(steps_.size());
  for (const auto& s : steps_) xs.push_back(s.at);
  return xs;
}

DistFn DistFn::rescaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw InvalidArgument("rescale factor must be positive and finite");
  std::vector<Step> out(steps_);
  for (auto& s : out) s.at *= factor;
  return from_sorted_unchecked(std::move(out));
}

DistFn DistFn::shifted(double shift) const {
  if (!(shift >= 0.0)) throw InvalidArgument("shift must be >= 0");
  if (std::isinf(shift)) return DistFn{};
  std::vector<Step> out(steps_);
  for (auto& s : out) s.at += shift;
  return from_sorted_unchecked(std::move(out));
}

std::string DistFn::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (steps_.empty()) return "eps_inf";
  if (steps_.size() == 1 && steps_[0].value == 1.0) {
    os << "eps_" << steps_[0].at;
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << steps_[i].at << ", " << steps_[i].value << ")";
  }
  os << "]";
  return os.str();
}

bool df_leq(const DistFn& f, const DistFn& g) {
  // F only rises at its own jumps and G is nondecreasing, so it suffices that
  // G has reached each level of F immediately to the right of where F does.
  for (const auto& s : f.steps())
    if (g.right_limit(s.at) < s.value) return false;
  return true;
}

DistFn df_pointwise_sup(const DistFn& f, const DistFn& g) {
  const auto xs = merged_abscissas(f, g);
  std::vector<Step> out;
  out.reserve(xs.size());
  for (double x : xs)
    out.push_back({x, std::max(f.right_limit(x), g.right_limit(x))});
  return DistFn::from_sorted_unchecked(std::move(out));
}

DistFn df_pointwise_sup(std::span<const DistFn> family) {
  if (family.empty())
    throw InvalidArgument("pointwise supremum of an empty family");
  DistFn acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i)
    if (!df_leq(family[i], acc)) acc = df_pointwise_sup(acc, family[i]);
  return acc;
}

DistFn df_pointwise_inf(const DistFn& f, const DistFn& g) {
  const auto xs = merged_abscissas(f, g);
  std::vector<Step> out;
  out.reserve(xs.size());
  for (double x : xs)
    out.push_back({x, std::min(f.right_limit(x), g.right_limit(x))});
  return DistFn::from_sorted_unchecked(std::move(out));
}

double leq_margin(const DistFn& f, const DistFn& g) {
  double margin = kInf;
  const auto gs = g.steps();
  for (const auto& s : f.steps()) {
    const auto it = std::find_if(gs.begin(), gs.end(), [&](const Step& t) {
      return t.value >= s.value - kValueTol;
    });
    if (it == gs.end()) return -kInf;
    margin = std::min(margin, s.at - it->at);
  }
  if (std::abs(margin) <= kAbscissaTol) margin = 0.0;
  return margin;
}

bool approx_equal(const DistFn& f, const DistFn& g, double tol) {
  return leq_margin(f, g) >= -tol && leq_margin(g, f) >= -tol;
}

double structural_distance(const DistFn& f, const DistFn& g) {
  const auto fs = f.steps();
  const auto gs = g.steps();
  if (fs.size() != gs.size()) return kInf;
  double worst = 0.0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (std::abs(fs[i].value - gs[i].value) > kValueTol) return kInf;
    worst = std::max(worst, std::abs(fs[i].at - gs[i].at));
  }
  return worst;
}

DistFn random_distfn(Rng& rng, const RandomDistFnOptions& options) {
  const std::size_t n = 1 + rng.index(std::max<std::size_t>(options.max_steps, 1));
  std::vector<double> xs(n);
  std::vector<double> vs(n);
  for (auto& x : xs)
    x = options.dyadic ? rng.dyadic(0.0, options.max_abscissa)
                       : rng.uniform(0.0, options.max_abscissa);
  for (auto& v : vs) v = options.dyadic ? rng.dyadic(0.0, 1.0) + 1.0 / 64 : rng.uniform();
  std::sort(xs.begin(), xs.end());
  std::sort(vs.begin(), vs.end());
  if (options.d_plus || rng.uniform() < 0.5) vs.back() = 1.0;
  std::vector<Step> steps;
  for (std::size_t i = 0; i < n; ++i) steps.push_back({xs[i], vs[i]});
  return DistFn::from_sorted_unchecked(std::move(steps));
}

}  // namespace pns
