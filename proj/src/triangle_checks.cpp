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

#include "pnspace/error.hpp"
#include "pnspace/triangle.hpp"

namespace pns {

std::vector<Quadruple> random_quadruples(Rng& rng, std::size_t count,
                                         const RandomDistFnOptions& options) {
  std::vector<Quadruple> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Quadruple q;
    q.f1 = random_distfn(rng, options);
    q.f2 = random_distfn(rng, options);
    q.g1 = random_distfn(rng, options);
    q.g2 = random_distfn(rng, options);
    out.push_back(std::move(q));
  }
  return out;
}

VerificationReport check_dominates(const TriangleFn& tau1, const TriangleFn& tau2,
                                   std::span<const Quadruple> quadruples) {
  VerificationReport report;
  report.check = "dominates(" + tau1.name() + ", " + tau2.name() + ")";
  report.samples = quadruples.size();
  MarginTracker tracker;
  for (std::size_t k = 0; k < quadruples.size(); ++k) {
    const auto& q = quadruples[k];
    const DistFn lhs = tau1(tau2(q.f1, q.g1), tau2(q.f2, q.g2));
    const DistFn rhs = tau2(tau1(q.f1, q.f2), tau1(q.g1, q.g2));
    tracker.observe(leq_margin(rhs, lhs), k, [&] {
      return "quadruple " + std::to_string(k) + ": F1=" + q.f1.describe() +
             " F2=" + q.f2.describe() + " G1=" + q.g1.describe() +
             " G2=" + q.g2.describe();
    });
  }
  tracker.finish(report, "interchange inequality violated");
  return report;
}

VerificationReport check_dominates(const TriangleFn& tau1, const TriangleFn& tau2,
                                   std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  const auto quads = random_quadruples(rng, samples, {.max_steps = 3, .dyadic = true});
  auto report = check_dominates(tau1, tau2, quads);
  report.seed = seed;
  return report;
}

VerificationReport check_archimedean(const TriangleFn& tau,
                                     std::span<const DistPair> pairs) {
  VerificationReport report;
  report.check = "archimedean(" + tau.name() + ")";
  report.samples = pairs.size();
  MarginTracker tracker;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [f, g] = pairs[k];
    if (f.is_eps_inf() || g.is_eps0())
      throw InvalidArgument("archimedean check requires F != eps_inf and G != eps0 (pair " +
                            std::to_string(k) + ")");
    const DistFn r = tau(f, g);
    double margin = leq_margin(r, f);
    // Equality is a failure too: the decrease must be strict somewhere.
    if (approx_equal(r, f)) margin = std::min(margin, -kAbscissaTol);
    tracker.observe(margin, k, [&] {
      return "pair " + std::to_string(k) + ": F=" + f.describe() + " G=" + g.describe() +
             " tau(F,G)=" + r.describe();
    });
  }
  tracker.finish(report, "tau(F,G) < F fails");
  return report;
}

VerificationReport check_sup_continuity(const TriangleFn& tau,
                                        std::span<const DistFn> family,
                                        const DistFn& g) {
  if (family.empty()) throw InvalidArgument("sup-continuity needs a nonempty family");
  VerificationReport report;
  report.check = "sup_continuity(" + tau.name() + ")";
  report.samples = family.size();
  std::vector<DistFn> images;
  images.reserve(family.size());
  for (const auto& f : family) images.push_back(tau(f, g));
  const DistFn lhs = df_pointwise_sup(images);
  const DistFn rhs = tau(df_pointwise_sup(family), g);
  const double margin = std::min(leq_margin(lhs, rhs), leq_margin(rhs, lhs));
  report.worst_margin = margin;
  report.details["sup_of_images"] = lhs.describe();
  report.details["image_of_sup"] = rhs.describe();
  if (margin < 0.0)
    report.fail("sup of images " + lhs.describe() + " != image of sup " + rhs.describe());
  return report;
}

VerificationReport check_triangle_order(const TriangleFn& tau,
                                        const TriangleFn& tau_star,
                                        std::size_t samples, std::uint64_t seed) {
  VerificationReport report;
  report.check = "order(" + tau.name() + " <= " + tau_star.name() + ")";
  report.samples = samples;
  report.seed = seed;
  Rng rng(seed);
  MarginTracker tracker;
  for (std::size_t k = 0; k < samples; ++k) {
    const DistFn f = random_distfn(rng, {.max_steps = 3, .dyadic = true});
    const DistFn g = random_distfn(rng, {.max_steps = 3, .dyadic = true});
    tracker.observe(leq_margin(tau(f, g), tau_star(f, g)), k, [&] {
      return "F=" + f.describe() + " G=" + g.describe();
    });
  }
  tracker.finish(report, "tau(F,G) <= tau*(F,G) fails");
  return report;
}

}  // namespace pns
