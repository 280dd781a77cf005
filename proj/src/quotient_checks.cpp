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

#include "pnspace/error.hpp"
#include "pnspace/quotient.hpp"

namespace pns {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool in_kernel(const NormedView& space, const Vector& p, double resolution) {
  const DistFn f = space.norm(p);
  if (resolution == 0.0) return f.is_eps0();
  return sibley_to_eps0(f).value <= resolution;
}

Json vector_json(const Vector& p) {
  Json j = Json::array();
  for (double x : p.coords()) j.push_back(x);
  return j;
}

}  // namespace

VerificationReport closedness_probe(const QuotientSpace& q, const std::vector<Vector>& probes,
                                    std::size_t horizon) {
  if (horizon < 1) throw InvalidArgument("closedness_probe needs horizon >= 1");
  VerificationReport report{.check = "closedness"};
  const double threshold = 1.0 / static_cast<double>(horizon);
  const bool c00 = q.subspace().is_c00_sum_kernel();
  const NormedView witnesses = c00 ? c00_witness_view(q, horizon) : NormedView{};
  report.details["horizon"] = horizon;
  report.details["threshold"] = threshold;
  Json rows = Json::array();
  MarginTracker tracker;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const Vector& p = probes[i];
    if (q.subspace().contains(p))
      throw InvalidArgument("closedness probe " + p.describe() + " lies in W");
    const DistFn nu = c00 ? witnesses.norm(p) : q.norm(p);
    const double estimate = sibley_to_eps0(nu).value;
    Json row;
    row["probe"] = vector_json(p);
    row["estimate"] = estimate;
    if (!c00 && q.ambient().rule() == RuleKind::unit_step)
      row["distance"] = dist_to_subspace(p, q.subspace(), q.ambient().norm_kind());
    rows.push_back(row);
    tracker.observe(estimate - threshold, i, [&] {
      return "probe " + p.describe() + " not in W has d_S(nu-bar, eps0) ~ " + fmt(estimate);
    });
    ++report.samples;
  }
  report.details["probes"] = rows;
  tracker.finish(report, "N1 fails, W is not closed and the quotient is only PPN");
  report.details["n1_fails"] = tracker.violated();
  return report;
}

KernelResult kernel_C(const NormedView& space, const std::vector<Vector>& candidates,
                      double resolution, std::uint64_t seed) {
  if (resolution < 0.0) throw InvalidArgument("kernel_C resolution must be >= 0");
  KernelResult out;
  out.report.check = "kernel_C";
  out.report.seed = seed;
  out.report.details["resolution"] = resolution;
  for (const Vector& p : candidates)
    if (in_kernel(space, p, resolution)) out.members.push_back(p);

  Rng rng(seed);
  const auto& m = out.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      ++out.report.samples;
      if (!in_kernel(space, m[i] + m[j], resolution))
        out.report.fail("sum " + m[i].describe() + " + " + m[j].describe() + " leaves C");
    }
    for (double alpha : {-1.0, 0.0, rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}) {
      ++out.report.samples;
      if (!in_kernel(space, alpha * m[i], resolution))
        out.report.fail("multiple " + fmt(alpha) + " * " + m[i].describe() + " leaves C");
    }
  }
  out.report.details["members"] = m.size();
  return out;
}

VerificationReport remark_coincidence_check(const NormedView& space,
                                            const std::vector<Vector>& kernel,
                                            std::size_t samples, std::uint64_t seed,
                                            double resolution) {
  VerificationReport report{.check = "remark_coincidence"};
  report.seed = seed;
  Rng rng(seed);
  std::vector<Vector> c = kernel;
  c.push_back(Vector{});
  MarginTracker upper, lower;
  for (std::size_t k = 0; k < samples; ++k) {
    const Vector p = space.sample(rng);
    const Vector& r = c[k % c.size()];
    const DistFn nu_p = space.norm(p);
    std::vector<DistFn> family;
    for (const Vector& s : c) family.push_back(space.norm(p + s));
    const DistFn nu_bar = df_pointwise_sup(family);
    const DistFn nu_pr = space.norm(p + r);
    upper.observe(leq_margin(nu_p, nu_bar), k, [&] {
      return "nu_p > nu-bar_{p+C} at p = " + p.describe();
    });
    // C is only eps0 up to `resolution`, which bounds the shift.
    lower.observe(leq_margin(nu_pr, nu_p) + resolution, k, [&] {
      return "nu_{p+r} > nu_p at p = " + p.describe() + ", r = " + r.describe();
    });
    ++report.samples;
  }
  upper.finish(report, "sup over C falls below nu_p");
  lower.finish(report, "translate by C raises the norm");
  return report;
}

std::optional<Vector> representative_in_neighborhood(const QuotientSpace& q, const Vector& p,
                                                     double t, const Vector& other) {
  if (t <= 0.0) throw InvalidArgument("neighborhood radius must be positive");
  const DistFn nu_bar = q.norm(other - p);
  if (!(nu_bar.eval(t) > 1.0 - t)) return std::nullopt;
  const Vector rep = p + nearest_representative(q, other - p);
  if (!in_strong_neighborhood(q.ambient().view(), p, t, rep)) return std::nullopt;
  return rep;
}

VerificationReport projection_check(const QuotientSpace& q, std::size_t samples,
                                    std::uint64_t seed) {
  if (!q.exact()) throw Unsupported("projection_check needs the exact quotient strategy");
  const PNSpace& v = q.ambient();
  const NormedView ambient = v.view();
  Rng rng(seed);

  VerificationReport bounded{.check = "strongly_bounded"};
  VerificationReport forward{.check = "open_forward"};
  VerificationReport backward{.check = "open_backward"};
  MarginTracker t_bounded, t_forward(std::numeric_limits<double>::min()),
      t_backward(std::numeric_limits<double>::min());
  std::size_t forward_hits = 0, backward_hits = 0;

  for (std::size_t k = 0; k < samples; ++k) {
    const Vector p = v.sample(rng);
    const double t = k % 7 == 6 ? rng.uniform(1.0, 2.0) : rng.uniform(0.05, 1.0);
    Vector other;
    switch (k % 3) {
      case 0: other = p + rng.uniform(0.0, 0.3) * v.sample(rng); break;
      case 1: other = p + rng.uniform(0.0, 0.3) * v.sample(rng) + q.subspace().sample(rng, 10.0); break;
      default: other = v.sample(rng); break;
    }
    other = other.resized(v.dim());

    const DistFn nu = v.norm(p);
    const DistFn nu_bar = q.norm(p);
    t_bounded.observe(leq_margin(nu, nu_bar), k, [&] {
      return "nu_p exceeds nu-bar at p = " + p.describe();
    });
    ++bounded.samples;

    const auto describe = [&] {
      return "p = " + p.describe() + ", q = " + other.describe() + ", t = " + fmt(t);
    };
    const double quotient_slack = q.norm(other - p).eval(t) - (1.0 - t);
    if (in_strong_neighborhood(ambient, p, t, other)) {
      ++forward_hits;
      t_forward.observe(quotient_slack, k, describe);
    }
    ++forward.samples;
    if (quotient_slack > 0.0) {
      ++backward_hits;
      const auto rep = representative_in_neighborhood(q, p, t, other);
      double margin = -1.0;
      if (rep && coset_equal(*rep, other, q.subspace()))
        margin = v.norm(*rep - p).eval(t) - (1.0 - t);
      t_backward.observe(margin, k, describe);
    }
    ++backward.samples;
  }
  t_bounded.finish(bounded, "projection is not strongly bounded");
  t_forward.finish(forward, "pi(N_p(t)) escapes N'(t)");
  t_backward.finish(backward, "coset in N'(t) without a representative in N_p(t)");
  forward.details["hits"] = forward_hits;
  backward.details["hits"] = backward_hits;

  VerificationReport report{.check = "projection"};
  report.seed = seed;
  report.absorb(bounded);
  report.absorb(forward);
  report.absorb(backward);
  return report;
}

}  // namespace pns
