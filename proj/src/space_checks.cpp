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
#include "pnspace/space.hpp"

namespace pns {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double equality_margin(const DistFn& a, const DistFn& b) {
  return std::min(leq_margin(a, b), leq_margin(b, a));
}

// Endpoints exercise the identity of tau*.
double sample_alpha(Rng& rng, std::size_t k) {
  switch (k % 4) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return 0.5;
    default: return rng.uniform();
  }
}

}  // namespace

VerificationReport check_axioms(const NormedView& space, const AxiomOptions& options) {
  if (options.samples < 1) throw InvalidArgument("check_axioms needs samples >= 1");
  Rng rng(options.seed);

  VerificationReport n1{.check = "N1"};
  VerificationReport n2{.check = "N2"};
  VerificationReport n3{.check = "N3"};
  VerificationReport n4{.check = "N4"};

  // N1, theta half.
  const Vector theta = Vector::zero(space.dim);
  const DistFn nu_theta = space.norm(theta);
  if (!nu_theta.is_eps0()) {
    n1.worst_margin = -sibley_to_eps0(nu_theta).value;
    n1.fail("nu_theta = " + nu_theta.describe() + " != eps0");
  }
  // Strictly positive margin required on p != theta.
  MarginTracker t1(std::numeric_limits<double>::min());
  MarginTracker t2, t3, t4;

  const std::size_t total = options.extra_points.size() + options.samples;
  for (std::size_t k = 0; k < total; ++k) {
    Vector p, q;
    if (k < options.extra_points.size()) {
      p = q = options.extra_points[k];
    } else {
      p = space.sample(rng);
      q = space.sample(rng);
    }
    const double alpha = sample_alpha(rng, k);
    const DistFn nu_p = space.norm(p);
    const DistFn nu_q = space.norm(q);

    if (!options.ppn_only && !space.is_null(p)) {
      const double d = sibley_to_eps0(nu_p).value;
      t1.observe(d, k, [&] { return "p=" + p.describe() + " has nu_p = eps0"; });
    }

    const DistFn nu_minus = space.norm(-p);
    t2.observe(equality_margin(nu_minus, nu_p), k, [&] {
      return "p=" + p.describe() + " nu_p=" + nu_p.describe() + " nu_-p=" + nu_minus.describe();
    });

    const DistFn lower = space.tau(nu_p, nu_q);
    const DistFn nu_sum = space.norm(p + q);
    t3.observe(leq_margin(lower, nu_sum), k, [&] {
      return "p=" + p.describe() + " q=" + q.describe() + " nu_{p+q}=" + nu_sum.describe() +
             " tau(nu_p,nu_q)=" + lower.describe();
    });

    const DistFn upper = space.tau_star(space.norm(alpha * p), space.norm((1.0 - alpha) * p));
    t4.observe(leq_margin(nu_p, upper), k, [&] {
      return "p=" + p.describe() + " alpha=" + fmt(alpha) + " nu_p=" + nu_p.describe() +
             " tau*(...)=" + upper.describe();
    });
  }

  for (auto* r : {&n1, &n2, &n3, &n4}) {
    r->samples = total;
    r->seed = options.seed;
  }
  if (!options.ppn_only) t1.finish(n1, "nu_p = eps0 for p != theta");
  t2.finish(n2, "nu_{-p} != nu_p");
  t3.finish(n3, "nu_{p+q} >= tau(nu_p, nu_q) fails");
  t4.finish(n4, "nu_p <= tau*(nu_{alpha p}, nu_{(1-alpha) p}) fails");
  if (options.ppn_only) n1.details["mode"] = "ppn: nu_theta = eps0 only";

  VerificationReport report;
  report.check = options.ppn_only ? "ppn_axioms" : "axioms";
  report.seed = options.seed;
  report.details["space"] = space.name;
  for (auto* r : {&n1, &n2, &n3, &n4}) report.absorb(*r);
  report.samples = total;
  return report;
}

VerificationReport check_serstnev(const NormedView& space, std::size_t samples,
                                  std::uint64_t seed) {
  VerificationReport report;
  report.check = "serstnev";
  report.samples = samples;
  report.seed = seed;
  const TriangleFn tau_m = TriangleFn::tau_M();
  Rng rng(seed);
  MarginTracker split, scale;
  for (std::size_t k = 0; k < samples; ++k) {
    const Vector p = space.sample(rng);
    const double alpha = sample_alpha(rng, k);
    const DistFn nu_p = space.norm(p);
    const DistFn rhs = tau_m(space.norm(alpha * p), space.norm((1.0 - alpha) * p));
    split.observe(equality_margin(nu_p, rhs), k, [&] {
      return "p=" + p.describe() + " alpha=" + fmt(alpha) + " nu_p=" + nu_p.describe() +
             " tau_M(...)=" + rhs.describe();
    });

    double lambda = rng.uniform(-3.0, 3.0);
    if (lambda == 0.0) lambda = 1.0;
    const DistFn lhs = space.norm(lambda * p);
    const DistFn want = nu_p.is_eps0() ? nu_p : nu_p.rescaled(std::abs(lambda));
    scale.observe(equality_margin(lhs, want), k, [&] {
      return "p=" + p.describe() + " lambda=" + fmt(lambda) + " nu_{lambda p}=" +
             lhs.describe() + " nu_p(j/|lambda|)=" + want.describe();
    });
  }
  split.finish(report, "nu_p != tau_M(nu_{alpha p}, nu_{(1-alpha) p})");
  scale.finish(report, "nu_{lambda p} != nu_p(j/|lambda|)");
  report.details["split_margin"] = json_number(split.worst());
  report.details["scaling_margin"] = json_number(scale.worst());
  return report;
}

bool in_strong_neighborhood(const NormedView& space, const Vector& p, double t,
                            const Vector& q) {
  if (!(t > 0.0)) throw InvalidArgument("neighborhood radius t must be > 0");
  return space.norm(q - p).eval(t) > 1.0 - t;
}

VectorMap matrix_map(std::size_t rows, std::size_t cols, std::vector<double> entries) {
  if (entries.size() != rows * cols)
    throw InvalidArgument("matrix needs rows * cols entries");
  return [rows, cols, a = std::move(entries)](const Vector& p) {
    if (p.size() > cols && p.support() > cols)
      throw InvalidArgument("vector has more coordinates than matrix columns");
    std::vector<double> out(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[i] += a[i * cols + j] * p[j];
    return Vector(std::move(out));
  };
}

VerificationReport check_strongly_bounded(const VectorMap& map, double k,
                                          const NormedView& source,
                                          const NormedView& target,
                                          std::size_t samples, std::uint64_t seed) {
  if (!(k > 0.0)) throw InvalidArgument("strong-boundedness constant k must be > 0");
  VerificationReport report;
  report.check = "strongly_bounded(k=" + fmt(k) + ")";
  report.samples = samples;
  report.seed = seed;
  Rng rng(seed);
  MarginTracker tracker;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vector p = source.sample(rng);
    const DistFn image = target.norm(map(p));
    const DistFn bound = source.norm(p).rescaled(k);
    tracker.observe(leq_margin(bound, image), i, [&] {
      return "p=" + p.describe() + " nu'_{Tp}=" + image.describe() +
             " nu_p(x/k)=" + bound.describe();
    });
  }
  tracker.finish(report, "nu'_{Tp}(x) >= nu_p(x/k) fails");
  return report;
}

VerificationReport check_lemma_alpha(const NormedView& space, std::size_t samples,
                                     std::uint64_t seed) {
  VerificationReport report;
  report.check = "lemma_alpha";
  report.samples = samples;
  report.seed = seed;
  Rng rng(seed);
  MarginTracker tracker;
  for (std::size_t k = 0; k < samples; ++k) {
    const Vector p = space.sample(rng);
    double alpha = rng.uniform(-3.0, 3.0);
    double beta = rng.uniform(-3.0, 3.0);
    if (std::abs(alpha) > std::abs(beta)) std::swap(alpha, beta);
    if (k % 5 == 0) alpha = 0.0;
    if (k % 5 == 1) alpha = beta;
    const DistFn big = space.norm(beta * p);
    const DistFn small = space.norm(alpha * p);
    tracker.observe(leq_margin(big, small), k, [&] {
      return "p=" + p.describe() + " alpha=" + fmt(alpha) + " beta=" + fmt(beta);
    });
  }
  tracker.finish(report, "nu_{beta p} <= nu_{alpha p} fails");
  return report;
}

}  // namespace pns
