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

#include "pnspace/complete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::size_t entry_limit(const PointSequence& seq, const CauchyOptions& options) {
  return options.max_entry ? options.max_entry : seq.horizon / 2;
}

void check_grid(const std::vector<double>& grid, const PointSequence& seq) {
  if (seq.horizon < 2) throw InvalidArgument("sequence horizon must be >= 2");
  if (grid.empty()) throw InvalidArgument("lambda grid is empty");
  for (double l : grid)
    if (!(l > 0.0)) throw InvalidArgument("lambda values must be positive");
}

double slack(const DistFn& f, double lambda) { return f.eval(lambda) - (1.0 - lambda); }

double target_radius(const std::vector<double>& deltas, std::size_t n) {
  // n is 1-based; delta_0 plays no role because the first target is 1.
  if (n == 1) return 1.0;
  return std::min(1.0 / static_cast<double>(n), deltas[n - 2]);
}

// Worst margin target - d_S(tau(F, G), eps0) over sampled pairs from B(eps0; delta).
double ball_margin(const TriangleFn& tau, double delta, double target, std::size_t samples,
                   Rng& rng, std::string& witness) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    const DistFn f = sample_ball_member(rng, delta);
    const DistFn g = sample_ball_member(rng, delta);
    const double d = sibley_to_eps0(tau(f, g)).value;
    if (target - d < worst) {
      worst = target - d;
      if (!(worst > 0.0))
        witness = "tau(" + f.describe() + ", " + g.describe() + ") at distance " + fmt(d);
    }
  }
  return worst;
}

}  // namespace

std::vector<Vector> PointSequence::terms() const {
  std::vector<Vector> out;
  out.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) out.push_back(rule(n));
  return out;
}

PointSequence reciprocal_sequence(Vector base, Vector direction, std::size_t horizon) {
  return {"reciprocal",
          [base, direction](std::size_t n) {
            return base + (1.0 / static_cast<double>(n)) * direction;
          },
          horizon};
}

PointSequence alternating_sequence(Vector v, std::size_t horizon) {
  return {"alternating",
          [v](std::size_t n) { return (n % 2 ? -1.0 : 1.0) * v; },
          horizon};
}

PointSequence geometric_sequence(Vector base, Vector v, double ratio, std::size_t horizon) {
  return {"geometric",
          [base, v, ratio](std::size_t n) {
            return base + std::pow(ratio, static_cast<double>(n)) * v;
          },
          horizon};
}

PointSequence custom_affine_sequence(Vector offset, std::vector<double> matrix,
                                     std::size_t horizon) {
  if (matrix.size() % kAffineFeatures != 0)
    throw InvalidArgument("custom-affine matrix must have " +
                          std::to_string(kAffineFeatures) + " columns");
  const std::size_t rows = matrix.size() / kAffineFeatures;
  if (offset.support() > rows)
    throw InvalidArgument("custom-affine offset is longer than the matrix");
  return {"custom-affine",
          [offset, matrix, rows](std::size_t n) {
            const double x = static_cast<double>(n);
            const double phi[kAffineFeatures] = {x, 1.0 / x, n % 2 ? -1.0 : 1.0, std::sin(x),
                                                 std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n, 2000)))};
            std::vector<double> c(rows);
            for (std::size_t i = 0; i < rows; ++i) {
              c[i] = offset[i];
              for (std::size_t j = 0; j < kAffineFeatures; ++j)
                c[i] += matrix[i * kAffineFeatures + j] * phi[j];
            }
            return Vector(std::move(c));
          },
          horizon};
}

PointSequence explicit_sequence(std::string name, std::vector<Vector> terms) {
  const std::size_t h = terms.size();
  return {std::move(name),
          [terms = std::move(terms)](std::size_t n) { return terms.at(n - 1); },
          h};
}

VerificationReport is_strong_cauchy(const NormedView& space, const PointSequence& seq,
                                    const std::vector<double>& lambda_grid,
                                    const CauchyOptions& options) {
  check_grid(lambda_grid, seq);
  const std::size_t limit = entry_limit(seq, options);
  const std::vector<Vector> p = seq.terms();
  const std::size_t h = p.size();

  VerificationReport report{.check = "strong_cauchy"};
  std::vector<std::size_t> entry(lambda_grid.size(), 1);
  std::vector<std::pair<std::size_t, std::size_t>> last_bad(lambda_grid.size());
  for (std::size_t m = 0; m < h; ++m) {
    for (std::size_t n = m + 1; n < h; ++n) {
      const DistFn f = space.norm(p[n] - p[m]);
      ++report.samples;
      for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
        const double s = slack(f, lambda_grid[k]);
        if (!(s > 0.0) && m + 2 > entry[k]) {
          entry[k] = m + 2;
          last_bad[k] = {m + 1, n + 1};
        }
        if (m + 1 >= limit && s < report.worst_margin) report.worst_margin = s;
      }
    }
  }
  Json table = Json::array();
  for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
    table.push_back({{"lambda", lambda_grid[k]}, {"N", entry[k]}});
    if (entry[k] > limit)
      report.fail("pair (" + std::to_string(last_bad[k].first) + ", " +
                  std::to_string(last_bad[k].second) + ") of " + seq.name +
                  " is not lambda-close for lambda = " + fmt(lambda_grid[k]) +
                  "; N(lambda) = " + std::to_string(entry[k]) + " > " +
                  std::to_string(limit));
  }
  report.details["sequence"] = seq.name;
  report.details["horizon"] = h;
  report.details["entry_limit"] = limit;
  report.details["N"] = table;
  return report;
}

VerificationReport strong_limit_check(const NormedView& space, const PointSequence& seq,
                                      const Vector& candidate,
                                      const std::vector<double>& lambda_grid,
                                      const CauchyOptions& options) {
  check_grid(lambda_grid, seq);
  const std::size_t limit = entry_limit(seq, options);
  VerificationReport report{.check = "strong_limit"};
  std::vector<std::size_t> entry(lambda_grid.size(), 1);
  for (std::size_t n = 1; n <= seq.horizon; ++n) {
    const DistFn f = space.norm(seq.at(n) - candidate);
    ++report.samples;
    for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
      const double s = slack(f, lambda_grid[k]);
      if (!(s > 0.0)) entry[k] = n + 1;
      if (n >= limit && s < report.worst_margin) report.worst_margin = s;
    }
  }
  Json table = Json::array();
  for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
    table.push_back({{"lambda", lambda_grid[k]}, {"N", entry[k]}});
    if (entry[k] > limit)
      report.fail(seq.name + " has not entered N(" + candidate.describe() + ", " +
                  fmt(lambda_grid[k]) + ") by index " + std::to_string(limit) +
                  " (entry " + std::to_string(entry[k]) + ")");
  }
  report.details["sequence"] = seq.name;
  report.details["candidate"] = candidate.describe();
  report.details["entry_limit"] = limit;
  report.details["N"] = table;
  return report;
}

namespace {

QuotientEvaluation settled(const QuotientSpace& q, const Vector& p) {
  QuotientEvaluation e = q.evaluate(p);
  if (!e.converged)
    throw Inconclusive<Vector>("quotient norm of " + p.describe() + " did not settle",
                               e.representative);
  return e;
}

}  // namespace

Vector lift_representative(const QuotientSpace& q, const Vector& p, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("lift_representative needs eps > 0");
  const QuotientEvaluation e = settled(q, p);
  const double target = sibley_to_eps0(e.value).value + eps;
  const Vector& rep = e.representative;
  if (sibley_to_eps0(q.ambient().norm(rep)).value < target && coset_equal(rep, p, q.subspace()))
    return rep;
  throw Inconclusive<Vector>("no representative of " + p.describe() + " within " + fmt(eps) +
                                 " of the quotient value",
                             rep);
}

Vector lift_with_floor(const QuotientSpace& q, const Vector& p, const DistFn& g) {
  if (g.is_eps0()) throw InvalidArgument("lift_with_floor needs G != eps0");
  const QuotientEvaluation e = settled(q, p);
  if (leq_margin(g, e.value) < 0.0)
    throw InvalidArgument("lift_with_floor: nu-bar_{p+W} >= G fails at p = " + p.describe());
  const DistFn target = q.ambient().tau()(e.value, g);
  const auto accept = [&](const Vector& rep) {
    return leq_margin(target, q.ambient().norm(rep)) >= 0.0 && coset_equal(rep, p, q.subspace());
  };
  if (q.subspace().is_c00_sum_kernel()) {
    // Smallest witness that clears the floor.
    for (std::size_t n = 1; n <= q.schedule().c00_horizon; ++n) {
      Vector rep = p - q.subspace().c00_witness(p, n);
      if (accept(rep)) return rep;
    }
  } else if (accept(e.representative)) {
    return e.representative;
  }
  throw Inconclusive<Vector>("no representative of " + p.describe() + " clears the floor",
                             e.representative);
}

DistFn sample_ball_member(Rng& rng, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("ball radius must be positive");
  while (true) {
    DistFn f;
    if (rng.index(3) == 0) {
      f = DistFn::unit_step(delta * rng.uniform());
    } else {
      const std::size_t k = 1 + rng.index(3);
      const double top = 1.0 - std::min(delta, 1.0) * rng.uniform();
      std::vector<double> at(k), level(k);
      for (auto& a : at) a = delta * rng.uniform();
      for (auto& v : level) v = top * (1.0 - rng.uniform());
      std::sort(at.begin(), at.end());
      std::sort(level.begin(), level.end());
      level.back() = top;
      std::vector<Step> steps;
      for (std::size_t i = 0; i < k; ++i) steps.push_back({at[i], level[i]});
      if (top < 1.0 && rng.index(2) == 0) steps.push_back({delta + 2.0 * rng.uniform(), 1.0});
      f = DistFn::from_sorted_unchecked(std::move(steps));
    }
    // Guard against rounding at the boundary of the open ball.
    if (sibley_to_eps0(f).value < delta) return f;
  }
}

DeltaSchedule build_delta_schedule(const TriangleFn& tau, std::size_t depth,
                                   std::size_t samples_per_ball, std::uint64_t seed) {
  if (depth < 1) throw InvalidArgument("delta schedule depth must be >= 1");
  if (samples_per_ball < 1) throw InvalidArgument("delta schedule needs samples per ball >= 1");
  Rng rng(seed);
  DeltaSchedule out;
  out.evidence.check = "delta_schedule";
  out.evidence.seed = seed;
  Json levels = Json::array();
  double previous = 1.0;
  for (std::size_t n = 1; n <= depth; ++n) {
    const double target = target_radius(out.deltas, n);
    double candidate = previous / 2.0;
    std::size_t halvings = 0;
    while (true) {
      std::string witness;
      const double margin = ball_margin(tau, candidate, target, samples_per_ball, rng, witness);
      out.evidence.samples += samples_per_ball;
      if (margin > 0.0) {
        out.evidence.worst_margin = std::min(out.evidence.worst_margin, margin);
        break;
      }
      candidate /= 2.0;
      ++halvings;
      if (candidate < 1e-12) {
        out.evidence.fail("delta underflow at level " + std::to_string(n) + ": " + witness);
        throw Inconclusive<DeltaSchedule>(
            "delta schedule underflow at level " + std::to_string(n) +
                "; tau is too weak at the sampled resolution",
            out);
      }
    }
    out.deltas.push_back(candidate);
    previous = candidate;
    levels.push_back({{"n", n}, {"delta", candidate}, {"target", target}, {"halvings", halvings}});
  }
  out.evidence.details["levels"] = levels;
  return out;
}

VerificationReport validate_delta_schedule(const TriangleFn& tau, const DeltaSchedule& schedule,
                                           std::size_t samples_per_ball, std::uint64_t seed) {
  VerificationReport report{.check = "delta_schedule_validation"};
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < schedule.deltas.size(); ++i) {
    if (i > 0 && !(schedule.deltas[i] < schedule.deltas[i - 1]))
      report.fail("deltas are not strictly decreasing at level " + std::to_string(i + 1));
    std::string witness;
    const double target = target_radius(schedule.deltas, i + 1);
    const double margin =
        ball_margin(tau, schedule.deltas[i], target, samples_per_ball, rng, witness);
    report.samples += samples_per_ball;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (!(margin > 0.0)) report.fail("level " + std::to_string(i + 1) + ": " + witness);
  }
  return report;
}

LiftedSequence lift_cauchy_sequence(const QuotientSpace& q, const PointSequence& seq,
                                    const DeltaSchedule& schedule) {
  const auto& delta = schedule.deltas;
  if (delta.empty()) throw InvalidArgument("lift_cauchy_sequence needs a non-empty schedule");
  const NormedView quotient = q.view();
  const VerificationReport pre =
      is_strong_cauchy(quotient, seq, {delta.front()}, {.max_entry = seq.horizon - 1});
  if (!pre.passed())
    throw InvalidArgument("quotient sequence is not strong Cauchy: " + pre.witness);

  const std::vector<Vector> a = seq.terms();
  const std::size_t h = a.size();
  // D[m][n] = d_S(nu-bar_{a_m - a_n}, eps0), m < n (0-based).
  std::vector<std::vector<double>> dist(h, std::vector<double>(h, 0.0));
  for (std::size_t m = 0; m < h; ++m)
    for (std::size_t n = m + 1; n < h; ++n)
      dist[m][n] = dist[n][m] = sibley_to_eps0(q.norm(a[m] - a[n])).value;
  // Least 1-based N with every pair at or beyond N closer than d.
  const auto entry = [&](double d) {
    std::size_t e = 1;
    for (std::size_t m = 0; m < h; ++m)
      for (std::size_t n = m + 1; n < h; ++n)
        if (!(dist[m][n] < d)) e = std::max(e, m + 2);
    return e;
  };

  LiftedSequence out;
  const std::size_t depth = delta.size();
  for (std::size_t i = 1; i <= depth; ++i) {
    const double d = delta[std::min(i, depth - 1)];
    std::size_t n = entry(d);
    if (!out.indices.empty()) n = std::max(n, out.indices.back() + 1);
    if (n > h)
      throw Inconclusive<LiftedSequence>("horizon " + std::to_string(h) +
                                             " exhausted while selecting subsequence term " +
                                             std::to_string(i),
                                         out);
    out.indices.push_back(n);
  }

  VerificationReport subsequence{.check = "subsequence"};
  VerificationReport lift{.check = "lift"};
  VerificationReport chain{.check = "cauchy_chain"};
  MarginTracker t_sub(std::numeric_limits<double>::min()), t_lift(std::numeric_limits<double>::min()),
      t_chain(std::numeric_limits<double>::min());

  out.points.push_back(q.project(a[out.indices[0] - 1]));
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const double bound = delta[i + 1];
    const std::size_t ni = out.indices[i], nj = out.indices[i + 1];
    t_sub.observe(bound - dist[ni - 1][nj - 1], i, [&] {
      return "d_S(nu-bar_{a_" + std::to_string(ni) + " - a_" + std::to_string(nj) +
             "}, eps0) = " + fmt(dist[ni - 1][nj - 1]);
    });
    ++subsequence.samples;

    const Vector& x = out.points.back();
    const Vector y = x - a[nj - 1];
    const double d = sibley_to_eps0(q.norm(y)).value;
    if (!(bound - d > 0.0)) {
      lift.fail("quotient distance " + fmt(d) + " already exceeds delta_" + std::to_string(i + 2));
      break;
    }
    const Vector step = lift_representative(q, y, bound - d);
    Vector next = x - step;
    const double ds = sibley_to_eps0(q.ambient().norm(x - next)).value;
    t_lift.observe(bound - ds, i, [&] {
      return "d_S(nu_{x_" + std::to_string(i + 1) + " - x_" + std::to_string(i + 2) + "}, eps0) = " +
             fmt(ds);
    });
    if (!coset_equal(next, a[nj - 1], q.subspace()))
      lift.fail("x_" + std::to_string(i + 2) + " left the coset of a_" + std::to_string(nj));
    ++lift.samples;
    out.points.push_back(std::move(next));
  }
  for (std::size_t n = 0; n < out.points.size(); ++n) {
    for (std::size_t m = n + 1; m < out.points.size(); ++m) {
      const double ds = sibley_to_eps0(q.ambient().norm(out.points[m] - out.points[n])).value;
      t_chain.observe(1.0 / static_cast<double>(n + 1) - ds, n, [&] {
        return "d_S(nu_{x_" + std::to_string(m + 1) + " - x_" + std::to_string(n + 1) +
               "}, eps0) = " + fmt(ds);
      });
      ++chain.samples;
    }
  }
  t_sub.finish(subsequence, "subsequence gap not below delta");
  t_lift.finish(lift, "lift step not below delta");
  t_chain.finish(chain, "lifted sequence breaks d_S < 1/n");

  out.report.check = "lift_cauchy_sequence";
  Json idx = Json::array();
  for (std::size_t n : out.indices) idx.push_back(n);
  out.report.details["indices"] = idx;
  out.report.absorb(subsequence);
  out.report.absorb(lift);
  out.report.absorb(chain);
  return out;
}

}  // namespace pns
