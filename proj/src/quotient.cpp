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

#include "pnspace/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

namespace {

// Grid size the sampled strategy is willing to visit.
constexpr double kMaxGridPoints = 2e7;

bool antitone_in_norm(const PNSpace& space) {
  return space.rule() == RuleKind::unit_step || space.rule() == RuleKind::serstnev ||
         space.rule() == RuleKind::squared;
}

}  // namespace

const char* to_string(QuotientStrategy s) {
  return s == QuotientStrategy::exact ? "exact" : "sampled";
}

QuotientSpace::QuotientSpace(PNSpace ambient, Subspace w, QuotientStrategy strategy,
                             SupSchedule schedule)
    : ambient_(std::move(ambient)),
      w_(std::move(w)),
      strategy_(strategy),
      schedule_(std::move(schedule)) {
  if (w_.is_c00_sum_kernel() != (ambient_.kind() == SpaceKind::c00))
    throw InvalidArgument("quotient: the c00 sum kernel pairs only with a c00 ambient");
  if (!w_.is_c00_sum_kernel() && w_.ambient_dim() != ambient_.dim())
    throw InvalidArgument("quotient: subspace lives in R^" + std::to_string(w_.ambient_dim()) +
                          ", ambient space is R^" + std::to_string(ambient_.dim()));
  if (strategy_ == QuotientStrategy::exact) {
    if (ambient_.rule() != RuleKind::unit_step)
      throw Unsupported("exact quotient norm needs a unit-step probabilistic norm");
    if (w_.is_c00_sum_kernel())
      throw Unsupported("exact quotient norm is unavailable for the c00 sum kernel");
  }
  if (schedule_.radii.empty() || schedule_.grid_step <= 0.0 || schedule_.tol <= 0.0 ||
      schedule_.c00_horizon < 2)
    throw InvalidArgument("quotient: malformed sampling schedule");
  if (!std::is_sorted(schedule_.radii.begin(), schedule_.radii.end()) ||
      schedule_.radii.front() <= 0.0)
    throw InvalidArgument("quotient: schedule radii must be positive and increasing");
}

QuotientEvaluation QuotientSpace::evaluate(const Vector& p) const {
  ambient_.check_vector(p);
  if (strategy_ == QuotientStrategy::exact) {
    const SubspaceDistance d = distance_to_subspace(p, w_, ambient_.norm_kind());
    QuotientEvaluation e;
    e.value = DistFn::unit_step(d.distance);
    e.representative = p.resized(ambient_.dim()) + d.minimizer;
    return e;
  }
  return w_.is_c00_sum_kernel() ? evaluate_c00(p) : evaluate_grid(p);
}

QuotientEvaluation QuotientSpace::evaluate_grid(const Vector& p) const {
  const std::size_t n = ambient_.dim();
  const std::size_t k = w_.dim();
  const Eigen::MatrixXd& q = w_.orthonormal();
  QuotientEvaluation e;
  e.representative = p.resized(n);
  e.value = ambient_.norm(e.representative);
  if (k == 0) return e;

  const double step = schedule_.grid_step;
  const auto outer = static_cast<long>(std::llround(schedule_.radii.back() / step));
  if (std::pow(2.0 * static_cast<double>(outer) + 1.0, static_cast<double>(k)) > kMaxGridPoints)
    throw Unsupported("sampled quotient norm: grid over a " + std::to_string(k) +
                      "-dimensional subspace is too large");

  // For norms that are antitone functions of the classical norm the sampled
  // family is a chain, so its pointwise sup is nu at the smallest norm.
  const bool chain = antitone_in_norm(ambient_);
  double best_norm = chain ? ambient_.classical_norm(e.representative)
                           : std::numeric_limits<double>::infinity();
  std::vector<double> buf(n);
  std::vector<long> idx(k);
  DistFn previous;
  long inner = -1;
  bool have_previous = false;
  for (double radius : schedule_.radii) {
    const auto r = static_cast<long>(std::llround(radius / step));
    std::fill(idx.begin(), idx.end(), -r);
    while (true) {
      long reach = 0;
      for (long v : idx) reach = std::max(reach, std::labs(v));
      if (reach > inner) {
        for (std::size_t i = 0; i < n; ++i) {
          double x = p[i];
          for (std::size_t j = 0; j < k; ++j)
            x += static_cast<double>(idx[j]) * step *
                 q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          buf[i] = x;
        }
        Vector v(buf);
        if (chain) {
          const double nv = pns::norm(v, ambient_.norm_kind());
          if (nv < best_norm) {
            best_norm = nv;
            e.representative = std::move(v);
          }
        } else {
          DistFn f = ambient_.norm(v);
          if (!df_leq(f, e.value)) {
            e.value = df_pointwise_sup(e.value, f);
            e.representative = std::move(v);
          }
        }
      }
      std::size_t j = 0;
      while (j < k && idx[j] == r) idx[j++] = -r;
      if (j == k) break;
      ++idx[j];
    }
    inner = r;
    if (chain) e.value = ambient_.norm(e.representative);
    if (have_previous) {
      e.last_change = sibley(e.value, previous, schedule_.tol * 1e-2).value;
      if (e.last_change < schedule_.tol) {
        e.converged = true;
        return e;
      }
    }
    previous = e.value;
    have_previous = true;
  }
  e.converged = schedule_.radii.size() == 1;
  return e;
}

QuotientEvaluation QuotientSpace::evaluate_c00(const Vector& p) const {
  QuotientEvaluation e;
  e.representative = p;
  e.value = ambient_.norm(p);
  DistFn previous = e.value;
  e.converged = false;
  for (std::size_t n = 1; n <= schedule_.c00_horizon; n *= 2) {
    Vector v = w_.c00_witness(p, n);
    Vector rep = p - v;
    DistFn f = ambient_.norm(rep);
    if (!df_leq(f, e.value)) {
      e.value = df_pointwise_sup(e.value, f);
      e.representative = std::move(rep);
    }
    if (n > 1) {
      e.last_change = sibley(e.value, previous, schedule_.tol * 1e-2).value;
      if (e.last_change < schedule_.tol) {
        e.converged = true;
        break;
      }
    }
    previous = e.value;
  }
  return e;
}

DistFn QuotientSpace::norm(const Vector& p) const {
  QuotientEvaluation e = evaluate(p);
  if (!e.converged) {
    std::ostringstream os;
    os << "sampled quotient norm of " << p.describe()
       << " did not settle: last change " << e.last_change << " >= " << schedule_.tol;
    throw Inconclusive<DistFn>(os.str(), std::move(e.value));
  }
  return e.value;
}

NormedView QuotientSpace::view() const {
  NormedView v;
  const auto self = std::make_shared<const QuotientSpace>(*this);
  v.name = ambient_.describe() + " / " + w_.describe();
  v.norm = [self](const Vector& p) { return self->norm(p); };
  v.is_null = [self](const Vector& p) { return self->subspace().contains(p); };
  v.sample = [self](Rng& rng) { return self->ambient().sample(rng); };
  v.dim = ambient_.dim();
  v.tau = ambient_.tau();
  v.tau_star = ambient_.tau_star();
  return v;
}

Vector nearest_representative(const QuotientSpace& q, const Vector& p) {
  if (!q.exact()) throw Unsupported("nearest representative needs the exact strategy");
  return q.evaluate(p).representative;
}

NormedView c00_witness_view(const QuotientSpace& q, std::size_t horizon) {
  if (!q.subspace().is_c00_sum_kernel())
    throw InvalidArgument("witness view needs the c00 sum kernel");
  if (horizon < 1) throw InvalidArgument("witness view needs horizon >= 1");
  NormedView v = q.view();
  const auto self = std::make_shared<const QuotientSpace>(q);
  v.name += " (witnesses up to " + std::to_string(horizon) + ")";
  v.norm = [self, horizon](const Vector& p) {
    DistFn acc = self->ambient().norm(p);
    for (std::size_t n = 1; n <= horizon; ++n) {
      DistFn f = self->ambient().norm(p - self->subspace().c00_witness(p, n));
      if (!df_leq(f, acc)) acc = df_pointwise_sup(acc, f);
    }
    return acc;
  };
  return v;
}

}  // namespace pns
