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

#ifndef PNSPACE_QUOTIENT_HPP
#define PNSPACE_QUOTIENT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/report.hpp"
#include "pnspace/space.hpp"
#include "pnspace/subspace.hpp"

namespace pns {

enum class QuotientStrategy { exact, sampled };

const char* to_string(QuotientStrategy s);

/// Expanding search over W used by the sampled strategy.
struct SupSchedule {
  std::vector<double> radii{1.0, 2.0, 4.0, 8.0};
  double grid_step = 1e-2;
  /// Stop once the Sibley change between successive radii drops below this.
  double tol = 1e-3;
  /// Largest witness index for the c00 testbed (doubling from 1).
  std::size_t c00_horizon = 1024;
};

struct QuotientEvaluation {
  DistFn value;
  bool converged = true;
  /// Sibley change between the last two radii (0 for the exact strategy).
  double last_change = 0.0;
  /// Point in the coset attaining `value` (the best one seen when sampled).
  Vector representative;
};

/**
 * (V/W, nu-bar, tau, tau*) with nu-bar_{p+W} = sup_{w in W} nu_{p+w}.
 *
 * The exact strategy needs a unit-step ambient and a finite basis; it returns
 * eps_{dist(p, W)}.
 */
class QuotientSpace {
 public:
  QuotientSpace(PNSpace ambient, Subspace w,
                QuotientStrategy strategy = QuotientStrategy::exact,
                SupSchedule schedule = {});

  const PNSpace& ambient() const { return ambient_; }
  const Subspace& subspace() const { return w_; }
  QuotientStrategy strategy() const { return strategy_; }
  const SupSchedule& schedule() const { return schedule_; }
  bool exact() const { return strategy_ == QuotientStrategy::exact; }

  QuotientEvaluation evaluate(const Vector& p) const;

  /// nu-bar_{p+W}. Throws Inconclusive<DistFn> when the sampled schedule does
  /// not settle; the best sup found travels with it.
  DistFn norm(const Vector& p) const;
  DistFn operator()(const Vector& p) const { return norm(p); }

  /// pi(p), as the deterministic coset representative.
  Vector project(const Vector& p) const { return w_.canonical(p); }

  NormedView view() const;

 private:
  QuotientEvaluation evaluate_grid(const Vector& p) const;
  QuotientEvaluation evaluate_c00(const Vector& p) const;

  PNSpace ambient_;
  Subspace w_;
  QuotientStrategy strategy_;
  SupSchedule schedule_;
};

inline DistFn quotient_norm(const QuotientSpace& q, const Vector& p) { return q.norm(p); }

/// A coset p + W; handles compare equal iff their representatives are ~_W.
class CosetHandle {
 public:
  CosetHandle(Vector representative, const QuotientSpace& q)
      : rep_(std::move(representative)), q_(&q) {}

  const Vector& representative() const { return rep_; }
  Vector canonical() const { return q_->project(rep_); }
  DistFn norm() const { return q_->norm(rep_); }

  bool operator==(const CosetHandle& o) const {
    return coset_equal(rep_, o.rep_, q_->subspace());
  }

 private:
  Vector rep_;
  const QuotientSpace* q_;
};

/// Minimal-norm representative p + w* of p + W (exact strategy only).
Vector nearest_representative(const QuotientSpace& q, const Vector& p);

/**
 * Estimates d_S(nu-bar_{p+W}, eps0) for each probe and reports "N1 fails" when
 * an estimate drops below 1/horizon. For the c00 testbed the estimate is the
 * sup over the witnesses q_1..q_horizon. Probes in W are rejected.
 */
VerificationReport closedness_probe(const QuotientSpace& q, const std::vector<Vector>& probes,
                                    std::size_t horizon = 100);

/// Quotient view of the c00 testbed whose norm is the witness sup up to
/// `horizon`; a PPN space when W is not closed.
NormedView c00_witness_view(const QuotientSpace& q, std::size_t horizon);

struct KernelResult {
  std::vector<Vector> members;
  VerificationReport report;
};

/**
 * C = {p : nu_p = eps0} restricted to the candidates. A candidate counts as
 * eps0 when d_S(nu_p, eps0) <= resolution (0: structural). The report checks
 * closure of the returned set under sums and sampled scalar multiples.
 */
KernelResult kernel_C(const NormedView& space, const std::vector<Vector>& candidates,
                      double resolution = 0.0, std::uint64_t seed = 0);

/// nu-bar_{p_C} >= nu_p >= nu_{p+r} for sampled p and r in C.
VerificationReport remark_coincidence_check(const NormedView& space,
                                            const std::vector<Vector>& kernel,
                                            std::size_t samples, std::uint64_t seed,
                                            double resolution = 0.0);

/// Representative of q + W inside N_p(t), if q + W meets N'_{p+W}(t).
std::optional<Vector> representative_in_neighborhood(const QuotientSpace& q, const Vector& p,
                                                     double t, const Vector& other);

/// Strong boundedness (nu-bar_{pi p} >= nu_p) and pi(N_p(t)) = N'_{p+W}(t) on
/// samples. Needs the exact strategy.
VerificationReport projection_check(const QuotientSpace& q, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace pns

#endif  // PNSPACE_QUOTIENT_HPP
