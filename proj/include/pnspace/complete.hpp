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

#ifndef PNSPACE_COMPLETE_HPP
#define PNSPACE_COMPLETE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/quotient.hpp"
#include "pnspace/report.hpp"
#include "pnspace/space.hpp"

namespace pns {

/// Deterministic sequence p_1, p_2, ... evaluated up to `horizon`.
struct PointSequence {
  std::string name;
  std::function<Vector(std::size_t)> rule;  // 1-based index
  std::size_t horizon = 100;

  Vector at(std::size_t n) const { return rule(n); }
  std::vector<Vector> terms() const;
};

/// p_n = base + direction / n.
PointSequence reciprocal_sequence(Vector base, Vector direction, std::size_t horizon);
/// p_n = (-1)^n v.
PointSequence alternating_sequence(Vector v, std::size_t horizon);
/// p_n = base + ratio^n v.
PointSequence geometric_sequence(Vector base, Vector v, double ratio, std::size_t horizon);

/// Number of features of the custom-affine rule: (n, 1/n, (-1)^n, sin n, 2^-n).
inline constexpr std::size_t kAffineFeatures = 5;

/// p_n = offset + M phi(n); M is dim x 5, row-major.
PointSequence custom_affine_sequence(Vector offset, std::vector<double> matrix,
                                     std::size_t horizon);

/// Fixed list of terms; the horizon is the list length.
PointSequence explicit_sequence(std::string name, std::vector<Vector> terms);

struct CauchyOptions {
  /// Largest admissible N(lambda); 0 means horizon / 2.
  std::size_t max_entry = 0;
};

/**
 * For each lambda, N(lambda) is the least N such that every tested pair
 * m, n >= N satisfies nu_{p_n - p_m}(lambda) > 1 - lambda. "Cauchy up to
 * horizon" means every N(lambda) stays within options.max_entry.
 */
VerificationReport is_strong_cauchy(const NormedView& space, const PointSequence& seq,
                                    const std::vector<double>& lambda_grid,
                                    const CauchyOptions& options = {});

/// Per lambda, the least N with p_n in N_candidate(lambda) for all n >= N.
VerificationReport strong_limit_check(const NormedView& space, const PointSequence& seq,
                                      const Vector& candidate,
                                      const std::vector<double>& lambda_grid,
                                      const CauchyOptions& options = {});

/**
 * p' ~_W p with d_S(nu_{p'}, eps0) < d_S(nu-bar_{p+W}, eps0) + eps. Throws
 * InvalidArgument for eps <= 0 and Inconclusive<Vector> (best p') when the
 * search over W runs out.
 */
Vector lift_representative(const QuotientSpace& q, const Vector& p, double eps);

/// p' ~_W p with nu_{p'} >= tau(nu-bar_{p+W}, g). Needs g != eps0 and
/// nu-bar_{p+W} >= g.
Vector lift_with_floor(const QuotientSpace& q, const Vector& p, const DistFn& g);

struct DeltaSchedule {
  std::vector<double> deltas;  // delta_1 > delta_2 > ...
  VerificationReport evidence;
};

/// Greedy halving so that tau maps pairs from the delta_n ball into the
/// min(1/n, delta_{n-1}) ball (radius 1 for n = 1), on sampled ball members.
DeltaSchedule build_delta_schedule(const TriangleFn& tau, std::size_t depth,
                                   std::size_t samples_per_ball, std::uint64_t seed);

/// Re-samples every ball inclusion of a schedule.
VerificationReport validate_delta_schedule(const TriangleFn& tau, const DeltaSchedule& schedule,
                                           std::size_t samples_per_ball, std::uint64_t seed);

/// Member of the open d_S ball B(eps0; delta).
DistFn sample_ball_member(Rng& rng, double delta);

struct LiftedSequence {
  std::vector<std::size_t> indices;  // n_1 < n_2 < ...
  std::vector<Vector> points;        // x_1, x_2, ...
  VerificationReport report;
};

/**
 * Picks a subsequence with d_S(nu-bar_{a_{n_i} - a_{n_{i+1}}}, eps0) < delta_{i+1}
 * and lifts it so that d_S(nu_{x_i - x_{i+1}}, eps0) < delta_{i+1} with
 * pi(x_i) = pi(a_{n_i}). Rejects sequences that are not quotient Cauchy over
 * the schedule's radii; Inconclusive<LiftedSequence> if the horizon runs out.
 */
LiftedSequence lift_cauchy_sequence(const QuotientSpace& q, const PointSequence& seq,
                                    const DeltaSchedule& schedule);

enum class Scenario {
  quotient,  // V and W complete, test V/W
  subspace,  // V and V/W complete, test W
  ambient,   // W and V/W complete, test V
};

Scenario scenario_from_name(const std::string& name);
const char* to_string(Scenario s);

struct ExperimentOptions {
  std::vector<double> lambda_grid{0.2, 0.1, 0.05};
  std::size_t schedule_depth = 5;
  std::size_t samples_per_ball = 200;
  std::uint64_t seed = 0;
};

/// Horizon-bounded run of the constructive argument for `scenario`; `seq` is
/// the Cauchy input living in the space under test.
VerificationReport two_of_three_experiment(const QuotientSpace& q, Scenario scenario,
                                           const PointSequence& seq,
                                           const ExperimentOptions& options = {});

/// Default input sequence for a scenario over q (exact strategy, finite W).
PointSequence default_scenario_sequence(const QuotientSpace& q, Scenario scenario,
                                        std::size_t horizon);

/// Refuses (InvalidArgument) unless both factors share (tau, tau*) and sampled
/// dominance tau* >> sigma >> tau holds on `dominance_samples` quadruples.
PNSpace sigma_product(const PNSpace& left, const PNSpace& right, const TriangleFn& sigma,
                      std::size_t dominance_samples = 100, std::size_t axiom_samples = 500,
                      std::uint64_t seed = 0);

/// Cauchy in the product iff Cauchy in both factors, for each sequence.
VerificationReport check_product_cauchy_factorization(const PNSpace& product,
                                                      const std::vector<PointSequence>& seqs,
                                                      const std::vector<double>& lambda_grid);

struct ContinuityOptions {
  std::size_t perturbations = 16;
  std::uint64_t seed = 0;
  /// Bound required of h at the smallest eta.
  double final_bound = 0.1;
};

/// Modulus h(eta) = max d_S(nu-bar_{pi(p-q)}, nu-bar_{pi(p'-q')}) over sampled
/// p' in N_p(eta), q' in N_q(eta); must be non-increasing as eta shrinks.
VerificationReport uniform_continuity_probe(const QuotientSpace& q,
                                            const std::vector<std::pair<Vector, Vector>>& pairs,
                                            const std::vector<double>& eta_grid,
                                            const ContinuityOptions& options = {});

/// d_S(nu-bar_{(a-b)p}, eps0) <= d_S(nu_{(a-b)p}, eps0), and the ambient side
/// shrinks with |a - b|.
VerificationReport scalar_continuity_probe(const QuotientSpace& q, const Vector& p,
                                           const std::vector<std::pair<double, double>>& pairs);

}  // namespace pns

#endif  // PNSPACE_COMPLETE_HPP
