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

#ifndef PNSPACE_DISTFN_HPP
#define PNSPACE_DISTFN_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pnspace/report.hpp"
#include "pnspace/rng.hpp"

namespace pns {

/// One jump of a step distribution function: the function equals `value`
/// on the half-open interval to the right of `at`, up to the next jump.
struct Step {
  double at;
  double value;

  bool operator==(const Step&) const = default;
};

/**
 * A distribution function in Delta+ with finitely many jumps.
 *
 * The function is 0 on (-inf, first jump], takes `steps[i].value` on
 * (steps[i].at, steps[i+1].at], and is 1 at +inf. Left-continuity is
 * structural. The representation is canonical: jump abscissas strictly
 * increase and are >= 0, values strictly increase in (0, 1]. Hence two
 * functions are equal iff their step lists are equal.
 *
 * The empty step list is eps_inf; a single jump to 1 at a is eps_a.
 */
class DistFn {
 public:
  /// eps_inf.
  DistFn() = default;

  /// Validates and canonicalizes (drops non-increasing plateaus).
  /// Throws InvalidArgument on unordered abscissas, negative abscissas,
  /// values outside [0, 1] or decreasing values.
  static DistFn from_steps(std::vector<Step> steps);

  /// Canonicalizes steps already known to be sorted; values are clamped to
  /// [0, 1] and non-increasing plateaus dropped.
  static DistFn from_sorted_unchecked(std::vector<Step> steps);

  /// eps_a for a >= 0; eps_inf for a = +inf.
  static DistFn unit_step(double a);
  static DistFn eps0() { return unit_step(0.0); }
  static DistFn eps_inf() { return DistFn{}; }

  /// F(x), left-continuous; F(+inf) = 1, F(-inf) = 0.
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// lim F(t) as t -> x from the right.
  double right_limit(double x) const;

  /// l^- F(+inf), the mass not escaping to infinity.
  double left_limit_at_infinity() const {
    return steps_.empty() ? 0.0 : steps_.back().value;
  }

  bool in_d_plus() const { return left_limit_at_infinity() == 1.0; }
  bool is_eps0() const;
  bool is_eps_inf() const { return steps_.empty(); }

  std::span<const Step> steps() const { return steps_; }
  std::vector<double> breakpoints() const;

  /// x -> F(x / factor), factor > 0: abscissas multiplied by `factor`.
  DistFn rescaled(double factor) const;

  /// x -> F(x - shift), shift >= 0.
  DistFn shifted(double shift) const;

  std::string describe() const;

  bool operator==(const DistFn&) const = default;

 private:
  explicit DistFn(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

/// Exact pointwise order F <= G.
bool df_leq(const DistFn& f, const DistFn& g);

/// Pointwise supremum of a nonempty finite family.
DistFn df_pointwise_sup(std::span<const DistFn> family);
DistFn df_pointwise_sup(const DistFn& f, const DistFn& g);

/// Pointwise infimum of two functions.
DistFn df_pointwise_inf(const DistFn& f, const DistFn& g);

/// Tolerances used when comparing computed distribution functions whose
/// abscissas went through floating-point sums.
inline constexpr double kAbscissaTol = 1e-9;
inline constexpr double kValueTol = 1e-12;

/**
 * Signed horizontal margin of F <= G: the largest s such that
 * F(x) <= G(x - s) for all x. Positive when G dominates with room to spare,
 * negative when F exceeds G (the magnitude is how far G would have to move
 * left). -inf when some level reached by F is never reached by G.
 * Margins within kAbscissaTol of zero are snapped to zero.
 */
double leq_margin(const DistFn& f, const DistFn& g);

/// Both leq margins >= -tol.
bool approx_equal(const DistFn& f, const DistFn& g, double tol = kAbscissaTol);

/// Largest abscissa deviation between two functions with the same plateau
/// values; +inf when the plateau values differ beyond kValueTol.
double structural_distance(const DistFn& f, const DistFn& g);

/// d_S value, always in [0, 1].
struct SibleyDistance {
  double value = 0.0;

  operator double() const { return value; }
};

/// Condition (F, G; h): F(x-h) - h <= G(x) <= F(x+h) + h on (-1/h, 1/h),
/// checked exactly over the merged, shifted breakpoints.
bool sibley_condition(const DistFn& f, const DistFn& g, double h);

inline constexpr double kSibleyTol = 1e-9;

/// Sibley (modified Levy) distance by bisection on h; the result is an upper
/// bound within `tol` of the infimum. Throws InvalidArgument for tol <= 0.
SibleyDistance sibley(const DistFn& f, const DistFn& g, double tol = kSibleyTol);

/// d_S(F, eps0) = inf{h > 0 : F(h+) > 1 - h}, exact.
SibleyDistance sibley_to_eps0(const DistFn& f);

/**
 * Weak-convergence evidence for F_n -> F: the Sibley distance must be below
 * `tol` on the tail of the sequence, and F_n(x) must be within `tol` of F(x)
 * on the tail at sampled continuity points of F. The verdict fails when the
 * two criteria disagree. details["converges"] carries the shared answer.
 */
VerificationReport weak_convergence_check(std::span<const DistFn> seq,
                                          const DistFn& limit, double tol);

struct RandomDistFnOptions {
  std::size_t max_steps = 4;
  double max_abscissa = 3.0;
  bool dyadic = false;
  /// Force the last plateau to 1 (membership in D+).
  bool d_plus = false;
};

DistFn random_distfn(Rng& rng, const RandomDistFnOptions& options = {});

}  // namespace pns

#endif  // PNSPACE_DISTFN_HPP
