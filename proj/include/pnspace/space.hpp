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

#ifndef PNSPACE_SPACE_HPP
#define PNSPACE_SPACE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/report.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/triangle.hpp"
#include "pnspace/vector.hpp"

namespace pns {

/**
 * A probabilistic norm under test, decoupled from how it is computed.
 *
 * PN spaces, quotient spaces and ad hoc test instances all reduce to this so
 * that the axiom checkers run unchanged on each of them. `is_null(p)` says
 * whether p represents the null element (for a quotient: p lies in W).
 */
struct NormedView {
  std::string name;
  std::function<DistFn(const Vector&)> norm;
  std::function<bool(const Vector&)> is_null;
  std::function<Vector(Rng&)> sample;
  std::size_t dim = 0;  // 0 for c00
  TriangleFn tau = TriangleFn::tau_M();
  TriangleFn tau_star = TriangleFn::tau_Mstar();
};

enum class SpaceKind { finite, c00, product };
enum class RuleKind { unit_step, serstnev, squared, product };

class PNSpace;

/**
 * Concrete probabilistic normed space over R^n, c00, or a sigma-product.
 *
 * Rules: unit_step (nu_p = eps_{|p|}), serstnev (nu_p(x) = F0(x / |p|)),
 * squared (nu_p = eps_{|p|^2}, which is not a PN space and exists to exercise
 * the checkers) and product (sigma(nu1(p1), nu2(p2))).
 */
class PNSpace {
 public:
  /// Unit-step space; rejects (tau, tau*) without tau(eps_a, eps_b) = eps_{a+b}
  /// or with tau > tau* on samples.
  static PNSpace simple(std::size_t dim, NormKind norm, TriangleFn tau,
                        TriangleFn tau_star);
  /// Requires F0 in D+ and F0 != eps0.
  static PNSpace serstnev(std::size_t dim, NormKind norm, DistFn f0, TriangleFn tau,
                          TriangleFn tau_star);
  static PNSpace c00(NormKind norm, TriangleFn tau, TriangleFn tau_star);
  /// Unchecked nu_p = eps_{|p|^2}.
  static PNSpace squared(std::size_t dim, NormKind norm, TriangleFn tau,
                         TriangleFn tau_star);
  /// sigma-product without preconditions; see sigma_product for the checked
  /// construction.
  static PNSpace product_unchecked(PNSpace left, PNSpace right, TriangleFn sigma);

  /// nu_p. Throws InvalidArgument on a dimension mismatch.
  DistFn norm(const Vector& p) const;
  DistFn operator()(const Vector& p) const { return norm(p); }

  /// The underlying classical norm; unavailable for products.
  double classical_norm(const Vector& p) const;

  SpaceKind kind() const { return kind_; }
  RuleKind rule() const { return rule_; }
  NormKind norm_kind() const { return norm_kind_; }
  std::size_t dim() const { return dim_; }
  const TriangleFn& tau() const { return tau_; }
  const TriangleFn& tau_star() const { return tau_star_; }
  const std::optional<DistFn>& f0() const { return f0_; }

  /// Product factors (null unless kind() == product).
  const std::shared_ptr<const PNSpace>& left() const { return left_; }
  const std::shared_ptr<const PNSpace>& right() const { return right_; }
  const std::optional<TriangleFn>& sigma() const { return sigma_; }

  Vector zero() const { return Vector::zero(dim_); }
  Vector sample(Rng& rng) const;
  void check_vector(const Vector& p) const;

  NormedView view() const;
  std::string describe() const;

  /// Certificate attached by a checked construction.
  const std::optional<VerificationReport>& certificate() const { return certificate_; }
  void attach_certificate(VerificationReport report) { certificate_ = std::move(report); }

 private:
  PNSpace() = default;

  SpaceKind kind_ = SpaceKind::finite;
  RuleKind rule_ = RuleKind::unit_step;
  NormKind norm_kind_ = NormKind::l2;
  std::size_t dim_ = 0;
  TriangleFn tau_ = TriangleFn::tau_M();
  TriangleFn tau_star_ = TriangleFn::tau_Mstar();
  std::optional<DistFn> f0_;
  std::shared_ptr<const PNSpace> left_;
  std::shared_ptr<const PNSpace> right_;
  std::optional<TriangleFn> sigma_;
  std::optional<VerificationReport> certificate_;
};

inline PNSpace simple_space(std::size_t dim, NormKind norm, TriangleFn tau,
                            TriangleFn tau_star) {
  return PNSpace::simple(dim, norm, std::move(tau), std::move(tau_star));
}

inline PNSpace serstnev_simple_space(std::size_t dim, NormKind norm, DistFn f0,
                                     TriangleFn tau, TriangleFn tau_star) {
  return PNSpace::serstnev(dim, norm, std::move(f0), std::move(tau), std::move(tau_star));
}

inline PNSpace c00_space(NormKind norm, TriangleFn tau, TriangleFn tau_star) {
  return PNSpace::c00(norm, std::move(tau), std::move(tau_star));
}

/// Checks that tau(eps_a, eps_b) = eps_{a+b} on sampled a, b > 0.
VerificationReport check_step_additivity(const TriangleFn& tau, std::size_t samples,
                                         std::uint64_t seed);

struct AxiomOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  /// Probabilistic pseudo-normed: N1 reduces to nu_theta = eps0.
  bool ppn_only = false;
  /// Checked first, as both p and q.
  std::vector<Vector> extra_points;
};

/// N1-N4 on samples. Worst margin is horizontal (see leq_margin); N1's margin
/// on p != theta is d_S(nu_p, eps0), which must be strictly positive.
VerificationReport check_axioms(const NormedView& space, const AxiomOptions& options);

/// nu_p = tau_M(nu_{alpha p}, nu_{(1-alpha) p}) and nu_{lambda p} = nu_p(j/|lambda|).
VerificationReport check_serstnev(const NormedView& space, std::size_t samples,
                                  std::uint64_t seed);

/// nu_{q-p}(t) > 1 - t. Throws InvalidArgument for t <= 0.
bool in_strong_neighborhood(const NormedView& space, const Vector& p, double t,
                            const Vector& q);

using VectorMap = std::function<Vector(const Vector&)>;

/// Dense matrix as a map; rows x cols, row-major.
VectorMap matrix_map(std::size_t rows, std::size_t cols, std::vector<double> entries);

/// nu'_{Tp}(x) >= nu_p(x / k) on sampled p. Throws InvalidArgument for k <= 0.
VerificationReport check_strongly_bounded(const VectorMap& map, double k,
                                          const NormedView& source,
                                          const NormedView& target,
                                          std::size_t samples, std::uint64_t seed);

/// |alpha| <= |beta| implies nu_{beta p} <= nu_{alpha p}, on samples.
VerificationReport check_lemma_alpha(const NormedView& space, std::size_t samples,
                                     std::uint64_t seed);

}  // namespace pns

#endif  // PNSPACE_SPACE_HPP
