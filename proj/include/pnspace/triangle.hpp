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

#ifndef PNSPACE_TRIANGLE_HPP
#define PNSPACE_TRIANGLE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/report.hpp"
#include "pnspace/tnorm.hpp"

namespace pns {

/// tau_T(F, G)(x) = sup{T(F(u), G(v)) : u + v = x}, exact for step inputs.
DistFn tau_T_conv(const TNorm& t, const DistFn& f, const DistFn& g);

/// tau_{T*}(F, G)(x) = l^- inf{T*(F(u), G(v)) : u + v = x}, exact for step
/// inputs.
DistFn tau_Tstar_conv(const TNorm& t, const DistFn& f, const DistFn& g);

enum class TriangleKind { sup_convolution, inf_convolution };

/// Triangle function on Delta+ realized as a convolution under a t-norm.
class TriangleFn {
 public:
  static TriangleFn tau_T(TNorm t) {
    return TriangleFn(TriangleKind::sup_convolution, std::move(t));
  }
  static TriangleFn tau_Tstar(TNorm t) {
    return TriangleFn(TriangleKind::inf_convolution, std::move(t));
  }
  static TriangleFn tau_M() { return tau_T(TNorm::minimum()); }
  static TriangleFn tau_Mstar() { return tau_Tstar(TNorm::minimum()); }

  /// "tau_T:<tnorm>", "tau_T*:<tnorm>", or the aliases "tau_M", "tau_M*".
  static TriangleFn from_name(const std::string& name);

  TriangleKind kind() const { return kind_; }
  const TNorm& tnorm() const { return t_; }
  std::string name() const;

  DistFn operator()(const DistFn& f, const DistFn& g) const {
    return kind_ == TriangleKind::sup_convolution ? tau_T_conv(t_, f, g)
                                                  : tau_Tstar_conv(t_, f, g);
  }

  bool operator==(const TriangleFn&) const = default;

 private:
  TriangleFn(TriangleKind kind, TNorm t) : kind_(kind), t_(std::move(t)) {}

  TriangleKind kind_;
  TNorm t_;
};

/// Left fold tau^n(F_1, ..., F_{n+1}); `fs` must hold exactly n + 1 entries.
DistFn tau_iterate(const TriangleFn& tau, std::span<const DistFn> fs, std::size_t n);

struct Quadruple {
  DistFn f1, f2, g1, g2;
};

std::vector<Quadruple> random_quadruples(Rng& rng, std::size_t count,
                                         const RandomDistFnOptions& options = {});

/// Sampled falsifier for tau1 >> tau2:
/// tau1(tau2(F1,G1), tau2(F2,G2)) >= tau2(tau1(F1,F2), tau1(G1,G2)).
VerificationReport check_dominates(const TriangleFn& tau1, const TriangleFn& tau2,
                                   std::span<const Quadruple> quadruples);
VerificationReport check_dominates(const TriangleFn& tau1, const TriangleFn& tau2,
                                   std::size_t samples, std::uint64_t seed);

struct DistPair {
  DistFn f, g;
};

/// tau(F, G) <= F with strict inequality somewhere. Pairs with F = eps_inf or
/// G = eps0 violate the precondition and are rejected with InvalidArgument.
VerificationReport check_archimedean(const TriangleFn& tau,
                                     std::span<const DistPair> pairs);

/// sup_k tau(F_k, G) == tau(sup_k F_k, G) for a finite family.
VerificationReport check_sup_continuity(const TriangleFn& tau,
                                        std::span<const DistFn> family,
                                        const DistFn& g);

/// Sampled tau <= tau_star on random pairs.
VerificationReport check_triangle_order(const TriangleFn& tau,
                                        const TriangleFn& tau_star,
                                        std::size_t samples, std::uint64_t seed);

}  // namespace pns

#endif  // PNSPACE_TRIANGLE_HPP
