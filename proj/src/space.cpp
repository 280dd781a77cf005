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

#include "pnspace/space.hpp"

#include <cmath>
#include <sstream>

#include "pnspace/error.hpp"

namespace pns {

namespace {

constexpr std::uint64_t kCompatibilitySeed = 0x5eed;
constexpr std::size_t kCompatibilitySamples = 64;

void require_compatible(const TriangleFn& tau, const TriangleFn& tau_star) {
  const auto additive = check_step_additivity(tau, kCompatibilitySamples, kCompatibilitySeed);
  if (!additive.passed())
    throw InvalidArgument("triangle function " + tau.name() +
                          " does not satisfy tau(eps_a, eps_b) = eps_{a+b}: " +
                          additive.witness);
  const auto order = check_triangle_order(tau, tau_star, kCompatibilitySamples,
                                          kCompatibilitySeed);
  if (!order.passed())
    throw InvalidArgument("tau <= tau* fails for (" + tau.name() + ", " +
                          tau_star.name() + "): " + order.witness);
}

}  // namespace

VerificationReport check_step_additivity(const TriangleFn& tau, std::size_t samples,
                                         std::uint64_t seed) {
  VerificationReport report;
  report.check = "step_additivity(" + tau.name() + ")";
  report.samples = samples;
  report.seed = seed;
  Rng rng(seed);
  MarginTracker tracker;
  for (std::size_t k = 0; k < samples; ++k) {
    const double a = rng.dyadic(0.0, 10.0) + 1.0 / 64;
    const double b = rng.dyadic(0.0, 10.0) + 1.0 / 64;
    const DistFn got = tau(DistFn::unit_step(a), DistFn::unit_step(b));
    const DistFn want = DistFn::unit_step(a + b);
    const double margin = got == want ? 0.0 : -structural_distance(got, want);
    tracker.observe(margin, k, [&] {
      std::ostringstream os;
      os.precision(17);
      os << "a=" << a << " b=" << b << " tau(eps_a, eps_b)=" << got.describe();
      return os.str();
    });
  }
  tracker.finish(report, "tau(eps_a, eps_b) != eps_{a+b}");
  return report;
}

PNSpace PNSpace::simple(std::size_t dim, NormKind norm, TriangleFn tau,
                        TriangleFn tau_star) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  require_compatible(tau, tau_star);
  PNSpace s;
  s.kind_ = SpaceKind::finite;
  s.rule_ = RuleKind::unit_step;
  s.norm_kind_ = norm;
  s.dim_ = dim;
  s.tau_ = std::move(tau);
  s.tau_star_ = std::move(tau_star);
  return s;
}

PNSpace PNSpace::serstnev(std::size_t dim, NormKind norm, DistFn f0, TriangleFn tau,
                          TriangleFn tau_star) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  if (!f0.in_d_plus()) throw InvalidArgument("F0 must belong to D+ (l^-F0(+inf) = 1)");
  if (f0.is_eps0()) throw InvalidArgument("F0 must differ from eps0");
  require_compatible(tau, tau_star);
  PNSpace s;
  s.kind_ = SpaceKind::finite;
  s.rule_ = RuleKind::serstnev;
  s.norm_kind_ = norm;
  s.dim_ = dim;
  s.f0_ = std::move(f0);
  s.tau_ = std::move(tau);
  s.tau_star_ = std::move(tau_star);
  return s;
}

PNSpace PNSpace::c00(NormKind norm, TriangleFn tau, TriangleFn tau_star) {
  require_compatible(tau, tau_star);
  PNSpace s;
  s.kind_ = SpaceKind::c00;
  s.rule_ = RuleKind::unit_step;
  s.norm_kind_ = norm;
  s.dim_ = 0;
  s.tau_ = std::move(tau);
  s.tau_star_ = std::move(tau_star);
  return s;
}

PNSpace PNSpace::squared(std::size_t dim, NormKind norm, TriangleFn tau,
                         TriangleFn tau_star) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  PNSpace s;
  s.kind_ = SpaceKind::finite;
  s.rule_ = RuleKind::squared;
  s.norm_kind_ = norm;
  s.dim_ = dim;
  s.tau_ = std::move(tau);
  s.tau_star_ = std::move(tau_star);
  return s;
}

PNSpace PNSpace::product_unchecked(PNSpace left, PNSpace right, TriangleFn sigma) {
  if (left.kind() == SpaceKind::c00 || right.kind() == SpaceKind::c00)
    throw Unsupported("sigma-products are built over fixed-dimension factors");
  PNSpace s;
  s.kind_ = SpaceKind::product;
  s.rule_ = RuleKind::product;
  s.dim_ = left.dim() + right.dim();
  s.tau_ = left.tau();
  s.tau_star_ = left.tau_star();
  s.left_ = std::make_shared<const PNSpace>(std::move(left));
  s.right_ = std::make_shared<const PNSpace>(std::move(right));
  s.sigma_ = std::move(sigma);
  return s;
}

void PNSpace::check_vector(const Vector& p) const {
  if (kind_ != SpaceKind::c00 && p.size() != dim_)
    throw InvalidArgument("dimension mismatch: expected " + std::to_string(dim_) +
                          " coordinates, got " + std::to_string(p.size()));
  for (double x : p.coords())
    if (!std::isfinite(x)) throw InvalidArgument("vector coordinates must be finite");
}

double PNSpace::classical_norm(const Vector& p) const {
  if (kind_ == SpaceKind::product)
    throw Unsupported("a sigma-product carries no classical norm");
  check_vector(p);
  return pns::norm(p, norm_kind_);
}

DistFn PNSpace::norm(const Vector& p) const {
  check_vector(p);
  switch (rule_) {
    case RuleKind::unit_step:
      return DistFn::unit_step(pns::norm(p, norm_kind_));
    case RuleKind::squared: {
      const double n = pns::norm(p, norm_kind_);
      return DistFn::unit_step(n * n);
    }
    case RuleKind::serstnev: {
      const double n = pns::norm(p, norm_kind_);
      return n == 0.0 ? DistFn::eps0() : f0_->rescaled(n);
    }
    case RuleKind::product: {
      const auto coords = p.coords();
      const std::size_t split = left_->dim();
      const Vector a(std::vector<double>(coords.begin(), coords.begin() + split));
      const Vector b(std::vector<double>(coords.begin() + split, coords.end()));
      return (*sigma_)(left_->norm(a), right_->norm(b));
    }
  }
  return DistFn::eps0();
}

Vector PNSpace::sample(Rng& rng) const {
  if (kind_ == SpaceKind::product) {
    Vector a = left_->sample(rng);
    const Vector b = right_->sample(rng);
    for (std::size_t i = 0; i < b.size(); ++i) a.at(left_->dim() + i) = b[i];
    return a.resized(dim_);
  }
  const std::size_t n = kind_ == SpaceKind::c00 ? 1 + rng.index(6) : dim_;
  std::vector<double> c(n);
  for (auto& x : c) x = rng.uniform(-2.0, 2.0);
  return Vector(std::move(c));
}

NormedView PNSpace::view() const {
  NormedView v;
  v.name = describe();
  const auto self = std::make_shared<const PNSpace>(*this);
  v.norm = [self](const Vector& p) { return self->norm(p); };
  v.is_null = [](const Vector& p) { return p.is_zero(); };
  v.sample = [self](Rng& rng) { return self->sample(rng); };
  v.dim = dim_;
  v.tau = tau_;
  v.tau_star = tau_star_;
  return v;
}

std::string PNSpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::finite: os << "R^" << dim_; break;
    case SpaceKind::c00: os << "c00"; break;
    case SpaceKind::product:
      os << "(" << left_->describe() << ") x_" << sigma_->name() << " ("
         << right_->describe() << ")";
      return os.str();
  }
  os << " " << to_string(norm_kind_) << " ";
  switch (rule_) {
    case RuleKind::unit_step: os << "unit-step"; break;
    case RuleKind::serstnev: os << "serstnev"; break;
    case RuleKind::squared: os << "squared"; break;
    case RuleKind::product: break;
  }
  os << " [" << tau_.name() << ", " << tau_star_.name() << "]";
  return os.str();
}

}  // namespace pns
