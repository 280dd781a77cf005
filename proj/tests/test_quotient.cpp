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


#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pnspace/error.hpp"
#include "pnspace/quotient.hpp"

using pns::DistFn;
using pns::NormKind;
using pns::PNSpace;
using pns::QuotientSpace;
using pns::QuotientStrategy;
using pns::Subspace;
using pns::TriangleFn;
using pns::Vector;

namespace {

PNSpace simple(std::size_t dim, NormKind n = NormKind::l2) {
  return PNSpace::simple(dim, n, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
}

Subspace x_axis(std::size_t dim) { return Subspace::span({Vector::unit(0, dim)}, dim); }

Vector random_vector(pns::Rng& rng, std::size_t dim, double r = 3.0) {
  std::vector<double> c(dim);
  for (auto& x : c) x = rng.uniform(-r, r);
  return Vector(c);
}

// nu_p = eps_{|p_1|} on R^2: N1 fails on the p_2 axis.
pns::NormedView first_coordinate_view() {
  pns::NormedView v;
  v.name = "first-coordinate";
  v.norm = [](const Vector& p) { return DistFn::unit_step(std::abs(p[0])); };
  v.is_null = [](const Vector& p) { return p.is_zero(); };
  v.sample = [](pns::Rng& rng) {
    return Vector{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  };
  v.dim = 2;
  return v;
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("subspace basics") {
  const auto w = Subspace::span({Vector{1.0, 1.0, 0.0}}, 3);
  CHECK(w.contains({2.0, 2.0, 0.0}));
  CHECK_FALSE(w.contains({2.0, 2.1, 0.0}));
  CHECK(pns::coset_equal({1.0, 0.0, 3.0}, {0.0, -1.0, 3.0}, w));
  const auto c = w.canonical({3.0, 1.0, 2.0});
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(-1.0));
  CHECK(c[2] == 2.0);
  CHECK_THROWS_AS(Subspace::span({Vector{1.0, 1.0}, Vector{2.0, 2.0}}, 2), pns::InvalidArgument);
  CHECK_THROWS_AS(Subspace::span({Vector{1.0, 1.0, 1.0}}, 2), pns::InvalidArgument);
}

TEST_CASE("c00 sum kernel canonical representative") {
  const auto w = Subspace::c00_sum_kernel();
  CHECK(w.contains({1.0, -1.0, 0.0, 0.0}));
  CHECK_FALSE(w.contains({1.0, 0.5}));
  CHECK(w.canonical({1.0, 2.0, -0.5}) == Vector{2.5});
  const auto q = w.c00_witness({2.0}, 3);
  CHECK(w.contains(q));
  CHECK(q.support() == 8);
  CHECK_THROWS_AS(pns::dist_to_subspace({1.0}, w, NormKind::l1), pns::Unsupported);
}

TEST_CASE("distance to a subspace against a coefficient grid") {
  pns::Rng rng(31);
  for (NormKind n : {NormKind::l1, NormKind::l2, NormKind::linf}) {
    for (int i = 0; i < 12; ++i) {
      const std::size_t dim = 3;
      const std::size_t k = 1 + rng.index(2);
      std::vector<Vector> basis;
      for (std::size_t j = 0; j < k; ++j) basis.push_back(random_vector(rng, dim, 1.0));
      const auto w = Subspace::span(basis, dim);
      const Vector p = random_vector(rng, dim);
      const auto d = pns::distance_to_subspace(p, w, n);
      CHECK(d.distance == doctest::Approx(oracle::dist_search(p, basis, n)).epsilon(1e-6));
      CHECK(w.contains(d.minimizer));
      CHECK(pns::norm(p + d.minimizer, n) == doctest::Approx(d.distance).epsilon(1e-9));
    }
  }
}

TEST_CASE("distance examples") {
  CHECK(pns::dist_to_subspace({3.0, 4.0}, x_axis(2), NormKind::l2) == doctest::Approx(4.0));
  const auto diag = Subspace::span({Vector{1.0, 1.0}}, 2);
  CHECK(pns::dist_to_subspace({1.0, 0.0}, diag, NormKind::linf) == doctest::Approx(0.5));
  CHECK(pns::dist_to_subspace({1.0, 0.0}, diag, NormKind::l1) == doctest::Approx(1.0));
  CHECK(pns::dist_to_subspace({1.0, 0.0}, diag, NormKind::l2) ==
        doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("exact quotient norm is eps at the distance") {
  const QuotientSpace q(simple(2), x_axis(2));
  CHECK(q.norm({3.0, 4.0}) == DistFn::unit_step(4.0));
  CHECK(q.norm({7.0, 0.0}).is_eps0());
  CHECK(pns::CosetHandle({1.0, 2.0}, q) == pns::CosetHandle({-5.0, 2.0}, q));
  CHECK_FALSE(pns::CosetHandle({1.0, 2.0}, q) == pns::CosetHandle({1.0, 2.5}, q));
}

TEST_CASE("projection sends (10, 0.3) to the coset of (0, 0.3)") {
  const QuotientSpace q(simple(2), x_axis(2));
  CHECK(q.project({10.0, 0.3}) == Vector{0.0, 0.3});
  const auto rep = pns::nearest_representative(q, {10.0, 0.3});
  CHECK(rep[0] == doctest::Approx(0.0));
  CHECK(rep[1] == doctest::Approx(0.3));
  CHECK(q.norm({10.0, 0.3}) == DistFn::unit_step(0.3));
}

TEST_CASE("exact and sampled strategies agree") {
  pns::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const std::size_t dim = 2 + rng.index(2);
    const auto n = static_cast<NormKind>(rng.index(3));
    const std::size_t k = 1 + rng.index(dim - 1);
    std::vector<Vector> basis;
    for (std::size_t j = 0; j < k; ++j) basis.push_back(random_vector(rng, dim, 1.0));
    const auto w = Subspace::span(basis, dim);
    const QuotientSpace exact(simple(dim, n), w);
    const QuotientSpace sampled(simple(dim, n), w, QuotientStrategy::sampled);
    const Vector p = random_vector(rng, dim, 2.0);
    CHECK(pns::sibley(exact.norm(p), sampled.norm(p)).value <= 2e-2);
  }
}

TEST_CASE("sampled norm reports a schedule that has not settled") {
  pns::SupSchedule short_schedule;
  short_schedule.radii = {0.5, 1.0};
  const QuotientSpace q(simple(2), x_axis(2), QuotientStrategy::sampled, short_schedule);
  const auto e = q.evaluate({50.0, 1.0});
  CHECK_FALSE(e.converged);
  CHECK_THROWS_AS(q.norm({50.0, 1.0}), pns::Inconclusive<DistFn>);
}

TEST_CASE("exact strategy needs a unit-step finite setting") {
  const auto f0 = DistFn::from_steps({{0.5, 0.5}, {1.0, 1.0}});
  const auto s = PNSpace::serstnev(2, NormKind::l1, f0, TriangleFn::tau_M(),
                                   TriangleFn::tau_Mstar());
  const auto diag = Subspace::span({Vector{1.0, 1.0}}, 2);
  CHECK_THROWS_AS(QuotientSpace(s, diag), pns::Unsupported);
  const auto c00 = PNSpace::c00(NormKind::linf, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
  CHECK_THROWS_AS(QuotientSpace(c00, Subspace::c00_sum_kernel()), pns::Unsupported);
  CHECK_THROWS_AS(QuotientSpace(simple(2), Subspace::c00_sum_kernel(), QuotientStrategy::sampled),
                  pns::InvalidArgument);
}

TEST_CASE("serstnev quotient is f0 rescaled by the distance") {
  const auto f0 = DistFn::from_steps({{0.5, 0.5}, {1.0, 1.0}});
  const auto s = PNSpace::serstnev(2, NormKind::l1, f0, TriangleFn::tau_M(),
                                   TriangleFn::tau_Mstar());
  const auto diag = Subspace::span({Vector{1.0, 1.0}}, 2);
  const QuotientSpace q(s, diag, QuotientStrategy::sampled);
  for (const Vector& p : {Vector{1.0, 0.0}, Vector{0.5, -1.5}, Vector{2.0, 1.0}}) {
    const double d = pns::dist_to_subspace(p, diag, NormKind::l1);
    CHECK(pns::sibley(q.norm(p), f0.rescaled(d)).value <= 2e-2);
  }
  CHECK(pns::check_axioms(q.view(), {.samples = 60, .seed = 2}).passed());
}

TEST_CASE("quotients of simple spaces satisfy the axioms") {
  const auto w = Subspace::span({Vector{1.0, 0.0, 0.0}}, 3);
  for (NormKind n : {NormKind::l1, NormKind::l2, NormKind::linf}) {
    const QuotientSpace q(simple(3, n), w);
    const auto r = pns::check_axioms(q.view(), {.samples = 300, .seed = 3});
    CHECK_MESSAGE(r.passed(), r.witness);
  }
  // Menger pair.
  const QuotientSpace m(PNSpace::simple(2, NormKind::l2, TriangleFn::tau_T(pns::TNorm::product()),
                                        TriangleFn::tau_Mstar()),
                        x_axis(2));
  CHECK(pns::check_axioms(m.view(), {.samples = 200, .seed = 4}).passed());
}

TEST_CASE("closedness probe on a finite subspace") {
  const QuotientSpace q(simple(3), x_axis(3));
  const auto r = pns::closedness_probe(q, {Vector{0.0, 0.5, 0.0}, Vector{1.0, 2.0, 3.0}}, 100);
  CHECK(r.passed());
  CHECK(r.details["n1_fails"] == false);
  CHECK(r.details["probes"][0]["estimate"].get<double>() == doctest::Approx(0.5));
  CHECK_THROWS_AS(pns::closedness_probe(q, {Vector{2.0, 0.0, 0.0}}), pns::InvalidArgument);
}

TEST_CASE("c00 sum kernel under the sup norm is not closed") {
  const auto v = PNSpace::c00(NormKind::linf, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
  const QuotientSpace q(v, Subspace::c00_sum_kernel(), QuotientStrategy::sampled);
  const auto r = pns::closedness_probe(q, {Vector{1.0}, Vector{0.5, 0.5}, Vector{-2.0}}, 100);
  CHECK_FALSE(r.passed());
  CHECK(r.details["n1_fails"] == true);
  for (const auto& row : r.details["probes"]) CHECK(row["estimate"].get<double>() < 0.01);
  // Sampled view drives e1 to eps_{1/(horizon+1)}.
  CHECK(q.norm({1.0}) == DistFn::unit_step(1.0 / 1025.0));
}

TEST_CASE("c00 sum kernel under l1 is closed") {
  const auto v = PNSpace::c00(NormKind::l1, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
  const QuotientSpace q(v, Subspace::c00_sum_kernel(), QuotientStrategy::sampled);
  const auto r = pns::closedness_probe(q, {Vector{1.0}, Vector{0.25, 0.5}}, 100);
  CHECK(r.passed());
  CHECK(q.norm({0.25, 0.5}) == DistFn::unit_step(0.75));
}

TEST_CASE("kernel of the c00 witness view") {
  const auto v = PNSpace::c00(NormKind::linf, TriangleFn::tau_M(), TriangleFn::tau_Mstar());
  const QuotientSpace q(v, Subspace::c00_sum_kernel(), QuotientStrategy::sampled);
  const auto view = pns::c00_witness_view(q, 100);
  const auto k = pns::kernel_C(view, {Vector{1.0}, Vector{0.0, -3.0}, Vector{1.0, 1.0}}, 0.01, 5);
  CHECK(k.members.size() == 3);
  CHECK(k.report.passed());
  CHECK(pns::remark_coincidence_check(view, k.members, 50, 6, 0.01).passed());
  CHECK_THROWS_AS(pns::c00_witness_view(QuotientSpace(simple(2), x_axis(2)), 10),
                  pns::InvalidArgument);
}

TEST_CASE("PPN test view: kernel is the second axis") {
  const auto view = first_coordinate_view();
  const auto k = pns::kernel_C(view, {Vector{0.0, 1.0}, Vector{0.0, -2.0}, Vector{1.0, 0.0}});
  REQUIRE(k.members.size() == 2);
  CHECK(k.members[0] == Vector{0.0, 1.0});
  CHECK(k.report.passed());
  CHECK(pns::remark_coincidence_check(view, k.members, 100, 1).passed());
  CHECK(pns::check_axioms(view, {.samples = 100, .seed = 1, .ppn_only = true}).passed());
  const auto full = pns::check_axioms(
      view, {.samples = 20, .seed = 1, .extra_points = {Vector{0.0, 1.0}}});
  CHECK_FALSE(full.passed());
  CHECK(full.details["N1"]["pass"] == false);
}

TEST_CASE("projection is strongly bounded and open") {
  const QuotientSpace q(simple(3), Subspace::span({Vector{1.0, 0.0, 0.0}}, 3));
  const auto r = pns::projection_check(q, 300, 7);
  CHECK_MESSAGE(r.passed(), r.witness);
  CHECK(r.details["open_forward"]["details"]["hits"].get<int>() > 0);
  CHECK(r.details["open_backward"]["details"]["hits"].get<int>() > 0);
}

TEST_CASE("representative in a neighbourhood") {
  const QuotientSpace q(simple(2), x_axis(2));
  const auto rep = pns::representative_in_neighborhood(q, {0.0, 0.0}, 0.5, {10.0, 0.3});
  REQUIRE(rep.has_value());
  CHECK(pns::coset_equal(*rep, {10.0, 0.3}, q.subspace()));
  CHECK(pns::norm(*rep, NormKind::l2) < 0.5);
  CHECK_FALSE(pns::representative_in_neighborhood(q, {0.0, 0.0}, 0.25, {10.0, 0.3}));
}

}  // TEST_SUITE
