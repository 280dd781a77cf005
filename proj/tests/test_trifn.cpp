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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pnspace/error.hpp"
#include "pnspace/formats.hpp"
#include "pnspace/tnorm.hpp"
#include "pnspace/triangle.hpp"

using pns::DistFn;
using pns::TNorm;
using pns::TriangleFn;

namespace {

std::vector<TNorm> basic_tnorms() {
  return {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()};
}

// x values half a dyadic cell away from every possible jump sum.
std::vector<double> probe_points(double reach) {
  std::vector<double> xs{-0.25};
  for (double x = 1.0 / 128; x < reach; x += 1.0 / 16) xs.push_back(x);
  return xs;
}

}  // namespace

TEST_SUITE("trifn") {

TEST_CASE("tnorm boundary values") {
  for (const auto& t : basic_tnorms()) {
    for (double a : {0.0, 0.2, 0.5, 1.0}) {
      CHECK(t(a, 1.0) == doctest::Approx(a));
      CHECK(t(a, 0.0) == 0.0);
    }
  }
  CHECK(TNorm::lukasiewicz()(0.3, 0.4) == 0.0);
  CHECK(TNorm::product()(0.5, 0.5) == 0.25);
  CHECK(pns::tconorm_of(TNorm::minimum())(0.3, 0.6) == doctest::Approx(0.6));
}

TEST_CASE("tnorm names round trip") {
  for (const auto& t : basic_tnorms()) CHECK(TNorm::from_name(t.name()) == t);
  CHECK_THROWS_AS(TNorm::from_name("nope"), pns::InvalidArgument);
}

TEST_CASE("eps calculus is exact") {
  pns::Rng rng(1);
  for (const auto& t : basic_tnorms()) {
    for (int i = 0; i < 100; ++i) {
      const double a = rng.uniform(1e-6, 10.0);
      const double b = rng.uniform(1e-6, 10.0);
      const auto ea = DistFn::unit_step(a);
      const auto eb = DistFn::unit_step(b);
      CHECK(pns::tau_T_conv(t, ea, eb) == DistFn::unit_step(a + b));
      CHECK(pns::tau_Tstar_conv(t, ea, eb) == DistFn::unit_step(a + b));
    }
  }
}

TEST_CASE("eps0 is the identity") {
  pns::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = pns::random_distfn(rng);
    // W(v, 1) = v + 1 - 1 may round.
    for (const auto& t : basic_tnorms())
      CHECK(pns::approx_equal(pns::tau_T_conv(t, f, DistFn::eps0()), f));
    CHECK(pns::tau_Tstar_conv(TNorm::minimum(), f, DistFn::eps0()) == f);
  }
}

TEST_CASE("sup-convolution matches the brute-force scan") {
  pns::Rng rng(3);
  for (const auto& t : basic_tnorms()) {
    for (int i = 0; i < 15; ++i) {
      const auto f = pns::random_distfn(rng, {.max_steps = 3, .dyadic = true});
      const auto g = pns::random_distfn(rng, {.max_steps = 3, .dyadic = true});
      const auto h = pns::tau_T_conv(t, f, g);
      for (double x : probe_points(6.5))
        CHECK(h(x) == doctest::Approx(oracle::sup_conv_at(t, f, g, x, 2e-3)).epsilon(1e-12));
    }
  }
}

TEST_CASE("inf-convolution matches the brute-force scan") {
  pns::Rng rng(4);
  for (const auto& t : basic_tnorms()) {
    const auto s = pns::tconorm_of(t);
    for (int i = 0; i < 15; ++i) {
      const auto f = pns::random_distfn(rng, {.max_steps = 3, .dyadic = true});
      const auto g = pns::random_distfn(rng, {.max_steps = 3, .dyadic = true});
      const auto h = pns::tau_Tstar_conv(t, f, g);
      for (double x : probe_points(6.5))
        CHECK(h(x) == doctest::Approx(oracle::inf_conv_at(s, f, g, x, 1.0, 2e-3)).epsilon(1e-12));
    }
  }
}

TEST_CASE("commutative and associative up to abscissa rounding") {
  pns::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto f = pns::random_distfn(rng);
    const auto g = pns::random_distfn(rng);
    const auto h = pns::random_distfn(rng);
    for (const auto& tau : {TriangleFn::tau_M(), TriangleFn::tau_Mstar(),
                            TriangleFn::tau_T(TNorm::product())}) {
      CHECK(pns::approx_equal(tau(f, g), tau(g, f)));
      CHECK(pns::approx_equal(tau(tau(f, g), h), tau(f, tau(g, h))));
    }
  }
}

TEST_CASE("tau_M sits below tau_M*") {
  CHECK(pns::check_triangle_order(TriangleFn::tau_M(), TriangleFn::tau_Mstar(), 300, 8).passed());
  const auto r = pns::check_triangle_order(TriangleFn::tau_T(TNorm::product()),
                                           TriangleFn::tau_Mstar(), 300, 9);
  CHECK(r.passed());
  CHECK(r.worst_margin >= 0.0);
}

TEST_CASE("dominance") {
  CHECK(pns::check_dominates(TriangleFn::tau_Mstar(), TriangleFn::tau_M(), 100, 1).passed());
  CHECK(pns::check_dominates(TriangleFn::tau_M(), TriangleFn::tau_M(), 100, 2).passed());
  CHECK(pns::check_dominates(TriangleFn::tau_M(), TriangleFn::tau_T(TNorm::product()), 100, 3)
            .passed());
}

TEST_CASE("lukasiewicz does not dominate minimum") {
  // W(M(1, .5), M(.5, 1)) = 0 < M(W(1, .5), W(.5, 1)) = .5, lifted to steps.
  const pns::Quadruple q{DistFn::eps0(), DistFn::from_steps({{0.0, 0.5}, {1.0, 1.0}}),
                         DistFn::from_steps({{0.0, 0.5}, {1.0, 1.0}}), DistFn::eps0()};
  const std::vector<pns::Quadruple> quads{q};
  const auto r = pns::check_dominates(TriangleFn::tau_T(TNorm::lukasiewicz()),
                                      TriangleFn::tau_M(), quads);
  CHECK_FALSE(r.passed());
  CHECK(r.worst_margin < 0.0);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("archimedean") {
  std::vector<pns::DistPair> pairs;
  pns::Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    auto f = pns::random_distfn(rng, {.d_plus = true});
    auto g = pns::random_distfn(rng, {.d_plus = true});
    if (f.is_eps_inf() || g.is_eps0()) continue;
    pairs.push_back({f, g.shifted(0.125)});
  }
  CHECK(pns::check_archimedean(TriangleFn::tau_M(), pairs).passed());
  const std::vector<pns::DistPair> bad{{DistFn::unit_step(1.0), DistFn::eps0()}};
  CHECK_THROWS_AS(pns::check_archimedean(TriangleFn::tau_M(), bad), pns::InvalidArgument);
}

TEST_CASE("sup continuity on a finite family") {
  pns::Rng rng(7);
  std::vector<DistFn> family;
  for (int i = 0; i < 8; ++i) family.push_back(pns::random_distfn(rng, {.dyadic = true}));
  const auto g = pns::random_distfn(rng, {.dyadic = true});
  CHECK(pns::check_sup_continuity(TriangleFn::tau_M(), family, g).passed());
}

TEST_CASE("tau_iterate argument count") {
  const std::vector<DistFn> three{DistFn::unit_step(1), DistFn::unit_step(2),
                                  DistFn::unit_step(3)};
  CHECK(pns::tau_iterate(TriangleFn::tau_M(), three, 2) == DistFn::unit_step(6));
  CHECK_THROWS_AS(pns::tau_iterate(TriangleFn::tau_M(), three, 3), pns::InvalidArgument);
}

TEST_CASE("triangle names") {
  CHECK(TriangleFn::from_name("tau_M") == TriangleFn::tau_M());
  CHECK(TriangleFn::from_name("tau_M*") == TriangleFn::tau_Mstar());
  CHECK(TriangleFn::from_name("tau_T:product") == TriangleFn::tau_T(TNorm::product()));
  CHECK_THROWS_AS(TriangleFn::from_name("tau_Q"), pns::InvalidArgument);
}

TEST_CASE("tabulated tnorm") {
  // Minimum sampled on a 3 x 3 grid.
  std::string text = "TN v1\n";
  for (double a : {0.0, 0.5, 1.0})
    for (double b : {0.0, 0.5, 1.0})
      text += std::to_string(a) + " " + std::to_string(b) + " " +
              std::to_string(std::min(a, b)) + "\n";
  const auto t = pns::parse_tnorm_table(text);
  CHECK(t(0.5, 1.0) == doctest::Approx(0.5));
  CHECK(t(0.5, 0.5) == doctest::Approx(0.5));
  CHECK(pns::check_tnorm_associativity(t, 3).passed());
  // Missing cell.
  CHECK_THROWS_AS(pns::parse_tnorm_table("TN v1\n0 0 0\n0 1 0\n1 0 0\n"), pns::ParseError);
  // T(a, 1) = a broken.
  CHECK_THROWS_AS(pns::parse_tnorm_table("TN v1\n0 0 0\n0 1 0.5\n1 0 0.5\n1 1 1\n"),
                  pns::ParseError);
}

}  // TEST_SUITE
