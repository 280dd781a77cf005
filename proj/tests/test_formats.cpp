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

#include <filesystem>
#include <string>

#include "pnspace/error.hpp"
#include "pnspace/formats.hpp"

using pns::DistFn;

namespace {

const std::filesystem::path kData = PNS_DATA_DIR;

std::string parse_error_of(const std::string& text) {
  try {
    pns::parse_distfn(text);
  } catch (const pns::ParseError& e) {
    return e.what();
  }
  return "";
}

std::string space_error_of(const std::string& text) {
  try {
    pns::parse_space_spec(text);
  } catch (const pns::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("DF text round trip") {
  pns::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto f = pns::random_distfn(rng, {.d_plus = true});
    CHECK(pns::parse_distfn(pns::format_distfn(f)) == f);
  }
  CHECK(pns::format_distfn(DistFn::unit_step(0.5)) == "DF v1\n0.5 1\ninf 1\n");
}

TEST_CASE("DF comments and blank lines") {
  const auto f = pns::parse_distfn("# header next\nDF v1\n\n0 0\n1.5 0.25 # mid\n2 1\ninf 1\n");
  CHECK(f == DistFn::from_steps({{1.5, 0.25}, {2.0, 1.0}}));
}

TEST_CASE("DF errors carry line numbers") {
  CHECK(parse_error_of("") == "empty DF text");
  CHECK(parse_error_of("DF v2\n") == "line 1: expected header 'DF v1'");
  CHECK(parse_error_of("DF v1\n1 0.5\n0.5 1\ninf 1\n") ==
        "line 3: abscissae must be strictly ascending");
  CHECK(parse_error_of("DF v1\n1 0.5\n2 0.4\ninf 1\n") ==
        "line 3: values must be non-decreasing");
  CHECK(parse_error_of("DF v1\n-1 0.5\ninf 1\n") ==
        "line 2: abscissa must be >= 0 (F vanishes on x <= 0)");
  CHECK(parse_error_of("DF v1\n1 0.5\n") == "line 2: missing final 'inf 1' line");
  CHECK(parse_error_of("DF v1\n1 0.5\ninf 0.9\n") == "line 3: value at +inf must be 1 in Delta+");
  CHECK(parse_error_of("DF v1\n1 x\ninf 1\n") == "line 2: bad value 'x'");
  CHECK(parse_error_of("DF v1\n1 1.5\ninf 1\n") == "line 2: value outside [0, 1]");
  CHECK(parse_error_of("DF v1\ninf 1\n1 1\n") == "line 3: data after the final 'inf' line");
}

TEST_CASE("DF files") {
  CHECK(pns::load_distfn(kData / "eps2.df") == DistFn::unit_step(2.0));
  CHECK(pns::load_distfn(kData / "f0.df") == DistFn::from_steps({{0.5, 0.5}, {1.0, 1.0}}));
  CHECK_THROWS_AS(pns::load_distfn(kData / "missing.df"), pns::IoError);
}

TEST_CASE("vectors and subspaces") {
  CHECK(pns::parse_vector("1, 2 3") == pns::Vector{1.0, 2.0, 3.0});
  CHECK_THROWS_AS(pns::parse_vector(""), pns::ParseError);
  CHECK_THROWS_AS(pns::parse_vector("1 nan"), pns::ParseError);
  const auto v = pns::PNSpace::simple(3, pns::NormKind::l2, pns::TriangleFn::tau_M(),
                                      pns::TriangleFn::tau_Mstar());
  const auto w = pns::parse_subspace("1 0 0; 0 1 0", v);
  CHECK(w.dim() == 2);
  CHECK(w.contains({3.0, -1.0, 0.0}));
  CHECK(pns::parse_subspace("c00-sum-kernel", v).is_c00_sum_kernel());
}

TEST_CASE("space files") {
  const auto s = pns::load_space_spec(kData / "simple-r3.json");
  CHECK(s.space.dim() == 3);
  REQUIRE(s.subspace.has_value());
  CHECK(s.subspace->dim() == 1);
  const auto c = pns::load_space_spec(kData / "c00-linf.json");
  CHECK(c.space.kind() == pns::SpaceKind::c00);
  CHECK(c.subspace->is_c00_sum_kernel());
  const auto sv = pns::load_space_spec(kData / "serstnev-r2.json");
  CHECK(sv.space.rule() == pns::RuleKind::serstnev);
  CHECK(*sv.space.f0() == DistFn::from_steps({{0.5, 0.5}, {1.0, 1.0}}));
}

TEST_CASE("space file errors name the field") {
  CHECK(space_error_of(R"({"kind": "finite", "dimension": 2, "norm": "l2", "colour": 1})") ==
        "field 'colour': unknown");
  CHECK(space_error_of(R"({"kind": "finite", "norm": "l2"})") == "field 'dimension': missing");
  CHECK(space_error_of(R"({"kind": "finite", "dimension": "2", "norm": "l2"})") ==
        "field 'dimension': wrong type");
  CHECK(space_error_of(R"({"kind": "finite", "dimension": 2, "norm": "l7"})")
            .starts_with("field 'norm': "));
  CHECK(space_error_of(R"({"kind": "finite", "dimension": 2, "norm": "l2", "rule": "odd"})") ==
        "field 'rule': unknown rule \"odd\"");
  CHECK(space_error_of(
            R"({"kind": "finite", "dimension": 2, "norm": "l2", "subspace": "c00-sum-kernel"})") ==
        "field 'subspace': c00-sum-kernel needs kind c00");
  CHECK(space_error_of(R"({"kind": "finite", "dimension": 2, "norm": "l2",
                           "subspace": {"basis": [[1, 1], [2, 2]]}})")
            .starts_with("field 'subspace': "));
  CHECK(space_error_of(R"({"kind": "finite", "dimension": 2, "norm": "l2",
                           "tau": "tau_M", "tau_star": "tau_T:luk"})")
            .starts_with("field 'rule': "));
  CHECK_FALSE(space_error_of("[1, 2]").empty());
}

}  // TEST_SUITE
