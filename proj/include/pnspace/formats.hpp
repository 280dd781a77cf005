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

#ifndef PNSPACE_FORMATS_HPP
#define PNSPACE_FORMATS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "pnspace/distfn.hpp"
#include "pnspace/space.hpp"
#include "pnspace/subspace.hpp"
#include "pnspace/tnorm.hpp"

namespace pns {

/**
 * DF v1 text:
 *
 *     DF v1
 *     0.5 0.25     F = 0.25 on (0.5, next x]
 *     2 1
 *     inf 1
 *
 * x ascending and >= 0, v non-decreasing in [0, 1], value at +inf equal to 1.
 * Blank lines and '#' comments are ignored.
 */
DistFn parse_distfn(std::string_view text);
DistFn load_distfn(const std::filesystem::path& path);
std::string format_distfn(const DistFn& f);

/// TN v1 text: lines "a b v" covering the full grid a, b in {0, 1/(n-1), ..., 1}.
TNorm parse_tnorm_table(std::string_view text);
TNorm load_tnorm_table(const std::filesystem::path& path);

/// "3 4", "3,4" or "3, 4".
Vector parse_vector(std::string_view text);

/// "c00-sum-kernel", or basis vectors separated by ';' ("1 0 0; 0 1 0").
Subspace parse_subspace(std::string_view text, const PNSpace& ambient);

/**
 * Space file (JSON):
 *
 *     { "kind": "finite", "dimension": 3, "norm": "l2", "rule": "unit-step",
 *       "tau": "tau_M", "tau_star": "tau_M*",
 *       "subspace": { "basis": [[1, 0, 0]] } }
 *
 * kind is "finite" or "c00"; rule is "unit-step", "serstnev" (needs "f0", a DF
 * file relative to the space file) or "squared". "subspace" may also be the
 * string "c00-sum-kernel". "expect_closed" overrides the closedness verdict
 * the closedness suite asserts.
 */
struct SpaceSpec {
  PNSpace space;
  std::optional<Subspace> subspace;
  std::optional<bool> expect_closed;
};

SpaceSpec parse_space_spec(std::string_view text,
                           const std::filesystem::path& base_dir = {});
SpaceSpec load_space_spec(const std::filesystem::path& path);

}  // namespace pns

#endif  // PNSPACE_FORMATS_HPP
