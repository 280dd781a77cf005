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

#ifndef PNSPACE_ORACLE_HPP
#define PNSPACE_ORACLE_HPP

#include "pnspace/distfn.hpp"

namespace pns::oracle {

/// d_S by scanning h = step, 2 step, ..., 1 and testing (F,G;h) and (G,F;h)
/// at breakpoints shifted by +-h, nudged by 1e-9 on both sides. Returns the
/// first grid h that passes, so it over-estimates by at most one step.
double sibley_grid(const DistFn& f, const DistFn& g, double step = 1e-4);

}  // namespace pns::oracle

#endif  // PNSPACE_ORACLE_HPP
