// Copyright 2026 The sumsq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>

#include "sumsq/quadratic_ring.hpp"

namespace sumsq
{
    /// x^2 + y^2 = delta
    struct Witness
    {
        QuadInt x;
        QuadInt y;

        bool verifies(const QuadInt &delta) const { return x * x + y * y == delta; }
    };

    struct SearchReport
    {
        QuadInt delta;
        std::uint64_t bound = 0;
        std::optional<Witness> witness;
        std::uint64_t states_examined = 0;
    };

    // Bounded exhaustive search over x = u + v*sqrt(d), y = s + t*sqrt(d) with all
    // four coordinates in [-bound, bound]. For each (v, t) the pair of coordinate
    // equations
    //     u^2 + s^2 = a - d (v^2 + t^2),   uv + st = b / 2
    // is solved in closed form through (uv + st)^2 + (ut - sv)^2 = (u^2 + s^2)(v^2 + t^2),
    // so the work is O(bound^2). The witness returned is the one of least height
    // max(|u|, |v|, |s|, |t|); ties go to the smaller y, then x, comparing (s, t)
    // and (u, v) lexicographically in the order 0, 1, -1, 2, -2, ... Because the
    // height comes first, the answer is the same for every bound that admits it.
    SearchReport find_representation(const QuadInt &delta, std::uint64_t bound);
} // namespace sumsq
