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
#include <vector>

#include "sumsq/quadratic_ring.hpp"

namespace sumsq
{
    struct DescentLimits
    {
        unsigned max_depth = 64;                  ///< largest modulus exponent k accepted
        std::uint64_t max_branches = 50'000'000;  ///< total residue pairs examined per query
    };

    /// A solution of x^2 + y^2 = delta in Z[sqrt(d)] / p^level. Coordinates of x and
    /// y are canonical representatives in [0, p^level).
    struct ModularSolution
    {
        QuadInt x;
        QuadInt y;
        unsigned level = 0;
        /// Least T with p^T in the ideal (2x, 2y); empty when that ideal is zero.
        std::optional<unsigned> lift_exponent;
        /// 2T + 1 <= level, so the solution lifts to the completion (Hensel).
        bool smooth = false;
    };

    struct LocalVerdict
    {
        Place place;
        bool solvable = false;
        /// Present for every solvable finite place.
        std::optional<ModularSolution> certificate;
        /// For unsolvable places: no solution exists modulo p^exhausted_at.
        std::optional<unsigned> exhausted_at;
        /// K(p, delta); 0 at the archimedean place.
        unsigned cutoff = 0;
    };

    struct LocalReport
    {
        bool all_solvable = true;
        std::vector<LocalVerdict> verdicts;  ///< finite places by increasing p, then archimedean

        std::vector<Place> failing_places() const;
    };

    /// {2} together with the primes dividing N(delta); every other finite place
    /// has good reduction.
    std::vector<Integer> relevant_primes(const QuadInt &delta);

    /// K(p, delta) = 2 (v_p(2) + ceil(v_p(N(delta)) / 2)) + 1. Any local solution
    /// reduces to a smooth solution modulo p^K.
    unsigned cutoff(const Integer &p, const QuadInt &delta);

    /// Least T with p^T in the Z_p[sqrt(d)]-ideal generated by 2x and 2y, or empty
    /// if both vanish.
    std::optional<unsigned> lift_exponent(const QuadInt &x, const QuadInt &y, const Integer &p);

    /// x^2 + y^2 = delta (mod p^level)
    bool satisfies_mod(const QuadInt &delta, const QuadInt &x, const QuadInt &y, const Integer &p, unsigned level);

    /// Every solution branch of x^2 + y^2 = delta in (Z[sqrt(d)] / p^k)^2, by
    /// level-wise descent from an exhaustive level-1 enumeration. Smooth branches
    /// are closed at the level where they become smooth (they lift to every higher
    /// level); the remaining entries are the non-smooth solutions modulo p^k.
    std::vector<ModularSolution> solvable_mod(const QuadInt &delta, const Integer &p, unsigned k,
                                              const DescentLimits &limits = {});

    struct DepthProbe
    {
        bool solutions_exist = false;           ///< some solution modulo p^k
        std::optional<ModularSolution> smooth;  ///< first smooth branch found at level <= k
    };

    /// The unrestricted descent of solvable_mod, stopped at the first smooth branch.
    /// Answers "solvable mod p^k" and "lifts to the completion by depth k" without
    /// listing every solution.
    DepthProbe probe_depth(const QuadInt &delta, const Integer &p, unsigned k, const DescentLimits &limits = {});

    /// Exact decision of solvability in the completion(s) of Z[sqrt(d)] above p.
    LocalVerdict locally_solvable(const QuadInt &delta, const Integer &p, const DescentLimits &limits = {});

    /// Sign condition at the infinite places (always solvable for d < 0).
    LocalVerdict archimedean_verdict(const QuadInt &delta);

    LocalReport locally_solvable_everywhere(const QuadInt &delta, const DescentLimits &limits = {});
} // namespace sumsq
