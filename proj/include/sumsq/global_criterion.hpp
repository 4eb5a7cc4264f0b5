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
#include <string>
#include <vector>

#include "sumsq/local_solver.hpp"
#include "sumsq/quadratic_ring.hpp"
#include "sumsq/search_oracle.hpp"

namespace sumsq
{
    enum class Status
    {
        representable,
        local_obstruction,
        global_obstruction,
        unknown
    };

    /// How condition (2) of the sqrt(-14) criterion was settled.
    enum class Branch
    {
        d1_nonempty,
        parity
    };

    /// The parity condition reads (a1/7) = (-1)^e. The as-printed exponent is
    /// s1 + s2 + sum_{D2} e_i/2 + sum_{D3} e_i; the corrected one adds s3, the
    /// exponent of 7 in a. Only the corrected form matches exhaustive search for
    /// delta divisible by 7 (e.g. -7 = (-7)^2 + (-2 sqrt(-14))^2).
    enum class CriterionVariant
    {
        corrected,
        as_printed
    };

    std::string to_string(Status s);
    std::string to_string(Branch b);
    std::string to_string(CriterionVariant v);

    struct CriterionEvidence
    {
        NormFactorization factorization;
        CriterionVariant variant = CriterionVariant::corrected;
        unsigned parity_exponent = 0;
        int a1_symbol = 0;  ///< (a1 / 7)
        Branch branch = Branch::parity;
        bool condition1 = false;  ///< locally solvable everywhere
        bool condition2 = false;  ///< D1 nonempty, or the parity condition
    };

    struct Decision
    {
        QuadInt delta;
        Status status = Status::unknown;
        std::optional<Witness> witness;
        /// A witness is attached and x^2 + y^2 = delta was checked exactly.
        bool witness_verified = false;
        LocalReport local_report;
        std::optional<CriterionEvidence> evidence;  ///< decide_qsqrt_m14 only

        std::vector<Place> failing_places() const { return local_report.failing_places(); }
    };

    struct DecideOptions
    {
        /// Coordinate bound for the witness search on Representable; 0 skips it.
        std::uint64_t witness_bound = 100;
        CriterionVariant variant = CriterionVariant::corrected;
        DescentLimits descent;
        FactorizationLimits factorization;
    };

    unsigned parity_exponent(const NormFactorization &nf, CriterionVariant variant);

    /// Exact decision over Z[sqrt(-14)]: representable iff every place is
    /// solvable and (D1 is nonempty or (a1/7) = (-1)^e). Throws
    /// UnsupportedInput for a = 0, DomainError for delta = 0.
    Decision decide_qsqrt_m14(const QuadInt &delta, const DecideOptions &options = {});

    struct RationalDecision
    {
        Integer n;
        bool representable = false;
        std::optional<std::pair<Integer, Integer>> witness;  ///< x >= y >= 0
    };

    /// n >= 1 is a sum of two squares iff every prime 3 (mod 4) divides it to an
    /// even power. The witness is composed from prime-power representations.
    RationalDecision decide_rational(const Integer &n, const FactorizationLimits &limits = {});

    /// For any valid d: LocalObstruction if some place fails, Representable if the
    /// bounded search finds a witness, otherwise Unknown.
    Decision decide_generic(const QuadInt &delta, std::uint64_t search_bound, const DescentLimits &limits = {});
} // namespace sumsq
