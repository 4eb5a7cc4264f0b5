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

#include "sumsq/global_criterion.hpp"

namespace sumsq
{
    /// One swept delta = a + b sqrt(-14).
    struct HuntEntry
    {
        QuadInt delta;
        bool on_strip = false;             ///< a = 0: the criterion is not defined, only locals and search run
        LocalReport local_report;
        std::optional<Decision> decision;  ///< absent on the strip
        SearchReport search;

        /// Every place solvable, criterion says GlobalObstruction, and no witness
        /// within the bound.
        bool is_hit() const;
        /// The search found a witness but the criterion says no.
        bool is_discrepancy() const;
        /// Criterion says yes, no witness within the bound.
        bool is_unverified() const;
    };

    struct HunterHit
    {
        QuadInt delta;
        LocalReport local_report;
        Decision criterion_decision;
        std::uint64_t search_exhausted_bound = 0;
    };

    struct HuntOptions
    {
        std::uint64_t box = 1;    ///< |a|, |b| <= box
        std::uint64_t bound = 1;  ///< witness search bound
        unsigned workers = 1;
        CriterionVariant variant = CriterionVariant::corrected;
        DescentLimits descent;
    };

    struct HuntResult
    {
        HuntOptions options;
        std::vector<HuntEntry> entries;  ///< increasing a, then increasing b

        std::vector<HunterHit> hits() const;
        std::size_t discrepancy_count() const;
        std::size_t unverified_count() const;
        std::size_t strip_count() const;
    };

    /// Sweeps the box with a pool of worker threads. The result does not depend on
    /// the worker count.
    HuntResult hunt_counterexamples(const HuntOptions &options);

    /// decide_rational against exhaustive search for every 1 <= n <= n_max.
    bool verify_classical(std::uint64_t n_max);
} // namespace sumsq
