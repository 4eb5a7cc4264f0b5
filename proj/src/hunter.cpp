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

#include "sumsq/hunter.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "sumsq/error.hpp"

namespace sumsq
{
    bool HuntEntry::is_hit() const
    {
        return decision && local_report.all_solvable && decision->status == Status::global_obstruction && !search.witness;
    }

    bool HuntEntry::is_discrepancy() const
    {
        return decision && search.witness && decision->status != Status::representable;
    }

    bool HuntEntry::is_unverified() const
    {
        return decision && decision->status == Status::representable && !search.witness;
    }

    std::vector<HunterHit> HuntResult::hits() const
    {
        std::vector<HunterHit> out;
        for (const auto &e : entries)
            if (e.is_hit())
                out.push_back({e.delta, e.local_report, *e.decision, options.bound});
        return out;
    }

    std::size_t HuntResult::discrepancy_count() const
    {
        std::size_t n = 0;
        for (const auto &e : entries)
            n += e.is_discrepancy();
        return n;
    }

    std::size_t HuntResult::unverified_count() const
    {
        std::size_t n = 0;
        for (const auto &e : entries)
            n += e.is_unverified();
        return n;
    }

    std::size_t HuntResult::strip_count() const
    {
        std::size_t n = 0;
        for (const auto &e : entries)
            n += e.on_strip;
        return n;
    }

    HuntResult hunt_counterexamples(const HuntOptions &options)
    {
        if (options.bound == 0)
            throw ParameterError("hunt: search bound must be positive");
        if (options.workers == 0)
            throw ParameterError("hunt: worker count must be positive");

        HuntResult result{options, {}};
        const auto box = static_cast<long>(options.box);
        std::vector<QuadInt> deltas;
        for (long a = -box; a <= box; ++a)
            for (long b = -box; b <= box; ++b)
                if (a != 0 || b != 0)
                    deltas.emplace_back(Integer(a), Integer(b), kMinus14);

        std::vector<std::optional<HuntEntry>> slots(deltas.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        DecideOptions decide;
        decide.witness_bound = 0;
        decide.variant = options.variant;
        decide.descent = options.descent;

        auto work = [&] {
            for (std::size_t i = next++; i < deltas.size(); i = next++)
            {
                try
                {
                    const QuadInt &delta = deltas[i];
                    HuntEntry entry{delta, delta.a() == 0, {}, std::nullopt, find_representation(delta, options.bound)};
                    if (entry.on_strip)
                    {
                        entry.local_report = locally_solvable_everywhere(delta, options.descent);
                    }
                    else
                    {
                        Decision decision = decide_qsqrt_m14(delta, decide);
                        if (decision.status == Status::representable && entry.search.witness)
                        {
                            decision.witness = entry.search.witness;
                            decision.witness_verified = decision.witness->verifies(delta);
                        }
                        entry.local_report = decision.local_report;
                        entry.decision = std::move(decision);
                    }
                    slots[i] = std::move(entry);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = deltas.size();
                }
            }
        };

        std::vector<std::thread> pool;
        for (unsigned w = 1; w < options.workers; ++w)
            pool.emplace_back(work);
        work();
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);

        result.entries.reserve(slots.size());
        for (auto &s : slots)
            result.entries.push_back(std::move(*s));
        return result;
    }

    bool verify_classical(std::uint64_t n_max)
    {
        if (n_max == 0)
            throw ParameterError("verify_classical: n_max must be positive");
        // Exhaustive side: mark every x^2 + y^2 <= n_max.
        std::vector<bool> reachable(n_max + 1, false);
        for (std::uint64_t x = 0; x * x <= n_max; ++x)
            for (std::uint64_t y = 0; y <= x && x * x + y * y <= n_max; ++y)
                reachable[x * x + y * y] = true;

        for (std::uint64_t n = 1; n <= n_max; ++n)
        {
            const auto decision = decide_rational(Integer(static_cast<unsigned long>(n)));
            if (decision.representable != reachable[n])
                return false;
            if (decision.witness)
            {
                const auto &[x, y] = *decision.witness;
                if (x * x + y * y != n)
                    return false;
            }
        }
        return true;
    }
} // namespace sumsq
