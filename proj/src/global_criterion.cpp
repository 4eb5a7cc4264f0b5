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

#include "sumsq/global_criterion.hpp"

#include <stdexcept>

#include "sumsq/error.hpp"

namespace sumsq
{
    namespace
    {
        using Gaussian = std::pair<Integer, Integer>;

        Gaussian multiply(const Gaussian &x, const Gaussian &y)
        {
            return {x.first * y.first - x.second * y.second, x.first * y.second + x.second * y.first};
        }

        // p = 1 (mod 4): Euclid on (p, r) with r^2 = -1 stops at the first remainder below sqrt(p).
        Gaussian two_squares_of_prime(const Integer &p)
        {
            if (p == 2)
                return {1, 1};
            Integer r = *sqrt_mod_prime(Integer(-1), p);
            if (2 * r > p)
                r = p - r;
            Integer a = p, b = r;
            const Integer root = isqrt(p);
            while (b > root)
            {
                const Integer next = a % b;
                a = b;
                b = next;
            }
            const Integer rest = p - b * b;
            const Integer y = isqrt(rest);
            if (y * y != rest)
                throw std::logic_error("two-square decomposition failed for " + p.get_str());
            return {b, y};
        }

        void attach_witness(Decision &decision, std::uint64_t bound)
        {
            if (bound == 0)
                return;
            auto report = find_representation(decision.delta, bound);
            if (report.witness && report.witness->verifies(decision.delta))
            {
                decision.witness = std::move(report.witness);
                decision.witness_verified = true;
            }
        }
    } // namespace

    std::string to_string(Status s)
    {
        switch (s)
        {
        case Status::representable:
            return "Representable";
        case Status::local_obstruction:
            return "LocalObstruction";
        case Status::global_obstruction:
            return "GlobalObstruction";
        case Status::unknown:
            return "Unknown";
        }
        return "?";
    }

    std::string to_string(Branch b) { return b == Branch::d1_nonempty ? "d1_nonempty" : "parity"; }

    std::string to_string(CriterionVariant v) { return v == CriterionVariant::corrected ? "corrected" : "as_printed"; }

    unsigned parity_exponent(const NormFactorization &nf, CriterionVariant variant)
    {
        unsigned e = nf.s1 + nf.s2;
        for (const Integer &p : nf.d_sets.d2)
            e += nf.exponent_of(p) / 2;
        for (const Integer &p : nf.d_sets.d3)
            e += nf.exponent_of(p);
        if (variant == CriterionVariant::corrected)
            e += nf.s3;
        return e;
    }

    Decision decide_qsqrt_m14(const QuadInt &delta, const DecideOptions &options)
    {
        if (delta.d() != kMinus14)
            throw ParameterError("decide_qsqrt_m14: delta must lie in Z[sqrt(-14)]");
        NormFactorization nf = norm_factorization(delta, options.factorization);

        Decision decision{delta, Status::unknown, std::nullopt, false, locally_solvable_everywhere(delta, options.descent),
                          std::nullopt};
        CriterionEvidence ev;
        ev.variant = options.variant;
        ev.parity_exponent = parity_exponent(nf, options.variant);
        ev.a1_symbol = legendre(nf.a1, 7);
        ev.branch = nf.d_sets.d1.empty() ? Branch::parity : Branch::d1_nonempty;
        ev.condition1 = decision.local_report.all_solvable;
        ev.condition2 = ev.branch == Branch::d1_nonempty || ev.a1_symbol == (ev.parity_exponent % 2 == 0 ? 1 : -1);
        ev.factorization = std::move(nf);

        if (!ev.condition1)
            decision.status = Status::local_obstruction;
        else if (!ev.condition2)
            decision.status = Status::global_obstruction;
        else
            decision.status = Status::representable;
        decision.evidence = std::move(ev);

        if (decision.status == Status::representable)
            attach_witness(decision, options.witness_bound);
        return decision;
    }

    RationalDecision decide_rational(const Integer &n, const FactorizationLimits &limits)
    {
        if (n < 1)
            throw DomainError("decide_rational: n must be positive");
        RationalDecision out{n, true, std::nullopt};
        Gaussian acc{1, 0};
        for (const auto &[p, e] : factorize(n, limits))
        {
            if (p % 4 == 3)
            {
                if (e % 2 != 0)
                {
                    out.representable = false;
                    return out;
                }
                Integer half;
                mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
                acc = multiply(acc, {half, 0});
                continue;
            }
            const Gaussian g = two_squares_of_prime(p);
            for (unsigned i = 0; i < e; ++i)
                acc = multiply(acc, g);
        }
        Integer x = abs(acc.first), y = abs(acc.second);
        if (x < y)
            std::swap(x, y);
        out.witness = Gaussian{x, y};
        return out;
    }

    Decision decide_generic(const QuadInt &delta, std::uint64_t search_bound, const DescentLimits &limits)
    {
        if (search_bound == 0)
            throw ParameterError("decide_generic: search bound must be positive");
        Decision decision{delta, Status::unknown, std::nullopt, false, locally_solvable_everywhere(delta, limits),
                          std::nullopt};
        if (!decision.local_report.all_solvable)
        {
            decision.status = Status::local_obstruction;
            return decision;
        }
        attach_witness(decision, search_bound);
        if (decision.witness)
            decision.status = Status::representable;
        return decision;
    }
} // namespace sumsq
