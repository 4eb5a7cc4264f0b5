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

#include <doctest.h>

#include "generators.hpp"
#include "sumsq/error.hpp"
#include "sumsq/global_criterion.hpp"

using namespace sumsq;
using sumsq::testing::Gen;

namespace
{
    QuadInt q(long a, long b, std::int64_t d = kMinus14) { return QuadInt(Integer(a), Integer(b), d); }

    bool fails_at(const Decision &d, long p)
    {
        for (const auto &place : d.failing_places())
            if (const auto *f = std::get_if<FinitePlace>(&place); f && f->prime == p)
                return true;
        return false;
    }
} // namespace

TEST_CASE("decide 2")
{
    const auto d = decide_qsqrt_m14(q(2, 0));
    CHECK(d.status == Status::representable);
    REQUIRE(d.witness);
    CHECK(d.witness->x == q(1, 0));
    CHECK(d.witness->y == q(1, 0));
    CHECK(d.witness_verified);
    REQUIRE(d.evidence);
    CHECK(d.evidence->factorization.d_sets.d1.empty());
    CHECK(d.evidence->parity_exponent == 2);
    CHECK(d.evidence->a1_symbol == 1);
    CHECK(d.evidence->branch == Branch::parity);
}

TEST_CASE("decide 1 + sqrt(-14): obstruction at 2")
{
    const auto d = decide_qsqrt_m14(q(1, 1));
    CHECK(d.status == Status::local_obstruction);
    CHECK(fails_at(d, 2));
    CHECK_FALSE(d.witness);
    CHECK_FALSE(d.evidence->condition1);
}

TEST_CASE("decide -13 + 2 sqrt(-14): D1 branch")
{
    const auto d = decide_qsqrt_m14(q(-13, 2));
    CHECK(d.status == Status::representable);
    CHECK(d.evidence->branch == Branch::d1_nonempty);
    CHECK(d.evidence->factorization.d_sets.d1 == std::vector<Integer>{5});
    REQUIRE(d.witness);
    CHECK(d.witness->x == q(1, 1));
    CHECK(d.witness->y == q(0, 0));
}

TEST_CASE("decide -1: global obstruction")
{
    const auto d = decide_qsqrt_m14(q(-1, 0));
    CHECK(d.local_report.all_solvable);
    CHECK(d.status == Status::global_obstruction);
    CHECK(d.evidence->parity_exponent == 0);
    CHECK(d.evidence->a1_symbol == -1);
    CHECK_FALSE(d.evidence->condition2);
}

TEST_CASE("multiples of 7 need the s3 term in the parity exponent")
{
    // -7 = (7)^2 + (2 sqrt(-14))^2
    const auto corrected = decide_qsqrt_m14(q(-7, 0));
    CHECK(corrected.status == Status::representable);
    CHECK(corrected.witness_verified);
    CHECK(corrected.evidence->parity_exponent == 3);

    DecideOptions printed;
    printed.variant = CriterionVariant::as_printed;
    const auto literal = decide_qsqrt_m14(q(-7, 0), printed);
    CHECK(literal.status == Status::global_obstruction);
    CHECK(literal.evidence->parity_exponent == 2);

    CHECK(decide_qsqrt_m14(q(7, 0)).status == Status::global_obstruction);
    CHECK(decide_qsqrt_m14(q(7, 0), printed).status == Status::representable);
}

TEST_CASE("decide rejects bad input")
{
    CHECK_THROWS_AS(decide_qsqrt_m14(q(0, 3)), UnsupportedInput);
    CHECK_THROWS_AS(decide_qsqrt_m14(q(0, 0)), DomainError);
    CHECK_THROWS_AS(decide_qsqrt_m14(q(1, 0, -2)), ParameterError);
}

TEST_CASE("evidence is internally consistent")
{
    Gen g(61);
    for (int i = 0; i < 400; ++i)
    {
        const QuadInt delta = g.nonzero_quad(300, kMinus14);
        if (delta.a() == 0)
            continue;
        DecideOptions opts;
        opts.witness_bound = 0;
        const auto d = decide_qsqrt_m14(delta, opts);
        const auto &ev = *d.evidence;
        CHECK(ev.factorization.reconstruct() == norm(delta));
        CHECK(parity_exponent(ev.factorization, ev.variant) == ev.parity_exponent);
        CHECK((ev.branch == Branch::d1_nonempty) == !ev.factorization.d_sets.d1.empty());
        CHECK(ev.condition1 == d.local_report.all_solvable);
        if (d.status == Status::global_obstruction)
        {
            CHECK(d.local_report.all_solvable);
            CHECK(ev.factorization.d_sets.d1.empty());
            CHECK(ev.a1_symbol != (ev.parity_exponent % 2 == 0 ? 1 : -1));
        }
        if (d.status == Status::local_obstruction)
            CHECK_FALSE(d.failing_places().empty());
        if (d.status == Status::representable && ev.branch == Branch::parity)
            CHECK(ev.factorization.d_sets.d1.empty());
    }
}

TEST_CASE("conjugate elements get the same status")
{
    for (long a = -12; a <= 12; ++a)
    {
        if (a == 0)
            continue;
        for (long b = 1; b <= 12; ++b)
        {
            DecideOptions opts;
            opts.witness_bound = 0;
            CHECK(decide_qsqrt_m14(q(a, b), opts).status == decide_qsqrt_m14(q(a, -b), opts).status);
        }
    }
}

TEST_CASE("representable without a witness in range is reported unverified")
{
    DecideOptions opts;
    opts.witness_bound = 1;
    const auto d = decide_qsqrt_m14(q(-13, 2), opts);
    CHECK(d.status == Status::representable);
    CHECK(d.witness_verified);

    const auto far = decide_qsqrt_m14(q(2, 0), DecideOptions{0});
    CHECK(far.status == Status::representable);
    CHECK_FALSE(far.witness);
    CHECK_FALSE(far.witness_verified);
}

TEST_CASE("decide_rational")
{
    auto two = decide_rational(2);
    CHECK(two.representable);
    CHECK(two.witness == std::pair<Integer, Integer>{1, 1});
    CHECK_FALSE(decide_rational(3).representable);
    CHECK(decide_rational(9).witness == std::pair<Integer, Integer>{3, 0});
    CHECK(decide_rational(1).witness == std::pair<Integer, Integer>{1, 0});
    CHECK_THROWS_AS(decide_rational(0), DomainError);

    const Integer big("1000000000000000000000049");  // prime, 1 mod 4
    REQUIRE(is_prime(big));
    const auto r = decide_rational(big * 9);
    REQUIRE(r.witness);
    CHECK(r.witness->first * r.witness->first + r.witness->second * r.witness->second == big * 9);
}

TEST_CASE("decide_rational matches exhaustive search up to 10^4")
{
    std::vector<bool> reachable(10001, false);
    for (long x = 0; x * x <= 10000; ++x)
        for (long y = 0; x * x + y * y <= 10000; ++y)
            reachable[static_cast<std::size_t>(x * x + y * y)] = true;
    for (long n = 1; n <= 10000; ++n)
    {
        const auto r = decide_rational(n);
        REQUIRE(r.representable == reachable[static_cast<std::size_t>(n)]);
        if (r.witness)
            REQUIRE(r.witness->first * r.witness->first + r.witness->second * r.witness->second == n);
    }
}

TEST_CASE("decide_generic")
{
    const auto three = decide_generic(q(3, 0, -2), 5);
    CHECK(three.status == Status::local_obstruction);
    CHECK(fails_at(three, 3));

    const auto five = decide_generic(q(5, 0, -1), 5);
    CHECK(five.status == Status::representable);
    CHECK(five.witness_verified);

    CHECK(decide_generic(q(1, 1), 10).status == Status::local_obstruction);
    CHECK(decide_generic(q(-1, 0), 30).status == Status::unknown);
    CHECK_FALSE(decide_generic(q(-1, 0), 30).evidence);
    CHECK_THROWS_AS(decide_generic(q(1, 0), 0), ParameterError);
}
