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

#include <fstream>
#include <set>
#include <string>

#include "generators.hpp"
#include "sumsq/error.hpp"
#include "sumsq/hunter.hpp"
#include "sumsq/search_oracle.hpp"

using namespace sumsq;
using sumsq::testing::Gen;

namespace
{
    QuadInt q(long a, long b, std::int64_t d = kMinus14) { return QuadInt(Integer(a), Integer(b), d); }

    // Plain four-coordinate scan, used to check the closed-form kernel.
    bool brute_force(const QuadInt &delta, long bound)
    {
        for (long u = -bound; u <= bound; ++u)
            for (long v = -bound; v <= bound; ++v)
                for (long s = -bound; s <= bound; ++s)
                    for (long t = -bound; t <= bound; ++t)
                        if (Witness{q(u, v, delta.d()), q(s, t, delta.d())}.verifies(delta))
                            return true;
        return false;
    }
} // namespace

TEST_CASE("search frozen values")
{
    const auto two = find_representation(q(2, 0), 1);
    REQUIRE(two.witness);
    CHECK(two.witness->x == q(1, 0));
    CHECK(two.witness->y == q(1, 0));

    const auto sq = find_representation(q(-13, 2), 2);
    REQUIRE(sq.witness);
    CHECK(sq.witness->x == q(1, 1));
    CHECK(sq.witness->y == q(0, 0));

    const auto odd = find_representation(q(1, 1), 50);
    CHECK_FALSE(odd.witness);
    CHECK(odd.states_examined == 0);

    const auto zero = find_representation(q(0, 0), 3);
    REQUIRE(zero.witness);
    CHECK(zero.witness->x.is_zero());

    CHECK_FALSE(find_representation(q(-1, 0), 60).witness);
    CHECK(find_representation(q(-7, 0), 10).witness->verifies(q(-7, 0)));
}

TEST_CASE("closed-form kernel agrees with the four-coordinate scan")
{
    Gen g(71);
    for (std::int64_t d : {-14, -1, -2, 2, 3})
    {
        for (int i = 0; i < 120; ++i)
        {
            const QuadInt delta = g.nonzero_quad(30, d);
            const auto report = find_representation(delta, 3);
            REQUIRE_MESSAGE(report.witness.has_value() == brute_force(delta, 3), delta.to_string());
            if (report.witness)
                CHECK(report.witness->verifies(delta));
        }
    }
}

TEST_CASE("witness is stable once the bound admits it")
{
    Gen g(73);
    for (int i = 0; i < 100; ++i)
    {
        const QuadInt delta = g.nonzero_quad(40, kMinus14);
        const auto small = find_representation(delta, 6);
        const auto large = find_representation(delta, 15);
        if (small.witness)
        {
            REQUIRE(large.witness);
            CHECK(small.witness->x == large.witness->x);
            CHECK(small.witness->y == large.witness->y);
        }
    }
}

TEST_CASE("large coordinates take the arbitrary precision path")
{
    const QuadInt x(Integer("1234567890123456"), Integer("987654321"), kMinus14);
    const QuadInt y(Integer(0), Integer(0), kMinus14);
    const QuadInt delta = x * x + y * y;
    // Coordinates beyond the bound: no witness, but the search must still run.
    CHECK_FALSE(find_representation(delta, 2).witness);
    const QuadInt small = QuadInt(Integer(3), Integer(1), kMinus14);
    const QuadInt scaled = small * small * QuadInt::rational(Integer("1099511627776"), kMinus14);  // 2^40
    const auto r = find_representation(scaled, 2);
    CHECK_FALSE(r.witness);
    CHECK(r.states_examined > 0);
}

TEST_CASE("hunter: degenerate and tiny boxes")
{
    HuntOptions empty;
    empty.box = 0;
    empty.bound = 5;
    CHECK(hunt_counterexamples(empty).entries.empty());

    HuntOptions tiny;
    tiny.box = 1;
    tiny.bound = 10;
    const auto result = hunt_counterexamples(tiny);
    CHECK(result.entries.size() == 8);
    CHECK(result.strip_count() == 2);
    CHECK(result.discrepancy_count() == 0);
    bool minus_one = false;
    for (const auto &h : result.hits())
        minus_one = minus_one || h.delta == q(-1, 0);
    CHECK(minus_one);

    HuntOptions bad;
    bad.bound = 0;
    CHECK_THROWS_AS(hunt_counterexamples(bad), ParameterError);
}

TEST_CASE("hunter hits satisfy their invariants and are closed under conjugation")
{
    HuntOptions opts;
    opts.box = 12;
    opts.bound = 40;
    opts.workers = 3;
    const auto result = hunt_counterexamples(opts);
    CHECK(result.discrepancy_count() == 0);
    std::set<std::pair<std::string, std::string>> hits;
    for (const auto &h : result.hits())
    {
        CHECK(h.local_report.all_solvable);
        CHECK(h.criterion_decision.status == Status::global_obstruction);
        CHECK_FALSE(find_representation(h.delta, opts.bound).witness);
        hits.insert({h.delta.a().get_str(), h.delta.b().get_str()});
    }
    CHECK_FALSE(hits.empty());
    for (const auto &[a, b] : hits)
        CHECK(hits.count({a, Integer(-Integer(b)).get_str()}) == 1);
}

TEST_CASE("hunter output does not depend on the worker count")
{
    HuntOptions opts;
    opts.box = 6;
    opts.bound = 20;
    opts.workers = 1;
    const auto one = hunt_counterexamples(opts);
    opts.workers = 5;
    const auto five = hunt_counterexamples(opts);
    REQUIRE(one.entries.size() == five.entries.size());
    for (std::size_t i = 0; i < one.entries.size(); ++i)
    {
        CHECK(one.entries[i].delta == five.entries[i].delta);
        CHECK(one.entries[i].is_hit() == five.entries[i].is_hit());
    }
}

TEST_CASE("hits for box 25 and bound 100 match the frozen list")
{
    std::ifstream in(SUMSQ_FIXTURES "/hunt_hits_25_100.txt");
    REQUIRE(in);
    std::vector<std::string> expected;
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#')
            expected.push_back(line);

    HuntOptions opts;
    opts.box = 25;
    opts.bound = 100;
    opts.workers = 4;
    const auto result = hunt_counterexamples(opts);
    std::vector<std::string> actual;
    for (const auto &h : result.hits())
        actual.push_back(h.delta.to_pair_string());
    CHECK(actual == expected);
    CHECK(result.discrepancy_count() == 0);
}

TEST_CASE("verify_classical")
{
    CHECK(verify_classical(1));
    CHECK(verify_classical(50));
    CHECK(verify_classical(2000));
    CHECK_THROWS_AS(verify_classical(0), ParameterError);
}
