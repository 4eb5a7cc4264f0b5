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

// Acceptance checks. Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "conic_oracle.hpp"
#include "generators.hpp"
#include "sumsq/hunter.hpp"
#include "sumsq/json_io.hpp"

using namespace sumsq;
using sumsq::testing::Gen;

namespace
{
    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    int failures = 0;

    void report(int id, const char *name, double limit_seconds, const std::function<Outcome()> &check)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try
        {
            o = check();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= limit_seconds;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s)%s%s\n", id, pass ? "PASS" : "FAIL", name, seconds,
                    limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
        if (!in_time)
            std::printf("criterion %d: over the time limit\n", id);
        std::fflush(stdout);
    }

    QuadInt q(long a, long b) { return QuadInt(Integer(a), Integer(b), kMinus14); }

    HuntResult sweep(unsigned workers)
    {
        HuntOptions opts;
        opts.box = 25;
        opts.bound = 100;
        opts.workers = workers;
        return hunt_counterexamples(opts);
    }
} // namespace

int main()
{
    report(1, "two-square theorem over Z agrees with search for n <= 10^4", 5, [] {
        return Outcome{verify_classical(10000), ""};
    });

    report(2, "Euler criterion for odd p < 200, Jacobi multiplicativity", 2, [] {
        long checked = 0;
        for (const Integer &p : sumsq::testing::odd_primes_below(200))
        {
            for (Integer a = 0; a < p; ++a, ++checked)
            {
                const Integer e = pow_mod(a, (p - 1) / 2, p);
                if (legendre(a, p) != (e == 0 ? 0 : (e == 1 ? 1 : -1)))
                    return Outcome{false, "legendre(" + a.get_str() + ", " + p.get_str() + ")"};
            }
        }
        Gen g(2);
        for (int i = 0; i < 1000; ++i)
        {
            const Integer a = g.integer(-100000, 100000), b = g.integer(-100000, 100000);
            const Integer n = 2 * g.integer(0, 50000) + 1;
            if (jacobi(a * b, n) != jacobi(a, n) * jacobi(b, n))
                return Outcome{false, "jacobi at n = " + n.get_str()};
        }
        return Outcome{true, std::to_string(checked) + " residues, 1000 triples"};
    });

    report(3, "Hilbert product formula and conic search equivalence", 30, [] {
        Gen g(3);
        for (int i = 0; i < 500; ++i)
        {
            const Integer a = g.nonzero(500), b = g.nonzero(500);
            int product = 1;
            for (const auto &v : hilbert_support(a, b))
                product *= hilbert_symbol(a, b, v);
            if (product != 1)
                return Outcome{false, "product formula at (" + a.get_str() + ", " + b.get_str() + ")"};
        }
        std::vector<long> primes{2};
        for (const Integer &p : sumsq::testing::odd_primes_below(50))
            primes.push_back(p.get_si());
        for (int i = 0; i < 100; ++i)
        {
            const long a = g.nonzero(500), b = g.nonzero(500);
            for (long p : primes)
            {
                sumsq::testing::ConicOracle oracle(a, b, p);
                if (hilbert_symbol(a, b, RationalPlace::at(p)) != (oracle.solvable() ? 1 : -1))
                    return Outcome{false, "(" + std::to_string(a) + ", " + std::to_string(b) + ")_" + std::to_string(p)};
            }
        }
        return Outcome{true, "500 pairs, 100 pairs x 15 primes"};
    });

    report(4, "local verdicts stable from K to K+4 and monotone in k", 120, [] {
        long cases = 0;
        for (long a = -10; a < 10; ++a)
        {
            for (long b = -10; b < 10; ++b)
            {
                if (a == 0 && b == 0)
                    continue;
                const QuadInt delta = q(a, b);
                for (long p : {2, 3, 5, 7, 13})
                {
                    ++cases;
                    const bool verdict = locally_solvable(delta, p).solvable;
                    const unsigned k = cutoff(p, delta);
                    bool had_solutions = true, had_smooth = false;
                    for (unsigned j = 1; j <= k + 4; ++j)
                    {
                        const auto probe = probe_depth(delta, p, j);
                        const bool smooth = probe.smooth.has_value();
                        if ((!had_solutions && probe.solutions_exist) || (had_smooth && !smooth))
                            return Outcome{false, "not monotone at " + delta.to_string() + ", p = " + std::to_string(p)};
                        had_solutions = probe.solutions_exist;
                        had_smooth = smooth;
                        if (j >= k && smooth != verdict)
                            return Outcome{false, "unstable at " + delta.to_string() + ", p = " + std::to_string(p) +
                                                      ", k = " + std::to_string(j)};
                    }
                }
            }
        }
        return Outcome{true, std::to_string(cases) + " (delta, p) pairs"};
    });

    HuntResult first{};

    report(5, "criterion agrees with search over |a|, |b| <= 25 at B = 100", 600, [&] {
        first = sweep(4);
        std::size_t positive_with_witness = 0, negative = 0;
        for (const auto &e : first.entries)
        {
            if (!e.decision)
                continue;
            const bool witness = e.search.witness.has_value();
            const Status s = e.decision->status;
            if (witness && s != Status::representable)
                return Outcome{false, "witness for rejected " + e.delta.to_string()};
            if ((s == Status::local_obstruction || s == Status::global_obstruction) && witness)
                return Outcome{false, "rejected " + e.delta.to_string() + " has a witness"};
            positive_with_witness += witness;
            negative += s != Status::representable;
        }
        return Outcome{first.discrepancy_count() == 0,
                       std::to_string(first.entries.size() - first.strip_count()) + " deltas, " +
                           std::to_string(positive_with_witness) + " witnessed, " + std::to_string(negative) +
                           " rejected, " + std::to_string(first.unverified_count()) + " unverified"};
    });

    report(6, "locally solvable everywhere yet globally obstructed", 600, [&] {
        if (first.entries.empty())
            return Outcome{false, "no sweep"};
        const auto hits = first.hits();
        std::vector<std::string> actual, expected;
        for (const auto &h : hits)
            actual.push_back(h.delta.to_pair_string());
        std::ifstream in(SUMSQ_FIXTURES "/hunt_hits_25_100.txt");
        for (std::string line; std::getline(in, line);)
            if (!line.empty() && line[0] != '#')
                expected.push_back(line);
        if (actual != expected)
            return Outcome{false, "hits differ from the frozen fixture"};
        return Outcome{!hits.empty(), std::to_string(hits.size()) + " hits, e.g. " +
                                          (hits.empty() ? std::string("none") : hits.front().delta.to_string())};
    });

    report(7, "D2 exponents even, decisions invariant under conjugation", 600, [&] {
        if (first.entries.empty())
            return Outcome{false, "no sweep"};
        std::size_t d2_checked = 0;
        for (const auto &e : first.entries)
        {
            if (!e.decision)
                continue;
            const auto &nf = e.decision->evidence->factorization;
            for (const Integer &p : nf.d_sets.d2)
            {
                ++d2_checked;
                if (nf.exponent_of(p) % 2 != 0)
                    return Outcome{false, "odd D2 exponent at " + e.delta.to_string()};
            }
        }
        std::size_t pairs = 0;
        for (const auto &e : first.entries)
        {
            if (!e.decision || e.delta.b() <= 0)
                continue;
            for (const auto &f : first.entries)
            {
                if (f.delta == conj(e.delta))
                {
                    ++pairs;
                    if (f.decision->status != e.decision->status)
                        return Outcome{false, "conjugation changes " + e.delta.to_string()};
                    break;
                }
            }
        }
        return Outcome{true, std::to_string(d2_checked) + " D2 primes, " + std::to_string(pairs) + " conjugate pairs"};
    });

    report(8, "byte-identical JSON across runs and worker counts", 600, [&] {
        const HuntResult again = sweep(1);
        const std::string a = json::hunt_lines(first), b = json::hunt_lines(again);
        std::string da, db;
        DecideOptions opts;
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y)
                if (x != 0)
                {
                    da += json::from_decision(decide_qsqrt_m14(q(x, y), opts)).dump() + "\n";
                    db += json::from_decision(decide_qsqrt_m14(q(x, y), opts)).dump() + "\n";
                }
        return Outcome{a == b && da == db, std::to_string(a.size()) + " bytes of hunt output, workers 4 vs 1"};
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "all passed" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
