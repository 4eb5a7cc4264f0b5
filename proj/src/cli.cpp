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

#include "sumsq/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "sumsq/error.hpp"
#include "sumsq/hunter.hpp"
#include "sumsq/json_io.hpp"

namespace sumsq::cli
{
    namespace
    {
        unsigned default_workers()
        {
            if (const char *env = std::getenv("SUMSQ_WORKERS"))
            {
                const long n = std::strtol(env, nullptr, 10);
                if (n >= 1)
                    return static_cast<unsigned>(n);
            }
            return std::max(1u, std::thread::hardware_concurrency());
        }

        std::string join_places(const std::vector<Place> &places)
        {
            std::string s;
            for (const auto &p : places)
                s += (s.empty() ? "" : ", ") + to_string(p);
            return s;
        }

        std::string join_primes(const std::vector<Integer> &ps)
        {
            std::string s = "{";
            for (std::size_t i = 0; i < ps.size(); ++i)
                s += (i ? ", " : "") + ps[i].get_str();
            return s + "}";
        }

        void print_verdict(std::ostream &out, const LocalVerdict &v)
        {
            out << "  " << to_string(v.place) << ": " << (v.solvable ? "solvable" : "not solvable");
            if (v.certificate)
                out << "  x = " << v.certificate->x.to_string() << ", y = " << v.certificate->y.to_string() << " mod p^"
                    << v.certificate->level;
            if (v.exhausted_at)
                out << "  (no solution mod p^" << *v.exhausted_at << ")";
            out << '\n';
        }

        void print_decision(std::ostream &out, const Decision &d)
        {
            out << "delta: " << d.delta.to_string() << '\n';
            out << "status: " << to_string(d.status) << '\n';
            if (d.status == Status::local_obstruction)
                out << "failing places: " << join_places(d.failing_places()) << '\n';
            if (d.witness)
                out << "witness: x = " << d.witness->x.to_string() << ", y = " << d.witness->y.to_string()
                    << (d.witness_verified ? " (verified)" : "") << '\n';
            else if (d.status == Status::representable)
                out << "witness: none within the search bound (unverified)\n";
            if (const auto &ev = d.evidence)
            {
                const auto &nf = ev->factorization;
                out << "norm: " << nf.reconstruct().get_str() << "  s1 = " << nf.s1 << ", s2 = " << nf.s2
                    << ", s3 = " << nf.s3 << ", a1 = " << nf.a1.get_str() << '\n';
                out << "D1 = " << join_primes(nf.d_sets.d1) << ", D2 = " << join_primes(nf.d_sets.d2)
                    << ", D3 = " << join_primes(nf.d_sets.d3) << '\n';
                out << "branch: " << to_string(ev->branch) << ", parity exponent " << ev->parity_exponent << " ("
                    << to_string(ev->variant) << "), (a1/7) = " << ev->a1_symbol << '\n';
            }
            out << "local:\n";
            for (const auto &v : d.local_report.verdicts)
                print_verdict(out, v);
        }

        struct Common
        {
            std::string delta;
            std::int64_t d = kMinus14;
            bool json = false;
            unsigned depth = DescentLimits{}.max_depth;
        };

        void add_common(CLI::App *cmd, Common &c)
        {
            cmd->add_option("--delta", c.delta, "element as a,b meaning a+b*sqrt(d)")->required();
            cmd->add_option("--d", c.d, "ring parameter")->capture_default_str();
            cmd->add_flag("--json", c.json, "JSON output");
            cmd->add_option("--depth", c.depth, "depth limit for modular descent")->capture_default_str();
        }

        QuadInt parse_delta(const Common &c)
        {
            require_valid_ring_parameter(c.d);
            return parse_quad(c.delta, c.d);
        }

        Integer prime_arg(const std::string &text)
        {
            Integer p = parse_integer(text);
            if (!is_prime(p))
                throw ParameterError(text + " is not prime");
            return p;
        }
    } // namespace

    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Sums of two squares in Z[sqrt(d)], with an exact decision for d = -14"};
        app.require_subcommand(1);
        int code = ok;

        // decide
        Common decide_c;
        std::uint64_t decide_bound = DecideOptions{}.witness_bound;
        bool as_printed = false;
        auto *decide = app.add_subcommand("decide", "decide whether delta is a sum of two squares");
        add_common(decide, decide_c);
        decide->add_option("--bound", decide_bound, "witness search bound")->capture_default_str();
        decide->add_flag("--as-printed", as_printed, "use the parity exponent without the s3 term");
        decide->callback([&] {
            const QuadInt delta = parse_delta(decide_c);
            DescentLimits limits;
            limits.max_depth = decide_c.depth;
            DecideOptions opts;
            opts.witness_bound = decide_bound;
            opts.variant = as_printed ? CriterionVariant::as_printed : CriterionVariant::corrected;
            opts.descent = limits;
            const Decision decision = delta.d() == kMinus14
                                          ? decide_qsqrt_m14(delta, opts)
                                          : decide_generic(delta, std::max<std::uint64_t>(decide_bound, 1), limits);
            if (decide_c.json)
                out << json::from_decision(decision).dump() << '\n';
            else
                print_decision(out, decision);
            code = decision.status == Status::representable ? ok : negative;
        });

        // local
        Common local_c;
        std::string local_prime;
        auto *local = app.add_subcommand("local", "local solvability at one prime or at every place");
        add_common(local, local_c);
        local->add_option("--prime", local_prime, "a single rational prime");
        local->callback([&] {
            const QuadInt delta = parse_delta(local_c);
            DescentLimits limits;
            limits.max_depth = local_c.depth;
            LocalReport report;
            if (!local_prime.empty())
            {
                report.verdicts.push_back(locally_solvable(delta, prime_arg(local_prime), limits));
                report.all_solvable = report.verdicts.front().solvable;
            }
            else
            {
                report = locally_solvable_everywhere(delta, limits);
            }
            if (local_c.json)
            {
                out << json::Json{{"delta", json::from_quad(delta)},
                                  {"all_solvable", report.all_solvable},
                                  {"local_report", json::from_report(report)}}
                           .dump()
                    << '\n';
            }
            else
            {
                out << "delta: " << delta.to_string() << '\n';
                for (const auto &v : report.verdicts)
                    print_verdict(out, v);
            }
        });

        // search
        Common search_c;
        std::uint64_t search_bound = 0;
        auto *search = app.add_subcommand("search", "bounded search for x^2 + y^2 = delta");
        add_common(search, search_c);
        search->add_option("--bound", search_bound, "coordinate bound")->required()->check(CLI::PositiveNumber);
        search->callback([&] {
            const auto report = find_representation(parse_delta(search_c), search_bound);
            if (search_c.json)
            {
                out << json::from_search(report).dump() << '\n';
            }
            else if (report.witness)
            {
                out << "x = " << report.witness->x.to_string() << ", y = " << report.witness->y.to_string() << '\n';
            }
            else
            {
                out << "no witness with coordinates up to " << search_bound << '\n';
            }
        });

        // symbols
        auto *symbols = app.add_subcommand("symbols", "Legendre, Jacobi, quartic and Hilbert symbols");
        symbols->require_subcommand(1);
        std::string sym_a, sym_b, sym_place;
        auto *leg = symbols->add_subcommand("legendre", "(a/p) for an odd prime p");
        leg->add_option("a", sym_a)->required();
        leg->add_option("p", sym_b)->required();
        leg->callback([&] { out << legendre(parse_integer(sym_a), prime_arg(sym_b)) << '\n'; });
        auto *jac = symbols->add_subcommand("jacobi", "(a/n) for odd n > 0");
        jac->add_option("a", sym_a)->required();
        jac->add_option("n", sym_b)->required();
        jac->callback([&] { out << jacobi(parse_integer(sym_a), parse_integer(sym_b)) << '\n'; });
        auto *quart = symbols->add_subcommand("quartic", "whether x^4 = a (mod p) is solvable");
        quart->add_option("a", sym_a)->required();
        quart->add_option("p", sym_b)->required();
        quart->callback([&] { out << (is_quartic_residue(parse_integer(sym_a), prime_arg(sym_b)) ? 1 : -1) << '\n'; });
        auto *hil = symbols->add_subcommand("hilbert", "(a, b)_v over Q; v is a prime or inf");
        hil->add_option("a", sym_a)->required();
        hil->add_option("b", sym_b)->required();
        hil->add_option("place", sym_place)->required();
        hil->callback([&] {
            const RationalPlace place =
                sym_place == "inf" ? RationalPlace::infinity() : RationalPlace::at(prime_arg(sym_place));
            out << hilbert_symbol(parse_rational(sym_a), parse_rational(sym_b), place) << '\n';
        });

        // hunt
        HuntOptions hunt_opts;
        hunt_opts.workers = default_workers();
        std::string hunt_out;
        bool hunt_as_printed = false;
        auto *hunt = app.add_subcommand("hunt", "sweep a box of deltas for local-global failures");
        hunt->add_option("--box", hunt_opts.box, "coordinate box |a|, |b| <= A")->required();
        hunt->add_option("--bound", hunt_opts.bound, "witness search bound")->required()->check(CLI::PositiveNumber);
        hunt->add_option("--workers", hunt_opts.workers, "worker threads (default: SUMSQ_WORKERS or all cores)")
            ->check(CLI::PositiveNumber);
        hunt->add_option("--out", hunt_out, "write JSON lines here instead of stdout");
        hunt->add_flag("--as-printed", hunt_as_printed, "use the parity exponent without the s3 term");
        hunt->callback([&] {
            hunt_opts.variant = hunt_as_printed ? CriterionVariant::as_printed : CriterionVariant::corrected;
            const auto result = hunt_counterexamples(hunt_opts);
            const std::string lines = json::hunt_lines(result);
            if (hunt_out.empty())
            {
                out << lines;
            }
            else
            {
                std::ofstream file(hunt_out, std::ios::binary);
                if (!file)
                    throw ParameterError("cannot open " + hunt_out);
                file << lines;
                out << json::hunt_summary(result).dump() << '\n';
            }
            if (result.discrepancy_count() > 0)
            {
                err << "error: " << result.discrepancy_count() << " discrepancies between criterion and search\n";
                code = negative;
            }
        });

        // classical
        std::uint64_t classical_max = 0;
        auto *classical = app.add_subcommand("classical", "check the two-square theorem over Z up to N");
        classical->add_option("--max", classical_max, "largest n")->required()->check(CLI::PositiveNumber);
        classical->callback([&] {
            const bool agree = verify_classical(classical_max);
            out << (agree ? "true" : "false") << '\n';
            code = agree ? ok : negative;
        });

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            const int rc = app.exit(e, out, err);
            return rc == 0 ? ok : usage;
        }
        catch (const FactorizationError &e)
        {
            err << "error: " << e.what() << '\n';
            return resource;
        }
        catch (const ResourceError &e)
        {
            err << "error: " << e.what() << '\n';
            return resource;
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return usage;
        }
        catch (const std::domain_error &e)
        {
            err << "error: " << e.what() << '\n';
            return usage;
        }
        return code;
    }
} // namespace sumsq::cli
