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

#include "sumsq/json_io.hpp"

#include "sumsq/error.hpp"

namespace sumsq::json
{
    Json from_integer(const Integer &n)
    {
        if (n.fits_slong_p())
            return static_cast<std::int64_t>(n.get_si());
        return n.get_str();
    }

    Integer to_integer(const Json &j)
    {
        if (j.is_number_integer())
            return Integer(static_cast<long>(j.get<std::int64_t>()));
        if (j.is_string())
            return parse_integer(j.get<std::string>());
        throw ParameterError("expected an integer, got " + j.dump());
    }

    Json from_quad(const QuadInt &z, bool with_d)
    {
        Json j = {{"a", from_integer(z.a())}, {"b", from_integer(z.b())}};
        if (with_d)
            j["d"] = z.d();
        return j;
    }

    QuadInt to_quad(const Json &j, std::int64_t d)
    {
        if (j.contains("d"))
            d = j.at("d").get<std::int64_t>();
        return QuadInt(to_integer(j.at("a")), to_integer(j.at("b")), d);
    }

    Json from_place(const Place &place)
    {
        if (const auto *f = std::get_if<FinitePlace>(&place))
            return {{"kind", "finite"}, {"prime", from_integer(f->prime)}, {"splitting", to_string(f->splitting)}};
        return {{"kind", "archimedean"}, {"real", std::get<ArchimedeanPlace>(place).real}};
    }

    Json from_solution(const ModularSolution &sol)
    {
        Json j = {{"x", from_quad(sol.x, false)},
                  {"y", from_quad(sol.y, false)},
                  {"level", sol.level},
                  {"smooth", sol.smooth}};
        j["lift_exponent"] = sol.lift_exponent ? Json(*sol.lift_exponent) : Json(nullptr);
        return j;
    }

    Json from_verdict(const LocalVerdict &verdict)
    {
        Json j = {{"place", from_place(verdict.place)}, {"solvable", verdict.solvable}, {"cutoff", verdict.cutoff}};
        if (verdict.certificate)
            j["certificate"] = from_solution(*verdict.certificate);
        if (verdict.exhausted_at)
            j["exhausted_at"] = *verdict.exhausted_at;
        return j;
    }

    Json from_report(const LocalReport &report)
    {
        Json out = Json::array();
        for (const auto &v : report.verdicts)
            out.push_back(from_verdict(v));
        return out;
    }

    Json from_witness(const Witness &w) { return {{"x", from_quad(w.x, false)}, {"y", from_quad(w.y, false)}}; }

    namespace
    {
        Json primes(const std::vector<Integer> &ps)
        {
            Json out = Json::array();
            for (const auto &p : ps)
                out.push_back(from_integer(p));
            return out;
        }
    } // namespace

    Json from_decision(const Decision &decision)
    {
        Json j = {{"delta", from_quad(decision.delta)},
                  {"status", to_string(decision.status)},
                  {"local_report", from_report(decision.local_report)},
                  {"witness_verified", decision.witness_verified}};
        Json failing = Json::array();
        for (const auto &p : decision.failing_places())
            failing.push_back(from_place(p));
        j["failing_places"] = std::move(failing);
        if (decision.witness)
            j["witness"] = from_witness(*decision.witness);

        if (const auto &ev = decision.evidence)
        {
            const auto &nf = ev->factorization;
            j["branch"] = to_string(ev->branch);
            j["parity_exponent"] = ev->parity_exponent;
            j["a1_symbol"] = ev->a1_symbol;
            j["variant"] = to_string(ev->variant);
            j["condition1"] = ev->condition1;
            j["condition2"] = ev->condition2;
            j["d_sets"] = {{"d1", primes(nf.d_sets.d1)}, {"d2", primes(nf.d_sets.d2)}, {"d3", primes(nf.d_sets.d3)}};
            Json others = Json::array();
            for (const auto &pp : nf.primes)
                others.push_back({{"p", from_integer(pp.prime)}, {"e", pp.exponent}});
            j["norm"] = {{"value", from_integer(nf.reconstruct())},
                         {"s1", nf.s1},
                         {"s2", nf.s2},
                         {"s3", nf.s3},
                         {"a1", from_integer(nf.a1)},
                         {"primes", std::move(others)}};
        }
        else
        {
            j["branch"] = nullptr;
            j["parity_exponent"] = nullptr;
            j["a1_symbol"] = nullptr;
            j["d_sets"] = nullptr;
        }
        return j;
    }

    Json from_search(const SearchReport &report)
    {
        Json j = {{"delta", from_quad(report.delta)},
                  {"bound", report.bound},
                  {"states_examined", report.states_examined}};
        j["witness"] = report.witness ? from_witness(*report.witness) : Json(nullptr);
        return j;
    }

    Json from_rational(const RationalDecision &decision)
    {
        Json j = {{"n", from_integer(decision.n)}, {"representable", decision.representable}};
        if (decision.witness)
            j["witness"] = {from_integer(decision.witness->first), from_integer(decision.witness->second)};
        else
            j["witness"] = nullptr;
        return j;
    }

    Json from_entry(const HuntEntry &entry)
    {
        Json j = {{"kind", entry.on_strip ? "strip" : "delta"},
                  {"delta", from_quad(entry.delta)},
                  {"locally_solvable", entry.local_report.all_solvable},
                  {"hit", entry.is_hit()},
                  {"discrepancy", entry.is_discrepancy()},
                  {"unverified", entry.is_unverified()}};
        Json failing = Json::array();
        for (const auto &p : entry.local_report.failing_places())
            failing.push_back(from_place(p));
        j["failing_places"] = std::move(failing);
        j["status"] = entry.decision ? Json(to_string(entry.decision->status)) : Json(nullptr);
        j["witness"] = entry.search.witness ? from_witness(*entry.search.witness) : Json(nullptr);
        return j;
    }

    Json hunt_summary(const HuntResult &result)
    {
        const auto hits = result.hits();
        Json hit_deltas = Json::array();
        for (const auto &h : hits)
            hit_deltas.push_back(from_quad(h.delta, false));
        return {{"kind", "summary"},
                {"box", result.options.box},
                {"bound", result.options.bound},
                {"variant", to_string(result.options.variant)},
                {"examined", result.entries.size()},
                {"strip_examined", result.strip_count()},
                {"hits", hits.size()},
                {"hit_deltas", std::move(hit_deltas)},
                {"discrepancies", result.discrepancy_count()},
                {"unverified", result.unverified_count()}};
    }

    std::string hunt_lines(const HuntResult &result)
    {
        std::string out;
        for (const auto &e : result.entries)
        {
            out += from_entry(e).dump();
            out += '\n';
        }
        out += hunt_summary(result).dump();
        out += '\n';
        return out;
    }
} // namespace sumsq::json
