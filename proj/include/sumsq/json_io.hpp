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

#include <string>

#include <json.hpp>
#include "sumsq/hunter.hpp"

namespace sumsq::json
{
    using Json = nlohmann::json;

    // Integers that fit in a signed 64-bit word are JSON numbers, larger ones are
    // decimal strings. Objects keep sorted keys, so dump() is canonical.
    Json from_integer(const Integer &n);
    Integer to_integer(const Json &j);

    Json from_quad(const QuadInt &z, bool with_d = true);
    QuadInt to_quad(const Json &j, std::int64_t d);

    Json from_place(const Place &place);
    Json from_solution(const ModularSolution &sol);
    Json from_verdict(const LocalVerdict &verdict);
    Json from_report(const LocalReport &report);
    Json from_witness(const Witness &w);
    Json from_decision(const Decision &decision);
    Json from_search(const SearchReport &report);
    Json from_rational(const RationalDecision &decision);

    /// One record per swept delta.
    Json from_entry(const HuntEntry &entry);
    Json hunt_summary(const HuntResult &result);
    /// Entry records followed by the summary, one JSON document per line.
    std::string hunt_lines(const HuntResult &result);
} // namespace sumsq::json
