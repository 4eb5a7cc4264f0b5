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
#include <random>

#include "sumsq/quadratic_ring.hpp"

namespace sumsq::testing
{
    // Seeded generators for property tests. Every test owns its own instance so
    // failures reproduce in isolation.
    class Gen
    {
    public:
        explicit Gen(std::uint64_t seed) : rng_(seed) {}

        std::int64_t in(std::int64_t lo, std::int64_t hi)
        {
            return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
        }

        std::int64_t nonzero(std::int64_t bound)
        {
            for (;;)
                if (const auto v = in(-bound, bound); v != 0)
                    return v;
        }

        Integer integer(std::int64_t lo, std::int64_t hi) { return Integer(static_cast<long>(in(lo, hi))); }

        // Up to `digits` decimal digits, either sign.
        Integer big(unsigned digits)
        {
            Integer n = 0;
            const auto len = in(1, digits);
            for (std::int64_t i = 0; i < len; ++i)
                n = n * 10 + static_cast<long>(in(0, 9));
            return in(0, 1) ? n : Integer(-n);
        }

        QuadInt quad(std::int64_t bound, std::int64_t d)
        {
            return QuadInt(integer(-bound, bound), integer(-bound, bound), d);
        }

        QuadInt nonzero_quad(std::int64_t bound, std::int64_t d)
        {
            for (;;)
                if (auto z = quad(bound, d); !z.is_zero())
                    return z;
        }

    private:
        std::mt19937_64 rng_;
    };

    inline std::vector<Integer> odd_primes_below(long n)
    {
        std::vector<Integer> out;
        for (long p = 3; p < n; p += 2)
        {
            bool prime = true;
            for (long q = 3; q * q <= p; q += 2)
                prime = prime && p % q != 0;
            if (prime)
                out.emplace_back(p);
        }
        return out;
    }
} // namespace sumsq::testing
