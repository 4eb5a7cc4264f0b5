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

namespace sumsq::testing
{
    // Decides whether a x^2 + b y^2 = z^2 has a nontrivial solution over Q_p by
    // searching primitive solutions digit by digit, independently of the closed
    // formulas. Entries are reduced so that v_p(a), v_p(b) <= 1. A primitive
    // solution then has a coordinate whose partial derivative has valuation at
    // most v_p(2) + 1, so a solution modulo p^(2 v_p(2) + 3) lifts by Hensel.
    class ConicOracle
    {
    public:
        ConicOracle(std::int64_t a, std::int64_t b, std::int64_t p) : p_(p)
        {
            a_ = reduce(a);
            b_ = reduce(b);
            depth_ = p == 2 ? 5 : 3;
        }

        bool solvable()
        {
            // Fix one unit coordinate to 1: x = 1; or p | x and y = 1; or p | x, y and z = 1.
            return search(Role::x_unit) || search(Role::y_unit) || search(Role::z_unit);
        }

    private:
        enum class Role
        {
            x_unit,
            y_unit,
            z_unit
        };

        std::int64_t reduce(std::int64_t n) const
        {
            while (n % (p_ * p_) == 0)
                n /= p_ * p_;
            return n;
        }

        static std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

        std::int64_t form(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t m) const
        {
            return mod(mod(a_, m) * mod(x * x, m) + mod(b_, m) * mod(y * y, m) - mod(z * z, m), m);
        }

        // u, v are the two free coordinates, extended digit by digit depth first.
        bool search(Role role) { return extend(role, 0, 0, 1, 1); }

        bool extend(Role role, std::int64_t u, std::int64_t v, unsigned level, std::int64_t pj)
        {
            if (level > depth_)
                return true;
            const std::int64_t next = pj * p_;
            for (std::int64_t du = 0; du < p_; ++du)
            {
                for (std::int64_t dv = 0; dv < p_; ++dv)
                {
                    const std::int64_t u2 = u + du * pj, v2 = v + dv * pj;
                    if (level == 1 && !admissible(role, u2, v2))
                        continue;
                    if (value(role, u2, v2, next) == 0 && extend(role, u2, v2, level + 1, next))
                        return true;
                }
            }
            return false;
        }

        bool admissible(Role role, std::int64_t u, std::int64_t v) const
        {
            switch (role)
            {
            case Role::x_unit:
                return true;
            case Role::y_unit:
                return u % p_ == 0;
            case Role::z_unit:
                return u % p_ == 0 && v % p_ == 0;
            }
            return false;
        }

        std::int64_t value(Role role, std::int64_t u, std::int64_t v, std::int64_t m) const
        {
            switch (role)
            {
            case Role::x_unit:
                return form(1, u, v, m);
            case Role::y_unit:
                return form(u, 1, v, m);
            case Role::z_unit:
                return form(u, v, 1, m);
            }
            return 1;
        }

        std::int64_t p_;
        std::int64_t a_ = 0;
        std::int64_t b_ = 0;
        unsigned depth_ = 0;
    };
} // namespace sumsq::testing
