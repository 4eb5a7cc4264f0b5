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

#include "sumsq/search_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace sumsq
{
    namespace
    {
        using i128 = __int128;

        constexpr std::int64_t kFastCoordinate = std::int64_t(1) << 40;
        constexpr std::int64_t kFastD = std::int64_t(1) << 20;
        constexpr std::uint64_t kFastBound = std::uint64_t(1) << 20;

        // floor(sqrt(n)) for n >= 0
        i128 isqrt_i128(i128 n)
        {
            i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
            while (r * r > n)
                --r;
            while ((r + 1) * (r + 1) <= n)
                ++r;
            return r;
        }

        Integer isqrt_any(const Integer &n) { return isqrt(n); }
        i128 isqrt_any(i128 n) { return isqrt_i128(n); }

        template <class Int>
        Int exact_div(const Int &n, const Int &q, bool &ok)
        {
            ok = n % q == 0;
            return ok ? Int(n / q) : Int(0);
        }

        template <class Int>
        Int magnitude(const Int &z)
        {
            return z < 0 ? Int(-z) : z;
        }

        // 0, 1, -1, 2, -2, ...
        template <class Int>
        Int rank(const Int &z)
        {
            return z > 0 ? Int(2 * z - 1) : Int(-2 * z);
        }

        template <class Int>
        struct Kernel
        {
            Int a, c, d, bound;
            std::optional<std::tuple<Int, Int, Int, Int, Int>> best_key;
            std::optional<std::tuple<Int, Int, Int, Int>> best;
            std::uint64_t states = 0;

            void offer(const Int &u, const Int &v, const Int &s, const Int &t)
            {
                if (u > bound || -u > bound || s > bound || -s > bound)
                    return;
                const Int height = std::max({magnitude(u), magnitude(v), magnitude(s), magnitude(t)});
                std::tuple<Int, Int, Int, Int, Int> key{height, rank(s), rank(t), rank(u), rank(v)};
                if (!best_key || key < *best_key)
                {
                    best_key = std::move(key);
                    best = std::tuple<Int, Int, Int, Int>{u, v, s, t};
                }
            }

            void run()
            {
                for (Int v = -bound; v <= bound; ++v)
                {
                    for (Int t = -bound; t <= bound; ++t)
                    {
                        ++states;
                        const Int q = v * v + t * t;
                        const Int r = a - d * q;
                        if (q == 0)
                        {
                            if (c != 0 || r < 0)
                                continue;
                            for (Int u = -bound; u <= bound; ++u)
                            {
                                ++states;
                                const Int rest = r - u * u;
                                if (rest < 0)
                                    continue;
                                const Int s = isqrt_any(rest);
                                if (s * s != rest)
                                    continue;
                                offer(u, v, -s, t);
                                offer(u, v, s, t);
                            }
                            continue;
                        }
                        if (r < 0)
                            continue;
                        const Int disc = r * q - c * c;
                        if (disc < 0)
                            continue;
                        const Int w = isqrt_any(disc);
                        if (w * w != disc)
                            continue;
                        for (const Int &sw : {w, Int(-w)})
                        {
                            bool ok_u = false, ok_s = false;
                            const Int u = exact_div(Int(c * v + sw * t), q, ok_u);
                            const Int s = exact_div(Int(c * t - sw * v), q, ok_s);
                            if (ok_u && ok_s)
                                offer(u, v, s, t);
                        }
                    }
                }
            }
        };

        Integer to_integer(i128 v)
        {
            const bool negative = v < 0;
            unsigned __int128 m = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
            Integer out(static_cast<unsigned long>(m >> 64));
            out <<= 64;
            out += Integer(static_cast<unsigned long>(m & ~std::uint64_t(0)));
            return negative ? Integer(-out) : out;
        }
        Integer to_integer(const Integer &v) { return v; }

        template <class Int>
        std::optional<Witness> solve(const QuadInt &delta, const Int &a, const Int &c, std::uint64_t bound,
                                     std::uint64_t &states)
        {
            Kernel<Int> k{a, c, Int(static_cast<long>(delta.d())), Int(static_cast<unsigned long>(bound)), std::nullopt, std::nullopt, 0};
            k.run();
            states = k.states;
            if (!k.best)
                return std::nullopt;
            const auto &[u, v, s, t] = *k.best;
            return Witness{QuadInt(to_integer(u), to_integer(v), delta.d()), QuadInt(to_integer(s), to_integer(t), delta.d())};
        }
    } // namespace

    SearchReport find_representation(const QuadInt &delta, std::uint64_t bound)
    {
        SearchReport report{delta, bound, std::nullopt, 0};
        if (delta.is_zero())
        {
            const QuadInt zero(Integer(0), Integer(0), delta.d());
            report.witness = Witness{zero, zero};
            return report;
        }
        if (delta.b() % 2 != 0)
            return report;

        const Integer c = delta.b() / 2;
        const bool fast = abs(delta.a()) < kFastCoordinate && abs(c) < kFastCoordinate && delta.d() < kFastD &&
                          delta.d() > -kFastD && bound <= kFastBound;
        if (fast)
            report.witness = solve<i128>(delta, i128(delta.a().get_si()), i128(c.get_si()), bound, report.states_examined);
        else
            report.witness = solve<Integer>(delta, delta.a(), c, bound, report.states_examined);
        return report;
    }
} // namespace sumsq
