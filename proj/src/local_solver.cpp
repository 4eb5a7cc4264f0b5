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

#include "sumsq/local_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumsq/error.hpp"

namespace sumsq
{
    namespace
    {
        using i64 = std::int64_t;
        using i128 = __int128;

        constexpr i64 kMaxDescentModulus = i64(1) << 40;
        constexpr i64 kMaxDescentD = i64(1) << 20;
        constexpr i64 kMaxLevelOneTable = 10'000'000;

        Integer power(const Integer &p, unsigned k)
        {
            Integer out;
            mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), k);
            return out;
        }

        template <class Int>
        unsigned small_valuation(Int n, const Int &p)
        {
            unsigned v = 0;
            while (n % p == 0)
            {
                n /= p;
                ++v;
            }
            return v;
        }

        // The ideal (g1, g2) of Z_p[sqrt(d)] is the Z_p-lattice spanned by g1, g1*sqrt(d),
        // g2, g2*sqrt(d) in (a, b) coordinates. Eliminating the b-coordinate with the
        // generator of least b-valuation leaves generators of the lattice's intersection
        // with Z_p x 0, whose least valuation is the answer.
        template <class Int>
        std::optional<unsigned> lift_exponent_impl(const Int &xa, const Int &xb, const Int &ya, const Int &yb,
                                                   const Int &d, const Int &p)
        {
            const Int gens[4][2] = {
                {2 * xa, 2 * xb},
                {d * 2 * xb, 2 * xa},
                {2 * ya, 2 * yb},
                {d * 2 * yb, 2 * ya},
            };
            int pivot = -1;
            unsigned beta = 0;
            for (int i = 0; i < 4; ++i)
            {
                if (gens[i][1] == 0)
                    continue;
                const unsigned v = small_valuation(gens[i][1], p);
                if (pivot < 0 || v < beta)
                {
                    pivot = i;
                    beta = v;
                }
            }
            std::optional<unsigned> best;
            auto consider = [&](const Int &a) {
                if (a == 0)
                    return;
                const unsigned v = small_valuation(a, p);
                if (!best || v < *best)
                    best = v;
            };
            if (pivot < 0)
            {
                for (const auto &g : gens)
                    consider(g[0]);
                return best;
            }
            Int pb = 1;
            for (unsigned i = 0; i < beta; ++i)
                pb *= p;
            const Int unit = gens[pivot][1] / pb;
            for (int i = 0; i < 4; ++i)
            {
                if (i == pivot)
                    continue;
                consider(Int(unit * gens[i][0] - (gens[i][1] / pb) * gens[pivot][0]));
            }
            return best;
        }

        // ---------------------------------------------------------------------
        // Fixed-width residue arithmetic for the descent. Moduli are bounded by
        // kMaxDescentModulus and |d| by kMaxDescentD so every product fits in i128.
        // ---------------------------------------------------------------------

        struct Res
        {
            i64 a = 0;
            i64 b = 0;
        };

        i64 reduce(i128 v, i64 m)
        {
            i128 r = v % m;
            if (r < 0)
                r += m;
            return static_cast<i64>(r);
        }

        i64 reduce(const Integer &v, i64 m) { return static_cast<i64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m))); }

        Res mul(const Res &x, const Res &y, i64 d, i64 m)
        {
            const i128 a = i128(x.a) * y.a + i128(d) * reduce(i128(x.b) * y.b, m);
            const i128 b = i128(x.a) * y.b + i128(x.b) * y.a;
            return {reduce(a, m), reduce(b, m)};
        }

        // x^2 + y^2 - delta (mod m)
        Res defect(const Res &x, const Res &y, const Res &delta, i64 d, i64 m)
        {
            const Res x2 = mul(x, x, d, m);
            const Res y2 = mul(y, y, d, m);
            return {reduce(i128(x2.a) + y2.a - delta.a, m), reduce(i128(x2.b) + y2.b - delta.b, m)};
        }

        class Descent
        {
        public:
            Descent(const QuadInt &delta, i64 p, const DescentLimits &limits)
                : delta_(delta), p_(p), d_(delta.d()), limits_(limits)
            {
                if (d_ >= kMaxDescentD || d_ <= -kMaxDescentD)
                    throw ResourceError("modular descent supports |d| < 2^20");
                if (i128(p) * p > kMaxLevelOneTable)
                    throw ResourceError("modular descent: residue field too large for p = " + std::to_string(p));
            }

            i64 p() const { return p_; }
            unsigned level() const { return level_; }
            const std::vector<std::pair<Res, Res>> &open() const { return open_; }
            const std::vector<ModularSolution> &closed() const { return closed_; }

            void enumerate_level_one(bool primitive_only)
            {
                level_ = 1;
                const i64 q = p_ * p_;
                charge(static_cast<std::uint64_t>(2 * q));
                const Res delta = residue(delta_, p_);

                // Bucket the ring elements of Z[sqrt(d)]/p by their square.
                std::vector<i64> square_of(static_cast<std::size_t>(q));
                for (i64 i = 0; i < q; ++i)
                {
                    const Res y{i / p_, i % p_};
                    const Res s = mul(y, y, d_, p_);
                    square_of[static_cast<std::size_t>(i)] = s.a * p_ + s.b;
                }
                const auto buckets = bucket(square_of, q);

                open_.clear();
                for (i64 i = 0; i < q; ++i)
                {
                    const Res x{i / p_, i % p_};
                    const Res x2 = mul(x, x, d_, p_);
                    const Res c{reduce(i128(delta.a) - x2.a, p_), reduce(i128(delta.b) - x2.b, p_)};
                    const i64 key = c.a * p_ + c.b;
                    for (i64 k = buckets.first[static_cast<std::size_t>(key)];
                         k < buckets.first[static_cast<std::size_t>(key + 1)]; ++k)
                    {
                        const i64 j = buckets.second[static_cast<std::size_t>(k)];
                        if (primitive_only && i == 0 && j == 0)
                            continue;
                        open_.push_back({x, Res{j / p_, j % p_}});
                    }
                }
                charge(open_.size());
                if (open_.empty())
                    died_at_ = 1;
            }

            // Moves branches that are smooth at the current level to closed().
            // With stop_at_first, stops after the first one.
            bool close_smooth(bool stop_at_first)
            {
                std::vector<std::pair<Res, Res>> rest;
                rest.reserve(open_.size());
                bool any = false;
                for (std::size_t i = 0; i < open_.size(); ++i)
                {
                    const auto &[x, y] = open_[i];
                    const auto t = lift_exponent_impl<i128>(x.a, x.b, y.a, y.b, d_, p_);
                    if (t && 2 * *t + 1 <= level_)
                    {
                        closed_.push_back(materialize(x, y, t, true));
                        any = true;
                        if (stop_at_first)
                        {
                            rest.insert(rest.end(), open_.begin() + static_cast<std::ptrdiff_t>(i) + 1, open_.end());
                            break;
                        }
                    }
                    else
                    {
                        rest.push_back(open_[i]);
                    }
                }
                open_ = std::move(rest);
                return any;
            }

            // Lifts every open branch from level j to j + 1.
            void lift()
            {
                if (level_ + 1 > limits_.max_depth)
                    throw ResourceError("modular descent exceeded depth limit " + std::to_string(limits_.max_depth));
                const i64 pj = modulus(level_);
                const i64 next = modulus(level_ + 1);
                const Res delta = residue(delta_, next);
                const i64 q = p_ * p_;

                std::vector<std::pair<Res, Res>> lifted;
                std::vector<i64> products(static_cast<std::size_t>(q));
                for (const auto &[x, y] : open_)
                {
                    charge(static_cast<std::uint64_t>(2 * q));
                    const Res f = defect(x, y, delta, d_, next);
                    const Res w{f.a / pj, f.b / pj};
                    const Res gx{reduce(i128(2) * x.a, p_), reduce(i128(2) * x.b, p_)};
                    const Res gy{reduce(i128(2) * y.a, p_), reduce(i128(2) * y.b, p_)};

                    // w + gx*h1 + gy*h2 = 0 in Z[sqrt(d)]/p
                    for (i64 h = 0; h < q; ++h)
                    {
                        const Res s = mul(gy, Res{h / p_, h % p_}, d_, p_);
                        products[static_cast<std::size_t>(h)] = s.a * p_ + s.b;
                    }
                    const auto buckets = bucket(products, q);
                    for (i64 h1 = 0; h1 < q; ++h1)
                    {
                        const Res h1r{h1 / p_, h1 % p_};
                        const Res t = mul(gx, h1r, d_, p_);
                        const Res need{reduce(-(i128(w.a) + t.a), p_), reduce(-(i128(w.b) + t.b), p_)};
                        const i64 key = need.a * p_ + need.b;
                        for (i64 k = buckets.first[static_cast<std::size_t>(key)];
                             k < buckets.first[static_cast<std::size_t>(key + 1)]; ++k)
                        {
                            const i64 h2 = buckets.second[static_cast<std::size_t>(k)];
                            const Res x2{x.a + pj * h1r.a, x.b + pj * h1r.b};
                            const Res y2{y.a + pj * (h2 / p_), y.b + pj * (h2 % p_)};
                            lifted.push_back({x2, y2});
                        }
                    }
                }
                charge(lifted.size());
                ++level_;
                open_ = std::move(lifted);
                if (open_.empty() && closed_.empty())
                    died_at_ = level_;
            }

            std::optional<unsigned> died_at() const { return died_at_; }

            ModularSolution materialize(const Res &x, const Res &y, std::optional<unsigned> t, bool smooth) const
            {
                return ModularSolution{QuadInt(Integer(static_cast<long>(x.a)), Integer(static_cast<long>(x.b)), d_),
                                       QuadInt(Integer(static_cast<long>(y.a)), Integer(static_cast<long>(y.b)), d_),
                                       level_, t, smooth};
            }

        private:
            i64 modulus(unsigned k) const
            {
                i128 m = 1;
                for (unsigned i = 0; i < k; ++i)
                {
                    m *= p_;
                    if (m > kMaxDescentModulus)
                        throw ResourceError("modular descent modulus p^" + std::to_string(k) + " exceeds 2^40");
                }
                return static_cast<i64>(m);
            }

            Res residue(const QuadInt &z, i64 m) const { return {reduce(z.a(), m), reduce(z.b(), m)}; }

            void charge(std::uint64_t n)
            {
                spent_ += n;
                if (spent_ > limits_.max_branches)
                    throw ResourceError("modular descent exceeded its work budget");
            }

            // Counting sort of indices 0..n-1 by key in [0, q): offsets and order.
            static std::pair<std::vector<i64>, std::vector<i64>> bucket(const std::vector<i64> &keys, i64 q)
            {
                std::vector<i64> first(static_cast<std::size_t>(q + 1), 0);
                for (i64 k : keys)
                    ++first[static_cast<std::size_t>(k + 1)];
                for (i64 i = 0; i < q; ++i)
                    first[static_cast<std::size_t>(i + 1)] += first[static_cast<std::size_t>(i)];
                std::vector<i64> order(keys.size());
                std::vector<i64> fill(first.begin(), first.end() - 1);
                for (std::size_t i = 0; i < keys.size(); ++i)
                    order[static_cast<std::size_t>(fill[static_cast<std::size_t>(keys[i])]++)] = static_cast<i64>(i);
                return {std::move(first), std::move(order)};
            }

            QuadInt delta_;
            i64 p_;
            i64 d_;
            DescentLimits limits_;
            unsigned level_ = 0;
            std::uint64_t spent_ = 0;
            std::vector<std::pair<Res, Res>> open_;
            std::vector<ModularSolution> closed_;
            std::optional<unsigned> died_at_;
        };

        i64 small_prime(const Integer &p)
        {
            if (!p.fits_slong_p() || p >= kMaxDescentModulus)
                throw ResourceError("modular descent: prime " + p.get_str() + " too large");
            return p.get_si();
        }

        bool divisible(const QuadInt &z, const Integer &m)
        {
            return mpz_divisible_p(z.a().get_mpz_t(), m.get_mpz_t()) && mpz_divisible_p(z.b().get_mpz_t(), m.get_mpz_t());
        }

        QuadInt scaled(const QuadInt &z, const Integer &s) { return z * QuadInt::rational(s, z.d()); }

        ModularSolution scale_solution(const ModularSolution &sol, const Integer &p, unsigned m)
        {
            if (m == 0)
                return sol;
            const Integer pm = power(p, m);
            ModularSolution out = sol;
            out.x = scaled(sol.x, pm);
            out.y = scaled(sol.y, pm);
            out.level = sol.level + 2 * m;
            if (out.lift_exponent)
                *out.lift_exponent += m;
            return out;
        }

        void check_certificate(const QuadInt &delta, const ModularSolution &sol, const Integer &p)
        {
            const auto t = lift_exponent(sol.x, sol.y, p);
            if (!satisfies_mod(delta, sol.x, sol.y, p, sol.level) || !t || *t != sol.lift_exponent ||
                2 * *t + 1 > sol.level)
                throw std::logic_error("local solver produced an invalid certificate at p = " + p.get_str());
        }

        // p = 2 or p ramified: primitive descent on delta / p^(2m), m = 0, 1, ...
        LocalVerdict stripped_descent(const QuadInt &delta, const Integer &p, LocalVerdict verdict,
                                      const DescentLimits &limits)
        {
            const i64 ps = small_prime(p);
            const Integer p2 = p * p;
            std::vector<std::optional<unsigned>> died;
            QuadInt current = delta;
            for (unsigned m = 0;; ++m)
            {
                const unsigned k = cutoff(p, current);
                Descent descent(current, ps, limits);
                descent.enumerate_level_one(true);
                while (true)
                {
                    if (descent.close_smooth(true))
                    {
                        verdict.solvable = true;
                        verdict.certificate = scale_solution(descent.closed().front(), p, m);
                        check_certificate(delta, *verdict.certificate, p);
                        return verdict;
                    }
                    if (descent.open().empty() || descent.level() >= k)
                        break;
                    descent.lift();
                }
                // No primitive local solution at this stage. Follow the surviving
                // branches until they die to record where the search is exhausted.
                while (!descent.open().empty() && descent.level() < limits.max_depth)
                {
                    descent.lift();
                    if (descent.close_smooth(true))
                        throw std::logic_error("smooth branch beyond the cutoff at p = " + p.get_str());
                }
                died.push_back(descent.open().empty() ? descent.died_at() : std::nullopt);

                if (!divisible(current, p2))
                    break;
                current = QuadInt(current.a() / p2, current.b() / p2, current.d());
            }

            // Solutions mod p^E are primitive ones, or p times solutions of delta/p^2
            // mod p^(E-2). At the last stage p^2 does not divide delta, so imprimitive
            // solutions exist only mod p, and only when p divides delta.
            std::optional<unsigned> exhausted;
            for (auto it = died.rbegin(); it != died.rend(); ++it)
            {
                if (!*it)
                {
                    exhausted.reset();
                    break;
                }
                if (exhausted)
                    exhausted = std::max(**it, *exhausted + 2);
                else
                    exhausted = (**it == 1 && divisible(current, p)) ? 2u : **it;
            }
            verdict.solvable = false;
            verdict.exhausted_at = exhausted;
            return verdict;
        }

        // Primitive solution of x^2 + y^2 = c over F_p (p odd), if any.
        std::optional<std::pair<Integer, Integer>> primitive_scalar_solution(const Integer &c, const Integer &p)
        {
            const Integer cp = mod_floor(c, p);
            if (cp == 0)
            {
                // (x, y) != 0 with x^2 + y^2 = 0 exists iff -1 is a square mod p.
                auto i = sqrt_mod_prime(Integer(-1), p);
                if (!i)
                    return std::nullopt;
                return std::pair{Integer(1), *i};
            }
            for (Integer x = 0; x < p; ++x)
            {
                if (auto y = sqrt_mod_prime(cp - x * x, p))
                    return std::pair{x, *y};
            }
            throw std::logic_error("nonzero value is not a sum of two squares mod " + p.get_str());
        }

        // Newton lift of a primitive scalar solution of x^2 + y^2 = c to modulus p^e.
        std::pair<Integer, Integer> lift_scalar(std::pair<Integer, Integer> s, const Integer &c, const Integer &p,
                                                unsigned e)
        {
            const Integer pe = power(p, e);
            auto &[x, y] = s;
            const bool use_x = mod_floor(x, p) != 0;
            Integer &u = use_x ? x : y;
            for (unsigned i = 0; i < e; ++i)
            {
                const Integer f = mod_floor(x * x + y * y - c, pe);
                if (f == 0)
                    break;
                Integer inv, two_u = 2 * u;
                mpz_invert(inv.get_mpz_t(), two_u.get_mpz_t(), pe.get_mpz_t());
                u = mod_floor(u - f * inv, pe);
            }
            x = mod_floor(x, pe);
            y = mod_floor(y, pe);
            return s;
        }

        // Odd split p: Z[sqrt(d)]/p^K is Z/p^K x Z/p^K via sqrt(d) -> +r, -r.
        LocalVerdict split_verdict(const QuadInt &delta, const Integer &p, LocalVerdict verdict)
        {
            const unsigned k = verdict.cutoff;
            const Integer pk = power(p, k);
            const Integer r = *sqrt_mod_prime_power(Integer(static_cast<long>(delta.d())), p, k);
            const Integer comps[2] = {mod_floor(delta.a() + delta.b() * r, pk), mod_floor(delta.a() - delta.b() * r, pk)};

            struct Component
            {
                Integer value;  // c / p^(2m), known mod p^(k - 2m)
                unsigned m = 0;
                std::optional<std::pair<Integer, Integer>> primitive;
                unsigned exhausted = 0;
            };
            Component parts[2];
            for (int i = 0; i < 2; ++i)
            {
                Component &part = parts[i];
                part.value = comps[i];
                unsigned precision = k;
                while (true)
                {
                    if (part.value == 0)
                        throw std::logic_error("component valuation reached the cutoff");
                    part.primitive = primitive_scalar_solution(part.value, p);
                    if (part.primitive)
                        break;
                    const unsigned v = valuation(part.value, p);
                    if (v < 2)
                    {
                        part.exhausted = 2 * part.m + 2;
                        break;
                    }
                    part.value /= p * p;
                    precision -= 2;
                    part.value = mod_floor(part.value, power(p, precision));
                    ++part.m;
                }
            }

            if (!parts[0].primitive || !parts[1].primitive)
            {
                verdict.solvable = false;
                unsigned e = 0;
                for (const auto &part : parts)
                    if (!part.primitive)
                        e = e == 0 ? part.exhausted : std::min(e, part.exhausted);
                verdict.exhausted_at = e;
                return verdict;
            }

            const unsigned level = 2 * std::max(parts[0].m, parts[1].m) + 1;
            const Integer pl = power(p, level);
            Integer xs[2], ys[2];
            for (int i = 0; i < 2; ++i)
            {
                const auto [x, y] = lift_scalar(*parts[i].primitive, parts[i].value, p, level - 2 * parts[i].m);
                const Integer pm = power(p, parts[i].m);
                xs[i] = mod_floor(x * pm, pl);
                ys[i] = mod_floor(y * pm, pl);
            }
            Integer inv2, inv2r;
            const Integer two(2), two_r = 2 * r;
            mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), pl.get_mpz_t());
            mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), pl.get_mpz_t());
            auto combine = [&](const Integer &z1, const Integer &z2) {
                return QuadInt(mod_floor((z1 + z2) * inv2, pl), mod_floor((z1 - z2) * inv2r, pl), delta.d());
            };
            ModularSolution sol{combine(xs[0], xs[1]), combine(ys[0], ys[1]), level, std::nullopt, true};
            sol.lift_exponent = lift_exponent(sol.x, sol.y, p);
            check_certificate(delta, sol, p);
            verdict.solvable = true;
            verdict.certificate = std::move(sol);
            return verdict;
        }

        // Square root in the field Z[sqrt(d)]/p for inert p: solve (s + t sqrt(d))^2 = A + B sqrt(d).
        std::optional<QuadInt> sqrt_inert(const Integer &A, const Integer &B, const Integer &p, std::int64_t d)
        {
            const Integer dd(static_cast<long>(d));
            if (mod_floor(A, p) == 0 && mod_floor(B, p) == 0)
                return QuadInt(Integer(0), Integer(0), d);
            const auto n = sqrt_mod_prime(A * A - dd * B * B, p);
            if (!n)
                return std::nullopt;
            Integer inv2;
            const Integer two(2);
            mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
            for (const Integer &sign : {*n, Integer(-*n)})
            {
                const auto s = sqrt_mod_prime((A + sign) * inv2, p);
                if (!s)
                    continue;
                Integer t;
                if (mod_floor(*s, p) != 0)
                {
                    Integer inv2s, two_s = 2 * *s;
                    mpz_invert(inv2s.get_mpz_t(), two_s.get_mpz_t(), p.get_mpz_t());
                    t = mod_floor(B * inv2s, p);
                }
                else
                {
                    Integer inv2d, two_d = 2 * dd;
                    mpz_invert(inv2d.get_mpz_t(), two_d.get_mpz_t(), p.get_mpz_t());
                    const auto tt = sqrt_mod_prime((A - sign) * inv2d, p);
                    if (!tt)
                        continue;
                    t = *tt;
                }
                const Integer s2 = mod_floor(*s * *s + dd * t * t - A, p);
                const Integer st = mod_floor(2 * *s * t - B, p);
                if (s2 == 0 && st == 0)
                    return QuadInt(mod_floor(*s, p), t, d);
            }
            return std::nullopt;
        }

        // Odd inert p: the residue ring is F_{p^2}; primitive solutions mod p are smooth and always exist.
        LocalVerdict inert_verdict(const QuadInt &delta, const Integer &p, LocalVerdict verdict)
        {
            const std::int64_t d = delta.d();
            const Integer dd(static_cast<long>(d));
            for (Integer ya = 0; ya < p; ++ya)
            {
                for (Integer yb = 0; yb < p; ++yb)
                {
                    const Integer y2a = ya * ya + dd * yb * yb;
                    const Integer y2b = 2 * ya * yb;
                    auto x = sqrt_inert(delta.a() - y2a, delta.b() - y2b, p, d);
                    if (!x || (x->is_zero() && ya == 0 && yb == 0))
                        continue;
                    ModularSolution sol{*x, QuadInt(ya, yb, d), 1, std::nullopt, true};
                    sol.lift_exponent = lift_exponent(sol.x, sol.y, p);
                    check_certificate(delta, sol, p);
                    verdict.solvable = true;
                    verdict.certificate = std::move(sol);
                    return verdict;
                }
            }
            throw std::logic_error("no level-one solution at inert prime " + p.get_str());
        }

        bool nonnegative_embedding(const Integer &a, const Integer &b, std::int64_t d)
        {
            // sign of a + b*sqrt(d), d > 0
            if (b == 0)
                return a >= 0;
            if (a >= 0 && b > 0)
                return true;
            if (a <= 0 && b < 0)
                return false;
            const Integer a2 = a * a;
            const Integer db2 = b * b * static_cast<long>(d);
            return a >= 0 ? a2 >= db2 : db2 >= a2;
        }
    } // namespace

    std::vector<Place> LocalReport::failing_places() const
    {
        std::vector<Place> out;
        for (const auto &v : verdicts)
            if (!v.solvable)
                out.push_back(v.place);
        return out;
    }

    std::vector<Integer> relevant_primes(const QuadInt &delta)
    {
        if (delta.is_zero())
            throw DomainError("relevant_primes: delta = 0");
        std::vector<Integer> out{2};
        for (const auto &pp : factorize(abs(norm(delta))))
            if (pp.prime != 2)
                out.push_back(pp.prime);
        return out;
    }

    unsigned cutoff(const Integer &p, const QuadInt &delta)
    {
        if (delta.is_zero())
            throw DomainError("cutoff: delta = 0");
        const unsigned nu = valuation(norm(delta), p);
        const unsigned v2 = p == 2 ? 1 : 0;
        return 2 * (v2 + (nu + 1) / 2) + 1;
    }

    std::optional<unsigned> lift_exponent(const QuadInt &x, const QuadInt &y, const Integer &p)
    {
        if (x.d() != y.d())
            throw ParameterError("lift_exponent: mismatched ring parameters");
        return lift_exponent_impl<Integer>(x.a(), x.b(), y.a(), y.b(), Integer(static_cast<long>(x.d())), p);
    }

    bool satisfies_mod(const QuadInt &delta, const QuadInt &x, const QuadInt &y, const Integer &p, unsigned level)
    {
        const QuadInt f = x * x + y * y - delta;
        return divisible(f, power(p, level));
    }

    std::vector<ModularSolution> solvable_mod(const QuadInt &delta, const Integer &p, unsigned k,
                                              const DescentLimits &limits)
    {
        if (k == 0)
            throw ParameterError("solvable_mod: k must be positive");
        if (k > limits.max_depth)
            throw ResourceError("solvable_mod: k = " + std::to_string(k) + " exceeds depth limit " +
                                std::to_string(limits.max_depth));
        if (!is_prime(p))
            throw ParameterError("solvable_mod: " + p.get_str() + " is not prime");

        Descent descent(delta, small_prime(p), limits);
        descent.enumerate_level_one(false);
        while (true)
        {
            descent.close_smooth(false);
            if (descent.open().empty() || descent.level() == k)
                break;
            descent.lift();
        }
        std::vector<ModularSolution> out = descent.closed();
        for (const auto &[x, y] : descent.open())
        {
            const auto t = lift_exponent_impl<i128>(x.a, x.b, y.a, y.b, delta.d(), small_prime(p));
            out.push_back(descent.materialize(x, y, t, false));
        }
        return out;
    }

    DepthProbe probe_depth(const QuadInt &delta, const Integer &p, unsigned k, const DescentLimits &limits)
    {
        if (k == 0)
            throw ParameterError("probe_depth: k must be positive");
        if (!is_prime(p))
            throw ParameterError("probe_depth: " + p.get_str() + " is not prime");

        Descent descent(delta, small_prime(p), limits);
        descent.enumerate_level_one(false);
        while (true)
        {
            if (descent.close_smooth(true))
                return DepthProbe{true, descent.closed().front()};
            if (descent.open().empty() || descent.level() == k)
                break;
            descent.lift();
        }
        return DepthProbe{!descent.open().empty(), std::nullopt};
    }

    LocalVerdict locally_solvable(const QuadInt &delta, const Integer &p, const DescentLimits &limits)
    {
        if (delta.is_zero())
            throw DomainError("locally_solvable: delta = 0");
        const Splitting s = split_type(p, delta.d());
        LocalVerdict verdict{FinitePlace{p, s}, false, std::nullopt, std::nullopt, cutoff(p, delta)};
        if (p == 2 || s == Splitting::ramified)
            return stripped_descent(delta, p, std::move(verdict), limits);
        if (s == Splitting::inert)
            return inert_verdict(delta, p, std::move(verdict));
        return split_verdict(delta, p, std::move(verdict));
    }

    LocalVerdict archimedean_verdict(const QuadInt &delta)
    {
        const std::int64_t d = delta.d();
        if (d < 0)
            return LocalVerdict{ArchimedeanPlace{false}, true, std::nullopt, std::nullopt, 0};
        const bool ok = nonnegative_embedding(delta.a(), delta.b(), d) &&
                        nonnegative_embedding(delta.a(), Integer(-delta.b()), d);
        return LocalVerdict{ArchimedeanPlace{true}, ok, std::nullopt, std::nullopt, 0};
    }

    LocalReport locally_solvable_everywhere(const QuadInt &delta, const DescentLimits &limits)
    {
        LocalReport report;
        for (const Integer &p : relevant_primes(delta))
            report.verdicts.push_back(locally_solvable(delta, p, limits));
        report.verdicts.push_back(archimedean_verdict(delta));
        for (const auto &v : report.verdicts)
            report.all_solvable = report.all_solvable && v.solvable;
        return report;
    }
} // namespace sumsq
