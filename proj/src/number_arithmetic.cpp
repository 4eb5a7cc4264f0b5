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

#include "sumsq/number_arithmetic.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>

#include "sumsq/error.hpp"

namespace sumsq
{
    namespace
    {
        const std::vector<std::uint32_t> &small_primes(std::uint64_t bound)
        {
            // Sieve once up to the largest trial-division bound we support.
            static const std::vector<std::uint32_t> primes = [] {
                constexpr std::uint32_t limit = 1'000'000;
                std::vector<bool> composite(limit + 1, false);
                std::vector<std::uint32_t> out;
                for (std::uint32_t i = 2; i <= limit; ++i)
                {
                    if (composite[i])
                        continue;
                    out.push_back(i);
                    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                        composite[j] = true;
                }
                return out;
            }();
            if (bound > 1'000'000)
                throw ParameterError("trial division bound above 10^6 is not supported");
            return primes;
        }

        bool miller_rabin_round(const Integer &n, const Integer &n_minus_one, const Integer &odd_part,
                                unsigned twos, const Integer &base)
        {
            Integer x = pow_mod(base, odd_part, n);
            if (x == 1 || x == n_minus_one)
                return true;
            for (unsigned r = 1; r < twos; ++r)
            {
                x = x * x % n;
                if (x == n_minus_one)
                    return true;
                if (x == 1)
                    return false;
            }
            return false;
        }

        bool miller_rabin(const Integer &n)
        {
            static constexpr std::array<unsigned, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
            Integer n_minus_one = n - 1;
            Integer odd_part = n_minus_one;
            unsigned twos = 0;
            while (mpz_even_p(odd_part.get_mpz_t()))
            {
                odd_part >>= 1;
                ++twos;
            }
            for (unsigned b : bases)
            {
                if (n == b)
                    return true;
                if (!miller_rabin_round(n, n_minus_one, odd_part, twos, Integer(b)))
                    return false;
            }
            if (n < deterministic_primality_bound())
                return true;
            // Beyond the deterministic range fall back to BPSW.
            return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
        }

        // Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor or nothing.
        std::optional<Integer> pollard_brent(const Integer &n, const Integer &c, std::uint64_t budget)
        {
            if (mpz_even_p(n.get_mpz_t()))
                return Integer(2);
            Integer y = 2, x, ys, q = 1, g = 1;
            const std::uint64_t m = 128;
            std::uint64_t r = 1, spent = 0;
            auto step = [&](const Integer &v) { return Integer((v * v + c) % n); };
            while (g == 1)
            {
                x = y;
                for (std::uint64_t i = 0; i < r; ++i)
                    y = step(y);
                std::uint64_t k = 0;
                while (k < r && g == 1)
                {
                    ys = y;
                    const std::uint64_t lim = std::min(m, r - k);
                    for (std::uint64_t i = 0; i < lim; ++i)
                    {
                        y = step(y);
                        Integer diff = x - y;
                        q = q * abs(diff) % n;
                    }
                    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                    k += lim;
                    spent += lim;
                    if (spent > budget)
                        return std::nullopt;
                }
                r *= 2;
            }
            if (g == n)
            {
                do
                {
                    ys = step(ys);
                    Integer diff = x - ys;
                    mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                } while (g == 1);
            }
            if (g == n || g == 1)
                return std::nullopt;
            return g;
        }

        void split_cofactor(const Integer &n, const FactorizationLimits &limits, std::vector<Integer> &out)
        {
            if (n == 1)
                return;
            if (is_prime(n))
            {
                if (n >= deterministic_primality_bound())
                    throw FactorizationError("cannot certify primality of cofactor " + n.get_str());
                out.push_back(n);
                return;
            }
            for (unsigned c = 1; c <= 16; ++c)
            {
                if (auto f = pollard_brent(n, Integer(c), limits.rho_iterations))
                {
                    split_cofactor(*f, limits, out);
                    split_cofactor(n / *f, limits, out);
                    return;
                }
            }
            throw FactorizationError("Pollard rho exhausted its budget on " + n.get_str());
        }

        int jacobi_odd(Integer a, Integer n)
        {
            // n odd positive, a arbitrary
            a = mod_floor(a, n);
            int t = 1;
            while (a != 0)
            {
                while (mpz_even_p(a.get_mpz_t()))
                {
                    a >>= 1;
                    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
                    if (r == 3 || r == 5)
                        t = -t;
                }
                std::swap(a, n);
                if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
                    t = -t;
                a %= n;
            }
            return n == 1 ? t : 0;
        }

        void require_odd_prime(const Integer &p, const char *what)
        {
            if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
                throw ParameterError(std::string(what) + ": modulus " + p.get_str() + " is not an odd prime");
        }

        // Square-class representative in Z of a nonzero rational: n/d ~ n*d.
        Integer integral_square_class(const Rational &q)
        {
            if (q == 0)
                throw ParameterError("hilbert_symbol: arguments must be nonzero");
            return Integer(q.get_num() * q.get_den());
        }

        unsigned odd_part_valuation(Integer &n, const Integer &p)
        {
            unsigned v = 0;
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
            {
                n /= p;
                ++v;
            }
            return v;
        }
    } // namespace

    Integer parse_integer(std::string_view text)
    {
        std::string s(text);
        auto valid = [&] {
            if (s.empty())
                return false;
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size())
                return false;
            return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                               [](unsigned char c) { return std::isdigit(c) != 0; });
        };
        if (!valid())
            throw ParameterError("not an integer: '" + s + "'");
        if (s[0] == '+')
            s.erase(0, 1);
        return Integer(s, 10);
    }

    Rational parse_rational(std::string_view text)
    {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_integer(text));
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw ParameterError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string to_string(const Integer &n) { return n.get_str(); }

    unsigned valuation(const Integer &n, const Integer &p)
    {
        if (n == 0)
            throw DomainError("valuation of zero");
        if (p < 2)
            throw ParameterError("valuation base must be >= 2");
        Integer m = n;
        return odd_part_valuation(m, p);
    }

    Integer mod_floor(const Integer &a, const Integer &m)
    {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        return r;
    }

    Integer pow_mod(const Integer &base, const Integer &exponent, const Integer &modulus)
    {
        Integer r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
        return r;
    }

    Integer isqrt(const Integer &n)
    {
        if (n < 0)
            throw DomainError("isqrt of a negative number");
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
    }

    bool is_square(const Integer &n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

    Integer squarefree_part(const Integer &n)
    {
        if (n == 0)
            throw DomainError("squarefree part of zero");
        Integer out = sgn(n) < 0 ? -1 : 1;
        for (const auto &[p, e] : factorize(abs(n)))
            if (e % 2 == 1)
                out *= p;
        return out;
    }

    bool is_squarefree(const Integer &n)
    {
        if (n == 0)
            return false;
        for (const auto &pp : factorize(abs(n)))
            if (pp.exponent > 1)
                return false;
        return true;
    }

    bool is_prime(const Integer &n)
    {
        if (n < 2)
            return false;
        for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u})
        {
            if (n == p)
                return true;
            if (mpz_divisible_ui_p(n.get_mpz_t(), p))
                return false;
        }
        if (n < 53 * 53)
            return true;
        return miller_rabin(n);
    }

    Factorization factorize(const Integer &n, const FactorizationLimits &limits)
    {
        if (n < 1)
            throw ParameterError("factorize: n must be positive, got " + n.get_str());
        Factorization out;
        Integer rest = n;
        for (std::uint32_t p : small_primes(limits.trial_division_bound))
        {
            if (p > limits.trial_division_bound)
                break;
            if (Integer(p) * p > rest)
                break;
            if (mpz_divisible_ui_p(rest.get_mpz_t(), p))
            {
                Integer prime(p);
                out.push_back({prime, odd_part_valuation(rest, prime)});
            }
        }
        if (rest == 1)
            return out;

        std::vector<Integer> big;
        split_cofactor(rest, limits, big);
        std::sort(big.begin(), big.end());
        for (const Integer &p : big)
        {
            if (!out.empty() && out.back().prime == p)
                ++out.back().exponent;
            else
                out.push_back({p, 1});
        }
        return out;
    }

    int jacobi(const Integer &a, const Integer &n)
    {
        if (n < 1 || mpz_even_p(n.get_mpz_t()))
            throw ParameterError("jacobi: n must be odd and positive, got " + n.get_str());
        return jacobi_odd(a, n);
    }

    int legendre(const Integer &a, const Integer &p)
    {
        require_odd_prime(p, "legendre");
        return jacobi_odd(a, p);
    }

    bool is_quartic_residue(const Integer &a, const Integer &p)
    {
        require_odd_prime(p, "is_quartic_residue");
        if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
            throw ParameterError("is_quartic_residue: p divides a");
        Integer pm1 = p - 1;
        Integer g;
        mpz_gcd_ui(g.get_mpz_t(), pm1.get_mpz_t(), 4);
        return pow_mod(mod_floor(a, p), pm1 / g, p) == 1;
    }

    std::optional<Integer> sqrt_mod_prime(const Integer &a, const Integer &p)
    {
        require_odd_prime(p, "sqrt_mod_prime");
        Integer r = mod_floor(a, p);
        if (r == 0)
            return Integer(0);
        if (jacobi_odd(r, p) != 1)
            return std::nullopt;
        if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
            return pow_mod(r, (p + 1) / 4, p);

        // Tonelli-Shanks
        Integer q = p - 1;
        unsigned s = 0;
        while (mpz_even_p(q.get_mpz_t()))
        {
            q >>= 1;
            ++s;
        }
        Integer z = 2;
        while (jacobi_odd(z, p) != -1)
            ++z;
        Integer m_c = pow_mod(z, q, p);
        Integer t = pow_mod(r, q, p);
        Integer root = pow_mod(r, (q + 1) / 2, p);
        unsigned m = s;
        while (t != 1)
        {
            unsigned i = 0;
            Integer t2 = t;
            while (t2 != 1)
            {
                t2 = t2 * t2 % p;
                ++i;
            }
            Integer b = m_c;
            for (unsigned j = 0; j + i + 1 < m; ++j)
                b = b * b % p;
            m = i;
            m_c = b * b % p;
            t = t * m_c % p;
            root = root * b % p;
        }
        return root;
    }

    std::optional<Integer> sqrt_mod_prime_power(const Integer &a, const Integer &p, unsigned k)
    {
        if (k == 0)
            throw ParameterError("sqrt_mod_prime_power: k must be positive");
        if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
            throw ParameterError("sqrt_mod_prime_power: a must be a unit");
        auto root = sqrt_mod_prime(a, p);
        if (!root)
            return std::nullopt;
        Integer modulus = p;
        Integer target;
        mpz_pow_ui(target.get_mpz_t(), p.get_mpz_t(), k);
        Integer r = *root;
        while (modulus < target)
        {
            modulus = std::min(Integer(modulus * modulus), target);
            Integer inv;
            Integer two_r = 2 * r;
            mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), modulus.get_mpz_t());
            r = mod_floor(r - (r * r - a) * inv, modulus);
        }
        return mod_floor(r, target);
    }

    std::string RationalPlace::to_string() const { return prime ? prime->get_str() : std::string("inf"); }

    int hilbert_symbol(const Rational &a, const Rational &b, const RationalPlace &place)
    {
        Integer x = integral_square_class(a);
        Integer y = integral_square_class(b);
        if (place.is_infinite())
            return (x < 0 && y < 0) ? -1 : 1;

        const Integer &p = *place.prime;
        if (!is_prime(p))
            throw ParameterError("hilbert_symbol: " + p.get_str() + " is not prime");
        const unsigned alpha = odd_part_valuation(x, p);
        const unsigned beta = odd_part_valuation(y, p);

        if (p == 2)
        {
            auto eps = [](const Integer &u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1u : 0u; };
            auto omega = [](const Integer &u) {
                const unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
                return (r == 3 || r == 5) ? 1u : 0u;
            };
            const unsigned e = eps(x) * eps(y) + alpha * omega(y) + beta * omega(x);
            return e % 2 == 0 ? 1 : -1;
        }

        int sign = 1;
        if ((alpha % 2 == 1) && (beta % 2 == 1) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
            sign = -1;
        if (beta % 2 == 1)
            sign *= jacobi_odd(x, p);
        if (alpha % 2 == 1)
            sign *= jacobi_odd(y, p);
        return sign;
    }

    std::vector<RationalPlace> hilbert_support(const Rational &a, const Rational &b)
    {
        std::vector<Integer> primes{2};
        for (const Integer *n : {&a.get_num(), &a.get_den(), &b.get_num(), &b.get_den()})
        {
            if (*n == 0)
                throw ParameterError("hilbert_support: arguments must be nonzero");
            for (const auto &pp : factorize(abs(*n)))
                primes.push_back(pp.prime);
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        std::vector<RationalPlace> out{RationalPlace::infinity()};
        for (auto &p : primes)
            out.push_back(RationalPlace::at(std::move(p)));
        return out;
    }
} // namespace sumsq
