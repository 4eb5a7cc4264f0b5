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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sumsq
{
    using Integer = mpz_class;
    using Rational = mpq_class;

    // -----------------------------------------------------------------------
    // Integer helpers
    // -----------------------------------------------------------------------

    /// Parses an optionally signed decimal integer; throws ParameterError.
    Integer parse_integer(std::string_view text);

    /// Parses "n" or "n/d" into a normalized rational; throws ParameterError.
    Rational parse_rational(std::string_view text);

    std::string to_string(const Integer &n);

    /// Largest e with p^e | n. Requires n != 0 and p >= 2.
    unsigned valuation(const Integer &n, const Integer &p);

    /// Representative of a mod m in [0, m).
    Integer mod_floor(const Integer &a, const Integer &m);

    Integer pow_mod(const Integer &base, const Integer &exponent, const Integer &modulus);

    Integer isqrt(const Integer &n);
    bool is_square(const Integer &n);

    /// n with every square factor p^2 removed (sign kept). n != 0.
    Integer squarefree_part(const Integer &n);
    bool is_squarefree(const Integer &n);

    // -----------------------------------------------------------------------
    // Primality and factorization
    // -----------------------------------------------------------------------

    /// Miller-Rabin is deterministic below this bound with the first 13 prime bases.
    inline const Integer &deterministic_primality_bound()
    {
        static const Integer bound("3317044064679887385961981");
        return bound;
    }

    bool is_prime(const Integer &n);

    struct PrimePower
    {
        Integer prime;
        unsigned exponent = 0;

        friend bool operator==(const PrimePower &, const PrimePower &) = default;
    };

    using Factorization = std::vector<PrimePower>;

    struct FactorizationLimits
    {
        std::uint64_t trial_division_bound = 1'000'000;
        std::uint64_t rho_iterations = 2'000'000;
    };

    /// Complete factorization of n >= 1, primes strictly increasing.
    /// Throws FactorizationError when a cofactor cannot be split or certified.
    Factorization factorize(const Integer &n, const FactorizationLimits &limits = {});

    // -----------------------------------------------------------------------
    // Residue symbols
    // -----------------------------------------------------------------------

    /// Jacobi symbol (a/n) for odd n >= 1, by binary reciprocity.
    int jacobi(const Integer &a, const Integer &n);

    /// Legendre symbol (a/p); p must be an odd prime.
    int legendre(const Integer &a, const Integer &p);

    /// Whether x^4 = a (mod p) is solvable; p odd prime, p does not divide a.
    bool is_quartic_residue(const Integer &a, const Integer &p);

    /// A square root of a modulo the odd prime p (Tonelli-Shanks), if one exists.
    std::optional<Integer> sqrt_mod_prime(const Integer &a, const Integer &p);

    /// Square root of a unit a modulo p^k for odd p, lifted from sqrt_mod_prime.
    std::optional<Integer> sqrt_mod_prime_power(const Integer &a, const Integer &p, unsigned k);

    // -----------------------------------------------------------------------
    // Hilbert symbols over the completions of Q
    // -----------------------------------------------------------------------

    /// A place of Q: a rational prime, or the real place when `prime` is empty.
    struct RationalPlace
    {
        std::optional<Integer> prime;

        static RationalPlace infinity() { return {}; }
        static RationalPlace at(Integer p) { return RationalPlace{std::move(p)}; }

        bool is_infinite() const { return !prime.has_value(); }
        std::string to_string() const;

        friend bool operator==(const RationalPlace &, const RationalPlace &) = default;
    };

    /// (a, b)_v for nonzero rationals a, b; +1 iff z^2 = a x^2 + b y^2 has a
    /// nontrivial solution over Q_v.
    int hilbert_symbol(const Rational &a, const Rational &b, const RationalPlace &place);

    /// Places where (a, b)_v can be -1: the real place, 2, and the odd primes
    /// dividing a numerator or denominator. Sorted, real place first.
    std::vector<RationalPlace> hilbert_support(const Rational &a, const Rational &b);
} // namespace sumsq
