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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumsq/number_arithmetic.hpp"

namespace sumsq
{
    /// Ring parameter of Q(sqrt(-14)), the field the explicit criterion is stated for.
    inline constexpr std::int64_t kMinus14 = -14;

    /// Whether Z[sqrt(d)] is the full ring of integers of Q(sqrt(d)):
    /// d squarefree, d != 0, 1 and d = 2, 3 (mod 4).
    bool is_valid_ring_parameter(std::int64_t d);
    void require_valid_ring_parameter(std::int64_t d);

    /// An element a + b*sqrt(d) of Z[sqrt(d)].
    class QuadInt
    {
    public:
        QuadInt(Integer a, Integer b, std::int64_t d);

        static QuadInt rational(Integer a, std::int64_t d) { return QuadInt(std::move(a), Integer(0), d); }

        const Integer &a() const { return a_; }
        const Integer &b() const { return b_; }
        std::int64_t d() const { return d_; }

        bool is_zero() const { return a_ == 0 && b_ == 0; }

        /// "a+b*sqrt(d)", always with both terms.
        std::string to_string() const;
        /// "a,b"
        std::string to_pair_string() const;

        friend QuadInt operator+(const QuadInt &x, const QuadInt &y);
        friend QuadInt operator-(const QuadInt &x, const QuadInt &y);
        friend QuadInt operator*(const QuadInt &x, const QuadInt &y);
        friend QuadInt operator-(const QuadInt &x);
        friend bool operator==(const QuadInt &x, const QuadInt &y) = default;

    private:
        struct Unchecked
        {
        };
        QuadInt(Unchecked, Integer a, Integer b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

        friend QuadInt conj(const QuadInt &x);

        Integer a_;
        Integer b_;
        std::int64_t d_;
    };

    /// a^2 - d*b^2
    Integer norm(const QuadInt &x);
    /// a - b*sqrt(d)
    QuadInt conj(const QuadInt &x);

    /// Parses the compact pair form "a,b".
    QuadInt parse_quad(std::string_view text, std::int64_t d);

    // -----------------------------------------------------------------------
    // Places
    // -----------------------------------------------------------------------

    enum class Splitting
    {
        split,
        inert,
        ramified
    };

    std::string to_string(Splitting s);

    /// Decomposition of the rational prime p in Z[sqrt(d)]. Throws ParameterError
    /// when p is not prime or d is not a valid ring parameter.
    Splitting split_type(const Integer &p, std::int64_t d);

    struct FinitePlace
    {
        Integer prime;
        Splitting splitting = Splitting::split;

        friend bool operator==(const FinitePlace &, const FinitePlace &) = default;
    };

    struct ArchimedeanPlace
    {
        bool real = false;

        friend bool operator==(const ArchimedeanPlace &, const ArchimedeanPlace &) = default;
    };

    using Place = std::variant<FinitePlace, ArchimedeanPlace>;

    std::string to_string(const Place &place);

    /// The finite place data for the rational prime p.
    Place finite_place(const Integer &p, std::int64_t d);

    // -----------------------------------------------------------------------
    // Norm factorization for Q(sqrt(-14))
    // -----------------------------------------------------------------------

    struct DSets
    {
        std::vector<Integer> d1;
        std::vector<Integer> d2;
        std::vector<Integer> d3;

        friend bool operator==(const DSets &, const DSets &) = default;
    };

    /// The three prime sets of the sqrt(-14) criterion, for odd primes != 7:
    ///   D1: (-1/p) = (14/p) = 1, (7/p) = -1
    ///   D2: (-1/p) = 1, (14/p) = -1, (7/p) = -1
    ///   D3: (-1/p) = (14/p) = 1, x^4 = 7 (mod p) unsolvable
    /// D1 is contained in D3 under these definitions; the criterion consults D3
    /// only when D1 is empty.
    DSets partition_d(const std::vector<PrimePower> &primes);

    struct NormFactorization
    {
        unsigned s1 = 0;                 ///< exponent of 2 in N(delta)
        unsigned s2 = 0;                 ///< exponent of 7 in N(delta)
        std::vector<PrimePower> primes;  ///< remaining odd primes != 7, increasing
        unsigned s3 = 0;                 ///< exponent of 7 in a
        Integer a1;                      ///< a = 7^s3 * a1, 7 does not divide a1
        DSets d_sets;

        /// 2^s1 * 7^s2 * prod p^e
        Integer reconstruct() const;
        /// Exponent of p in N(delta), including p = 2 and 7.
        unsigned exponent_of(const Integer &p) const;
    };

    /// Throws DomainError for delta = 0, UnsupportedInput for a = 0 and
    /// ParameterError if delta is not in Z[sqrt(-14)].
    NormFactorization norm_factorization(const QuadInt &delta, const FactorizationLimits &limits = {});
} // namespace sumsq
