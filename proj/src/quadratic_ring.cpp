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

#include "sumsq/quadratic_ring.hpp"

#include "sumsq/error.hpp"

namespace sumsq
{
    namespace
    {
        void require_same_ring(const QuadInt &x, const QuadInt &y)
        {
            if (x.d() != y.d())
                throw ParameterError("mismatched ring parameters " + std::to_string(x.d()) + " and " +
                                     std::to_string(y.d()));
        }
    } // namespace

    bool is_valid_ring_parameter(std::int64_t d)
    {
        if (d == 0 || d == 1)
            return false;
        const std::int64_t r = ((d % 4) + 4) % 4;
        if (r != 2 && r != 3)
            return false;
        return is_squarefree(Integer(static_cast<long>(d)));
    }

    void require_valid_ring_parameter(std::int64_t d)
    {
        if (!is_valid_ring_parameter(d))
            throw ParameterError("ring parameter d = " + std::to_string(d) +
                                 " must be squarefree with d = 2 or 3 (mod 4)");
    }

    QuadInt::QuadInt(Integer a, Integer b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d)
    {
        require_valid_ring_parameter(d);
    }

    std::string QuadInt::to_string() const
    {
        std::string out = a_.get_str();
        out += (b_ < 0) ? "-" : "+";
        out += Integer(abs(b_)).get_str();
        out += "*sqrt(" + std::to_string(d_) + ")";
        return out;
    }

    std::string QuadInt::to_pair_string() const { return a_.get_str() + "," + b_.get_str(); }

    QuadInt operator+(const QuadInt &x, const QuadInt &y)
    {
        require_same_ring(x, y);
        return QuadInt(QuadInt::Unchecked{}, x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }

    QuadInt operator-(const QuadInt &x, const QuadInt &y)
    {
        require_same_ring(x, y);
        return QuadInt(QuadInt::Unchecked{}, x.a_ - y.a_, x.b_ - y.b_, x.d_);
    }

    QuadInt operator*(const QuadInt &x, const QuadInt &y)
    {
        require_same_ring(x, y);
        Integer a = x.a_ * y.a_ + x.b_ * y.b_ * static_cast<long>(x.d_);
        Integer b = x.a_ * y.b_ + x.b_ * y.a_;
        return QuadInt(QuadInt::Unchecked{}, std::move(a), std::move(b), x.d_);
    }

    QuadInt operator-(const QuadInt &x) { return QuadInt(QuadInt::Unchecked{}, -x.a_, -x.b_, x.d_); }

    Integer norm(const QuadInt &x) { return x.a() * x.a() - x.b() * x.b() * static_cast<long>(x.d()); }

    QuadInt conj(const QuadInt &x) { return QuadInt(QuadInt::Unchecked{}, x.a_, -x.b_, x.d_); }

    QuadInt parse_quad(std::string_view text, std::int64_t d)
    {
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
            throw ParameterError("expected 'a,b', got '" + std::string(text) + "'");
        return QuadInt(parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1)), d);
    }

    std::string to_string(Splitting s)
    {
        switch (s)
        {
        case Splitting::split:
            return "split";
        case Splitting::inert:
            return "inert";
        case Splitting::ramified:
            return "ramified";
        }
        return "?";
    }

    Splitting split_type(const Integer &p, std::int64_t d)
    {
        require_valid_ring_parameter(d);
        if (!is_prime(p))
            throw ParameterError("split_type: " + p.get_str() + " is not prime");
        const Integer dd(static_cast<long>(d));
        if (mpz_divisible_p(Integer(2 * dd).get_mpz_t(), p.get_mpz_t()))
            return Splitting::ramified;
        return legendre(dd, p) == 1 ? Splitting::split : Splitting::inert;
    }

    std::string to_string(const Place &place)
    {
        if (const auto *f = std::get_if<FinitePlace>(&place))
            return f->prime.get_str() + " (" + to_string(f->splitting) + ")";
        return std::get<ArchimedeanPlace>(place).real ? "inf (real)" : "inf (complex)";
    }

    Place finite_place(const Integer &p, std::int64_t d) { return FinitePlace{p, split_type(p, d)}; }

    DSets partition_d(const std::vector<PrimePower> &primes)
    {
        DSets out;
        const Integer minus_one(-1), fourteen(14), seven(7);
        for (const auto &pp : primes)
        {
            const Integer &p = pp.prime;
            if (p == 2 || p == 7)
                throw ParameterError("partition_d: primes must be odd and different from 7");
            const int m1 = legendre(minus_one, p);
            const int l14 = legendre(fourteen, p);
            const int l7 = legendre(seven, p);
            if (m1 == 1 && l14 == 1 && l7 == -1)
                out.d1.push_back(p);
            if (m1 == 1 && l14 == -1 && l7 == -1)
                out.d2.push_back(p);
            if (m1 == 1 && l14 == 1 && !is_quartic_residue(seven, p))
                out.d3.push_back(p);
        }
        return out;
    }

    Integer NormFactorization::reconstruct() const
    {
        Integer out = 1;
        out <<= s1;
        Integer seven_pow;
        mpz_ui_pow_ui(seven_pow.get_mpz_t(), 7, s2);
        out *= seven_pow;
        for (const auto &pp : primes)
        {
            Integer t;
            mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
            out *= t;
        }
        return out;
    }

    unsigned NormFactorization::exponent_of(const Integer &p) const
    {
        if (p == 2)
            return s1;
        if (p == 7)
            return s2;
        for (const auto &pp : primes)
            if (pp.prime == p)
                return pp.exponent;
        return 0;
    }

    NormFactorization norm_factorization(const QuadInt &delta, const FactorizationLimits &limits)
    {
        if (delta.d() != kMinus14)
            throw ParameterError("norm_factorization is defined for Z[sqrt(-14)] only");
        if (delta.is_zero())
            throw DomainError("norm_factorization: delta = 0");
        if (delta.a() == 0)
            throw UnsupportedInput("norm_factorization: a = 0 leaves s3 and a1 undefined");

        NormFactorization nf;
        for (auto &pp : factorize(abs(norm(delta)), limits))
        {
            if (pp.prime == 2)
                nf.s1 = pp.exponent;
            else if (pp.prime == 7)
                nf.s2 = pp.exponent;
            else
                nf.primes.push_back(std::move(pp));
        }
        nf.a1 = delta.a();
        while (mpz_divisible_ui_p(nf.a1.get_mpz_t(), 7))
        {
            nf.a1 /= 7;
            ++nf.s3;
        }
        nf.d_sets = partition_d(nf.primes);
        return nf;
    }
} // namespace sumsq
