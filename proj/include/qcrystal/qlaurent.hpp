#pragma once

// Exact arithmetic in one variable q: Laurent polynomials over Z, the
// rational-function field Q(q) with its deg/lc/lt calculus at q = infinity,
// the bar involution q -> q^{-1}, balanced q-integers and Gaussian binomials,
// and the quadratic extension Q(sqrt2)(q) needed for the sqrt2 normalizers.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qcrystal/errors.hpp"

namespace qcrystal {

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// Canonical form: no stored zero coefficients.
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long c) { set(0, mpz_class(c)); }
    LaurentInt(const mpz_class& c) { set(0, c); }

    static LaurentInt monomial(const mpz_class& c, long e) {
        LaurentInt p;
        p.set(e, c);
        return p;
    }
    // q^e
    static LaurentInt q(long e = 1) { return monomial(1, e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    // Extremal exponents; only meaningful on nonzero values.
    long min_exp() const;
    long max_exp() const;
    mpz_class coeff(long e) const;
    const mpz_class& lead_coeff() const;
    const std::map<long, mpz_class>& terms() const { return coeffs_; }

    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    LaurentInt operator+(const LaurentInt& o) const;
    LaurentInt operator-(const LaurentInt& o) const;
    LaurentInt operator-() const;
    LaurentInt operator*(const LaurentInt& o) const;
    LaurentInt& operator*=(const LaurentInt& o);
    bool operator==(const LaurentInt& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentInt& o) const { return !(*this == o); }

    // q -> q^{-1}
    LaurentInt bar() const;
    // multiply by q^s
    LaurentInt shifted(long s) const;
    mpz_class eval_at_one() const;

    std::string str() const;

private:
    std::map<long, mpz_class> coeffs_;

    void set(long e, mpz_class c) {
        if (c != 0) coeffs_[e] = std::move(c);
    }
    void add(long e, const mpz_class& c);
    friend LaurentInt exact_div(const LaurentInt&, const LaurentInt&);
    friend class RatFunc;
};

// Balanced q-integer [k]_{q^a} = (q^{ak} - q^{-ak})/(q^a - q^{-a}).
LaurentInt q_int(long k, long a = 1);
// [k]_{q^a}! ; requires k >= 0.
LaurentInt q_factorial(long k, long a = 1);
// Gaussian binomial [m brack k]_{q^a}; requires 0 <= k <= m.
LaurentInt q_binomial(long m, long k, long a = 1);
// {a} = q^a + q^{-a}
LaurentInt q_brace(long a);

// Exact division in Z[q^{+-1}]; throws InternalInconsistency if the quotient
// does not exist or is not integral.
LaurentInt exact_div(const LaurentInt& num, const LaurentInt& den);

// Element of Q(q), stored as num/den with num in Z[q^{+-1}] and den in Z[q]
// with nonzero constant term, gcd-reduced (both polynomial gcd and content
// gcd), and den normalized to positive leading coefficient.  Equality is
// structural.
class RatFunc {
public:
    RatFunc() = default; // 0
    RatFunc(long c) : num_(c) {}
    RatFunc(const mpz_class& c) : num_(c) {}
    RatFunc(const mpq_class& c);
    RatFunc(const LaurentInt& num) : num_(num) {}
    RatFunc(LaurentInt num, LaurentInt den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const LaurentInt& num() const { return num_; }
    const LaurentInt& den() const { return den_; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const;
    RatFunc bar() const;

    // deg at q = infinity; nullopt encodes deg(0) = -infinity.
    std::optional<long> deg() const;
    mpq_class lc() const;
    // lt = lc * q^deg, returned as (lc, deg); (0, 0) for the zero element.
    std::pair<mpq_class, long> lt() const;

    bool in_k_infinity() const; // deg <= 0
    // Constant term of the expansion in q^{-1}.  Requires deg <= 0.
    mpq_class ev_infinity() const;

    std::string str() const;

private:
    LaurentInt num_;
    LaurentInt den_ = LaurentInt(1);

    struct reduced_tag {};
    RatFunc(LaurentInt num, LaurentInt den, reduced_tag)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
};

// a + b*sqrt2 with a, b exact rationals: the value space of ev_infinity on
// Sqrt2Scalar.
struct Sqrt2Rat {
    mpq_class a = 0;
    mpq_class b = 0;

    Sqrt2Rat() = default;
    Sqrt2Rat(mpq_class a_, mpq_class b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    static Sqrt2Rat sqrt2() { return Sqrt2Rat(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const Sqrt2Rat& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Sqrt2Rat& o) const { return !(*this == o); }
    Sqrt2Rat operator+(const Sqrt2Rat& o) const { return {a + o.a, b + o.b}; }
    Sqrt2Rat operator-(const Sqrt2Rat& o) const { return {a - o.a, b - o.b}; }
    Sqrt2Rat operator*(const Sqrt2Rat& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    std::string str() const;
};

// a + b*sqrt2 over RatFunc; (sqrt2)^2 = 2.  This is a field: a^2 - 2 b^2
// never vanishes for (a,b) != (0,0) because sqrt2 is irrational over Q(q).
class Sqrt2Scalar {
public:
    Sqrt2Scalar() = default;
    Sqrt2Scalar(RatFunc a) : a_(std::move(a)) {}
    Sqrt2Scalar(long c) : a_(c) {}
    Sqrt2Scalar(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {}
    static Sqrt2Scalar sqrt2() { return Sqrt2Scalar(RatFunc(0), RatFunc(1)); }

    const RatFunc& rat_part() const { return a_; }
    const RatFunc& sqrt2_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Sqrt2Scalar operator+(const Sqrt2Scalar& o) const { return {a_ + o.a_, b_ + o.b_}; }
    Sqrt2Scalar operator-(const Sqrt2Scalar& o) const { return {a_ - o.a_, b_ - o.b_}; }
    Sqrt2Scalar operator-() const { return {-a_, -b_}; }
    Sqrt2Scalar operator*(const Sqrt2Scalar& o) const {
        return {a_ * o.a_ + RatFunc(2) * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    Sqrt2Scalar inv() const;
    Sqrt2Scalar operator/(const Sqrt2Scalar& o) const { return *this * o.inv(); }
    bool operator==(const Sqrt2Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Sqrt2Scalar& o) const { return !(*this == o); }

    Sqrt2Scalar bar() const { return {a_.bar(), b_.bar()}; }

    // No cancellation can occur between the rational and sqrt2 components,
    // so deg = max of the component degrees.
    std::optional<long> deg() const;
    bool in_k_infinity() const;
    Sqrt2Rat ev_infinity() const;

    std::string str() const;

private:
    RatFunc a_;
    RatFunc b_;
};

} // namespace qcrystal
