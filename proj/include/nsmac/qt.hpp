#pragma once

// Exact coefficient arithmetic: sparse integer polynomials in q,t and the
// field of rational functions they generate.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace nsmac {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent pair of a monomial q^eq * t^et.  Ordered lexicographically with
// q taking priority over t.
struct QTExp {
    int eq = 0;
    int et = 0;
    auto operator<=>(const QTExp&) const = default;
};

// Sparse polynomial in q and t with arbitrary-precision integer
// coefficients.  Exponents are never negative; inverted parameters live at
// the fraction level (QTRational).  The term map stores no zero
// coefficients, so equality is map equality.
class QTPoly {
public:
    QTPoly() = default;
    QTPoly(long value) { add_term(Int(value), 0, 0); }
    explicit QTPoly(const Int& value) { add_term(value, 0, 0); }

    static QTPoly monomial(const Int& coeff, int eq, int et);
    static QTPoly q(int power = 1) { return monomial(1, power, 0); }
    static QTPoly t(int power = 1) { return monomial(1, 0, power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const std::map<QTExp, Int>& terms() const { return terms_; }

    int degree_q() const;  // -1 for the zero polynomial
    int degree_t() const;

    // Coefficient of the lexicographically largest exponent pair.
    // Requires a nonzero polynomial.
    const Int& leading_coeff() const;

    // Accumulate coeff * q^eq * t^et, dropping the term if it cancels.
    void add_term(const Int& coeff, int eq, int et);

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { a += b; return a; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { a -= b; return a; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    QTPoly& operator*=(const QTPoly& o) { *this = *this * o; return *this; }
    bool operator==(const QTPoly&) const = default;

    // Substitute q -> t^k (k >= 0); the result is univariate in t.
    QTPoly substitute_q_to_tk(int k) const;

    // Exact evaluation at a rational point.
    Rat evaluate(const Rat& q0, const Rat& t0) const;

    // Polynomial gcd including integer content, normalized so the
    // lexicographically leading coefficient is positive.
    static QTPoly gcd(const QTPoly& a, const QTPoly& b);

    // Quotient when divisor divides exactly; throws std::logic_error
    // otherwise (exactness is an internal guarantee where this is used).
    QTPoly divide_exact(const QTPoly& divisor) const;
    std::optional<QTPoly> divide_if_exact(const QTPoly& divisor) const;

    // Terms in ascending lex order, e.g. "1-q*t^2".
    std::string str() const;

private:
    std::map<QTExp, Int> terms_;
};

// Convenience: the hook-style binomial 1 - q^eq * t^et.
QTPoly one_minus(int eq, int et);

// Reduced fraction of two QTPoly.  Canonical form: gcd(num, den) = 1
// (including integer content) and the coefficient of the lexicographically
// smallest term of the denominator is positive, so hook denominators keep
// their 1 - q^a t^b shape.  Zero is 0/1.
class QTRational {
public:
    QTRational() : num_(), den_(1) {}
    QTRational(long value) : num_(value), den_(1) {}
    QTRational(QTPoly p) : num_(std::move(p)), den_(1) {}
    QTRational(QTPoly num, QTPoly den);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); }

    QTRational operator-() const;
    QTRational inverse() const;  // throws std::domain_error on zero

    QTRational& operator+=(const QTRational& o);
    QTRational& operator-=(const QTRational& o);
    QTRational& operator*=(const QTRational& o);
    QTRational& operator/=(const QTRational& o);
    friend QTRational operator+(QTRational a, const QTRational& b) { a += b; return a; }
    friend QTRational operator-(QTRational a, const QTRational& b) { a -= b; return a; }
    friend QTRational operator*(QTRational a, const QTRational& b) { a *= b; return a; }
    friend QTRational operator/(QTRational a, const QTRational& b) { a /= b; return a; }
    bool operator==(const QTRational&) const = default;

    // Exact evaluation; throws std::domain_error when the denominator
    // vanishes at the point.
    Rat evaluate(const Rat& q0, const Rat& t0) const;

    // q -> 1/q, t -> 1/t, recanonicalized.  An involution.
    QTRational invert_params() const;

    std::string str() const;

private:
    void normalize();
    QTPoly num_, den_;
};

QTRational pow(const QTRational& base, long e);

}  // namespace nsmac
