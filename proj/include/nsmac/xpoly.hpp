#pragma once

// Laurent polynomials in x_1..x_n with QTRational coefficients.

#include "nsmac/qt.hpp"

#include <functional>
#include <map>
#include <vector>

namespace nsmac {

// Exponent vector of a monomial in x_1..x_n; entries may be negative.
using XMonomial = std::vector<int>;

class XPolynomial {
public:
    explicit XPolynomial(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative variable count");
    }

    static XPolynomial constant(int n, QTRational c);
    static XPolynomial monomial(int n, XMonomial e, QTRational c = QTRational(1));
    static XPolynomial variable(int n, int i);  // x_i, 1-based

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<XMonomial, QTRational>& terms() const { return terms_; }

    // Coefficient of x^e (zero when absent).
    QTRational coeff(const XMonomial& e) const;

    // Accumulate c * x^e, dropping the term if it cancels.
    void add_term(const XMonomial& e, const QTRational& c);

    XPolynomial operator-() const;
    XPolynomial& operator+=(const XPolynomial& o);
    XPolynomial& operator-=(const XPolynomial& o);
    friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { a += b; return a; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { a -= b; return a; }
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
    XPolynomial& operator*=(const XPolynomial& o) { *this = *this * o; return *this; }
    XPolynomial operator*(const QTRational& c) const;
    XPolynomial operator/(const QTRational& c) const;
    bool operator==(const XPolynomial&) const = default;

    // Apply a map to every coefficient, dropping zero results.
    XPolynomial map_coeffs(const std::function<QTRational(const QTRational&)>& f) const;

    // Simultaneous substitution x_i -> images[i-1].coeff * x^images[i-1].mono.
    // Image coefficients must be invertible when the source exponent can be
    // negative; this is checked lazily by QTRational::inverse.
    struct Image {
        QTRational coeff;
        XMonomial mono;
    };
    XPolynomial substitute(const std::vector<Image>& images) const;

    // Exchange the exponents of x_i and x_j (1-based).
    XPolynomial swap_vars(int i, int j) const;

    // Invariance under every adjacent transposition.
    bool is_symmetric() const;

    // q -> 1/q, t -> 1/t on every coefficient.
    XPolynomial invert_params() const;

    // Keep only terms supported on x_1..x_m and shrink to m variables.
    XPolynomial truncate_vars(int m) const;

private:
    int n_ = 0;
    std::map<XMonomial, QTRational> terms_;
};

inline XPolynomial operator*(const QTRational& c, const XPolynomial& f) { return f * c; }

XPolynomial qt_invert_params(const XPolynomial& f);

}  // namespace nsmac
