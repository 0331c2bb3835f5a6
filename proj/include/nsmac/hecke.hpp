#pragma once

// The polynomial representation of the affine Hecke algebra: the
// transpositions s_i (including the affine s_0), the operators T_i, the
// raising operator Psi, and the recurrence that generates E_mu from them.

#include "nsmac/shapes.hpp"
#include "nsmac/xpoly.hpp"

#include <map>

namespace nsmac {

// s_i f exchanges x_i and x_{i+1}; s_0 f substitutes x_1 -> q x_n and
// x_n -> x_1 / q.  Index range: 0..n-1 (i >= 1 needs i < n).
XPolynomial apply_si(const XPolynomial& f, int i);

// T_i f = t s_i f + (t - 1) (f - s_i f) / (1 - x^{alpha_i}), expanded per
// monomial through the telescoping geometric sum, so no rational-function
// division in x ever happens.  x^{alpha_0} = q x_n / x_1.
XPolynomial apply_Ti(const XPolynomial& f, int i);

// Psi f = x_1 * f(x_2, ..., x_n, q^{-1} x_1); on monomials
// Psi x^lam = q^{-lam_n} x^{(lam_n + 1, lam_1, ..., lam_{n-1})}.
XPolynomial apply_Psi(const XPolynomial& f);

// Coefficient c such that E_{s_i mu} = (T_i + c) E_mu when mu_i > mu_{i+1}:
// c = (1 - t) / (1 - q^{l(u)+1} t^{a(u)}) with u = (i, mu_{i+1} + 1).
QTRational intertwiner_coefficient(const Composition& mu, int i);

// Memoized generation of every E_mu by peeling the first column off via
// Psi and sorting zero parts forward via the intertwiners.  Not thread
// safe; use one engine per thread.
class RecurrenceEngine {
public:
    explicit RecurrenceEngine(int n);
    const XPolynomial& E(const Composition& mu);

private:
    int n_;
    std::map<std::vector<int>, XPolynomial> memo_;
};

// One-shot convenience wrapper.
XPolynomial E_recurrence(const Composition& mu);

}  // namespace nsmac
