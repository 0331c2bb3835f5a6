#pragma once

// Non-symmetric Macdonald polynomials from the non-attacking filling
// formula, plus the integral, inverted-parameter, and key specializations.

#include "nsmac/fillings.hpp"
#include "nsmac/xpoly.hpp"

namespace nsmac {

// checked recomputes every polynomial through its second, independent
// route and throws std::logic_error on any mismatch; fast runs only the
// primary route.
enum class Mode { fast, checked };

// E_mu(x; q, t) = sum over non-attacking fillings of
// x^sigma q^maj t^coinv prod (1-t)/(1-q^{l+1} t^{a+1}), the product over
// boxes whose value differs from the one below.  jobs > 1 splits the
// enumeration by the value of the first reading-order box.
XPolynomial E_combinatorial(const Composition& mu, int jobs = 1);

// prod over dg'(mu) of (1 - q^{l(u)+1} t^{a(u)+1}).
QTPoly hook_product(const Composition& mu);

// Integral form: coefficients lie in Z[q,t].  Primary route sums
// x^sigma q^maj t^coinv prod_{equal}(1-q^{l+1}t^{a+1}) prod_{diff}(1-t);
// the check multiplies E_combinatorial by the hook product.
XPolynomial E_integral(const Composition& mu, Mode mode = Mode::checked, int jobs = 1);

// E_mu(x; 1/q, 1/t).  Primary route uses the complementary statistics
// maj' and coinv'; the check inverts the parameters of E_combinatorial.
XPolynomial E_inverted(const Composition& mu, Mode mode = Mode::checked, int jobs = 1);

// q,t -> infinity specialization: the fillings with maj' = coinv' = 0,
// each contributing x^sigma.
XPolynomial key_polynomial(const Composition& mu);

// With mu_i = r - nu_{n+1-i}: E_mu(x) = (x_1...x_n)^r E_nu(1/x_n,...,1/x_1).
// Returns whether the identity holds for the two computed sides.
bool check_complement_identity(const Composition& nu, int r);

}  // namespace nsmac
