#pragma once

// The symmetric families reachable from the non-symmetric polynomials:
// the modified Macdonald generating sum D_mu, the integral form J_lambda,
// the monic symmetric P_lambda by two routes, and Schur polynomials via
// key polynomials.

#include "nsmac/macdonald.hpp"

namespace nsmac {

// Partition: weakly decreasing parts (trailing zeros allowed).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int len() const { return static_cast<int>(parts.size()); }
    int sum() const;
    static Partition parse(const std::string& text);
    std::string str() const;
    bool operator==(const Partition&) const = default;
};

// n(lambda) = sum (i-1) lambda_i.
int n_lambda(const Partition& lam);

// Distinct rearrangements of lambda padded with zeros to length n.
std::vector<Composition> rearrangements(const Partition& lam, int n);
// lambda sorted weakly increasing, as a composition.
Composition increasing_rearrangement(const Partition& lam);

// Generating sum over ALL fillings of dg'(mu) with values in 1..m of
// x^sigma q^maj t^inv (plain statistics, no basement).  Independent of the
// rearrangement of mu; equals the modified Macdonald polynomial of
// sort(mu) in m variables.
XPolynomial D_mu(const Composition& mu, int m);

// Integral form J_lambda(x_1..x_m; q, t): sum over non-attacking
// unaugmented fillings of dg'(lambda) of x^sigma q^maj t^{n(lambda)-inv}
// times (1-q^{l+1}t^{a+1}) over boxes matching the value below and (1-t)
// over the rest (bottom-row boxes included).
XPolynomial J_lambda(const Partition& lam, int m);

// The same polynomial as the stable limit: E_integral((0^m; mu)) with the
// variables x_{m+1}.. set to zero.  mu may be any rearrangement of lambda.
XPolynomial J_via_stable_limit(const Partition& lam, const Composition& mu, int m,
                               Mode mode = Mode::checked);

// P_lambda(x_1..x_m) from the zero-padded non-symmetric polynomial:
//   prod_{dg'(mu)} (1-q^{l+1}t^{a+1}) / prod_{dg'(lam inc)} (1-q^l t^{a+1})
// times E_{(0^m;mu)} truncated to x_1..x_m.
XPolynomial P_lambda_truncated(const Partition& lam, const Composition& mu, int m,
                               Mode mode = Mode::checked);

// P_lambda(x_1..x_n), n = len(lambda), as the Hecke-symmetrized sum
//   prod_{dg'(lam inc)} (1-q^{l+1}t^a) *
//   sum over rearrangements mu of E_mu(x;1/q,1/t) / prod_{dg'(mu)} (1-q^{l+1}t^a).
XPolynomial P_lambda_symmetrized(const Partition& lam, Mode mode = Mode::checked);

// Schur polynomial s_lambda(x_1..x_n) as the sum of the key polynomials of
// all rearrangements, and independently from semistandard tableaux.
XPolynomial schur_via_keys(const Partition& lam, int n);
XPolynomial schur_oracle(const Partition& lam, int n);

}  // namespace nsmac
