#include "nsmac/xpoly.hpp"

#include "doctest.h"

using namespace nsmac;

TEST_CASE("xpolynomial ring arithmetic") {
    XPolynomial x1 = XPolynomial::variable(3, 1);
    XPolynomial x2 = XPolynomial::variable(3, 2);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    XPolynomial f = x1 * x2;
    f.add_term({1, 1, 0}, QTRational(-1));
    CHECK(f.is_zero());

    XPolynomial g = x1 * QTRational(one_minus(0, 1));
    CHECK(g.coeff({1, 0, 0}) == QTRational(one_minus(0, 1)));
    CHECK(g.coeff({0, 1, 0}).is_zero());
    CHECK(g / QTRational(one_minus(0, 1)) == x1);
}

TEST_CASE("xpolynomial substitution") {
    // x1 -> q x2, x2 -> x1 on x1 x2^2 gives q x1^2 x2.
    XPolynomial f = XPolynomial::monomial(2, {1, 2});
    std::vector<XPolynomial::Image> images = {
        {QTRational(QTPoly::q()), {0, 1}},
        {QTRational(1), {1, 0}},
    };
    CHECK(f.substitute(images) ==
          XPolynomial::monomial(2, {2, 1}, QTRational(QTPoly::q())));
}

TEST_CASE("xpolynomial symmetry helpers") {
    XPolynomial x1 = XPolynomial::variable(2, 1);
    XPolynomial x2 = XPolynomial::variable(2, 2);
    XPolynomial e1 = x1 + x2;
    CHECK(e1.is_symmetric());
    CHECK(e1.swap_vars(1, 2) == e1);
    CHECK(!x1.is_symmetric());
    CHECK(x1.swap_vars(1, 2) == x2);

    XPolynomial h = x1 * QTRational(one_minus(1, 2));
    CHECK(h.invert_params() == x1 * QTRational(one_minus(1, 2)).invert_params());
    CHECK(qt_invert_params(h) == h.invert_params());
}

TEST_CASE("xpolynomial truncation") {
    // x1 x2 + x1 x3 restricted to two variables keeps only x1 x2.
    XPolynomial f(3);
    f.add_term({1, 1, 0}, QTRational(1));
    f.add_term({1, 0, 1}, QTRational(1));
    XPolynomial g = f.truncate_vars(2);
    CHECK(g.vars() == 2);
    CHECK(g == XPolynomial::monomial(2, {1, 1}));
    CHECK(f.truncate_vars(1).is_zero());
}

TEST_CASE("xpolynomial laurent monomials") {
    XPolynomial f = XPolynomial::monomial(2, {-1, 2});
    XPolynomial g = XPolynomial::monomial(2, {1, -2});
    CHECK(f * g == XPolynomial::constant(2, QTRational(1)));
    CHECK(f.coeff({-1, 2}) == QTRational(1));
}

TEST_CASE("xpolynomial map_coeffs drops zeros") {
    XPolynomial f(2);
    f.add_term({1, 0}, QTRational(one_minus(0, 1)));
    f.add_term({0, 1}, QTRational(2));
    XPolynomial g = f.map_coeffs([](const QTRational& c) {
        return c == QTRational(2) ? QTRational(0) : c;
    });
    CHECK(g.terms().size() == 1);
    CHECK(g.coeff({1, 0}) == QTRational(one_minus(0, 1)));
}
