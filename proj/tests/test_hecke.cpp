#include "nsmac/hecke.hpp"

#include "nsmac/macdonald.hpp"
#include "nsmac/parse.hpp"

#include "doctest.h"

#include <random>

using namespace nsmac;

namespace {

XPolynomial random_poly(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> nterms(1, 3), expo(-2, 2), coef(-3, 3), qt(0, 2);
    XPolynomial f(n);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        XMonomial e(n);
        for (int& v : e) v = expo(rng);
        QTPoly c;
        c.add_term(coef(rng), qt(rng), qt(rng));
        f.add_term(e, QTRational(c));
    }
    return f;
}

}  // namespace

TEST_CASE("elementary operator values") {
    XPolynomial one = XPolynomial::constant(3, QTRational(1));
    XPolynomial x1 = XPolynomial::variable(3, 1);
    XPolynomial x2 = XPolynomial::variable(3, 2);
    XPolynomial x3 = XPolynomial::variable(3, 3);
    QTRational q(QTPoly::q()), t(QTPoly::t());

    CHECK(apply_Ti(one, 1) == one * t);
    CHECK(apply_Ti(x1, 1) == x2);
    CHECK(apply_Ti(x2, 1) == x1 * t + x2 * (t - QTRational(1)));
    CHECK(apply_Ti(x3, 1) == x3 * t);
    CHECK(apply_Ti(x1, 0) == x3 * (q * t) + x1 * (t - QTRational(1)));

    CHECK(apply_si(x1, 1) == x2);
    CHECK(apply_si(x1, 0) == x3 * q);
    CHECK(apply_si(x3, 0) == x1 / q);
    CHECK(apply_si(x2, 0) == x2);
    CHECK_THROWS_AS(apply_si(x1, 3), std::invalid_argument);

    CHECK(apply_Psi(x3) == XPolynomial::monomial(3, {2, 0, 0}, q.inverse()));
    CHECK(apply_Psi(one) == x1);
}

TEST_CASE("hecke relations on random polynomials") {
    std::mt19937 rng(11);
    QTRational t(QTPoly::t());
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            XPolynomial f = random_poly(rng, n);

            for (int i = 0; i < n; ++i) {
                XPolynomial tif = apply_Ti(f, i);
                CHECK(apply_Ti(tif, i) + tif * (QTRational(1) - t) - f * t ==
                      XPolynomial(n));
            }

            // The affine braid relation needs distinct neighbours, so n >= 3.
            if (n >= 3) {
                for (int i = 0; i < n; ++i) {
                    int j = (i + 1) % n;
                    XPolynomial lhs = apply_Ti(apply_Ti(apply_Ti(f, i), j), i);
                    XPolynomial rhs = apply_Ti(apply_Ti(apply_Ti(f, j), i), j);
                    CHECK(lhs == rhs);
                }
            }

            if (n == 4) {
                for (auto [i, j] : {std::pair{1, 3}, std::pair{0, 2}}) {
                    CHECK(apply_Ti(apply_Ti(f, i), j) == apply_Ti(apply_Ti(f, j), i));
                }
            }
        }
    }
}

TEST_CASE("t-eigenspace consists of the symmetric polynomials") {
    // For i >= 1, T_i f = t f exactly when s_i f = f.
    std::mt19937 rng(23);
    QTRational t(QTPoly::t());
    for (int trial = 0; trial < 10; ++trial) {
        XPolynomial f = random_poly(rng, 3);
        for (int i = 1; i < 3; ++i) {
            XPolynomial g = f + apply_si(f, i);  // symmetric in x_i, x_{i+1}
            CHECK(apply_si(g, i) == g);
            CHECK(apply_Ti(g, i) == g * t);
            if (!(apply_si(f, i) == f)) CHECK(!(apply_Ti(f, i) == f * t));
        }
    }
}

TEST_CASE("intertwiner coefficients") {
    auto c = [](const char* mu, int i) {
        return intertwiner_coefficient(Composition::parse(mu), i);
    };
    CHECK(c("1,0", 1) == QTRational(one_minus(0, 1), one_minus(1, 1)));
    CHECK(c("2,0,0", 1) == QTRational(one_minus(0, 1), one_minus(2, 2)));
    CHECK(c("1,1,0", 2) == QTRational(one_minus(0, 1), one_minus(1, 2)));

    CHECK_THROWS_AS(c("1,1", 1), std::invalid_argument);
    CHECK_THROWS_AS(c("0,1", 1), std::invalid_argument);
    CHECK_THROWS_AS(c("1,0", 2), std::invalid_argument);
}

TEST_CASE("recurrence engine reproduces small polynomials") {
    CHECK(E_recurrence(Composition::parse("0,0,0")) ==
          XPolynomial::constant(3, QTRational(1)));
    CHECK(E_recurrence(Composition::parse("1,0,0")) == XPolynomial::variable(3, 1));
    CHECK(E_recurrence(Composition::parse("0,1,0")) ==
          parse_xpoly("x2 + ((1-t)/(1-q*t^2))*x1", 3));
    CHECK(E_recurrence(Composition::parse("0,0,1")) ==
          parse_xpoly("x3 + ((1-t)/(1-q*t))*(x1 + x2)", 3));

    RecurrenceEngine engine(3);
    CHECK(engine.E(Composition::parse("0,2,0")) ==
          E_combinatorial(Composition::parse("0,2,0")));
    CHECK_THROWS_AS(engine.E(Composition::parse("1,0")), std::invalid_argument);
}

TEST_CASE("rotation identity for the recurrence") {
    // E_{pi(mu)} = q^{mu_n} Psi E_mu on a couple of shapes.
    for (const char* text : {"0,1,0", "1,1,0", "0,0,2"}) {
        Composition mu = Composition::parse(text);
        XPolynomial lhs = E_recurrence(pi_shift(mu));
        XPolynomial rhs =
            apply_Psi(E_recurrence(mu)) * QTRational(QTPoly::q(mu[mu.n() - 1]));
        CHECK(lhs == rhs);
    }
}
