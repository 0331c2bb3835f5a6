#include "nsmac/symmetric.hpp"

#include "nsmac/parse.hpp"

#include "doctest.h"

using namespace nsmac;

TEST_CASE("partition basics") {
    Partition lam = Partition::parse("3,1,1");
    CHECK(lam.sum() == 5);
    CHECK(n_lambda(lam) == 3);
    CHECK(increasing_rearrangement(Partition::parse("2,1,0")) ==
          Composition::parse("0,1,2"));

    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);

    CHECK(rearrangements(Partition::parse("2,2,0"), 3).size() == 3);
    CHECK(rearrangements(Partition::parse("1,0"), 1).size() == 1);
    CHECK_THROWS_AS(rearrangements(Partition::parse("1,1"), 1), std::invalid_argument);
}

TEST_CASE("generating sum of all fillings") {
    XPolynomial d11 = D_mu(Composition::parse("1,1"), 2);
    CHECK(d11 == parse_xpoly("x1^2 + x2^2 + (1+t)*x1*x2", 2));

    XPolynomial d2 = D_mu(Composition::parse("2"), 2);
    CHECK(d2 == parse_xpoly("x1^2 + x2^2 + (1+q)*x1*x2", 2));
    CHECK(D_mu(Composition::parse("2,0"), 2) == d2);
    CHECK(D_mu(Composition::parse("0,2"), 2) == d2);
    CHECK(d2.is_symmetric());

    // Specializing q = t = 1 counts all fillings.
    XPolynomial d21 = D_mu(Composition::parse("2,1"), 2);
    Rat total = 0;
    for (const auto& [e, c] : d21.terms()) total += c.evaluate(1, 1);
    CHECK(total == 8);
}

TEST_CASE("integral symmetric form") {
    QTRational one_minus_t(one_minus(0, 1));
    CHECK(J_lambda(Partition::parse("1"), 2) ==
          parse_xpoly("x1 + x2", 2) * one_minus_t);
    CHECK(J_lambda(Partition::parse("1,1"), 2) ==
          parse_xpoly("(1+t)*x1*x2", 2) * one_minus_t * one_minus_t);

    for (const char* text : {"1", "2", "1,1", "2,1"}) {
        Partition lam = Partition::parse(text);
        for (int m = 1; m <= 3; ++m) {
            XPolynomial direct = J_lambda(lam, m);
            CHECK(direct.is_symmetric());
            CHECK(direct ==
                  J_via_stable_limit(lam, increasing_rearrangement(lam), m, Mode::fast));
        }
    }

    CHECK_THROWS_AS(J_via_stable_limit(Partition::parse("2"), Composition::parse("1,1"),
                                       2, Mode::fast),
                    std::invalid_argument);
}

TEST_CASE("monic symmetric polynomials") {
    // lambda = (1) and (1,1) give the elementary symmetric polynomials.
    CHECK(P_lambda_symmetrized(Partition::parse("1,0,0"), Mode::fast) ==
          parse_xpoly("x1 + x2 + x3", 3));
    CHECK(P_lambda_symmetrized(Partition::parse("1,1,0"), Mode::fast) ==
          parse_xpoly("x1*x2 + x1*x3 + x2*x3", 3));

    XPolynomial p2 = P_lambda_symmetrized(Partition::parse("2,0"), Mode::fast);
    CHECK(p2.is_symmetric());
    CHECK(p2.coeff({2, 0}) == QTRational(1));
    QTPoly num = (QTPoly(1) + QTPoly::q()) * one_minus(0, 1);
    CHECK(p2.coeff({1, 1}) == QTRational(num, one_minus(1, 1)));

    for (const char* text : {"2,0", "1,1", "2,1,0"}) {
        Partition lam = Partition::parse(text);
        int m = lam.len();
        XPolynomial sym = P_lambda_symmetrized(lam, Mode::fast);
        for (const Composition& mu : rearrangements(lam, m)) {
            CHECK(P_lambda_truncated(lam, mu, m, Mode::fast) == sym);
        }
        // Swapping q,t for 1/q,1/t fixes P.
        CHECK(qt_invert_params(sym) == sym);
    }

    // More variables than parts works through the truncated route.
    XPolynomial p1 = P_lambda_truncated(Partition::parse("1"), Composition::parse("1"),
                                        3, Mode::fast);
    CHECK(p1 == parse_xpoly("x1 + x2 + x3", 3));
}

TEST_CASE("schur polynomials through the atom decomposition") {
    for (const char* text : {"1,0,0", "2,0,0", "1,1,0", "2,1,0", "2,2,0", "3,1,0"}) {
        Partition lam = Partition::parse(text);
        CHECK(schur_via_keys(lam, 3) == schur_oracle(lam, 3));
    }

    XPolynomial s21 = schur_oracle(Partition::parse("2,1"), 3);
    CHECK(s21.coeff({1, 1, 1}) == QTRational(2));
    CHECK(s21.coeff({2, 1, 0}) == QTRational(1));
    CHECK(s21.coeff({3, 0, 0}).is_zero());
    CHECK(schur_via_keys(Partition::parse("1,1"), 2) == parse_xpoly("x1*x2", 2));
}
