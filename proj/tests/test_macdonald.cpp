#include "nsmac/macdonald.hpp"

#include "nsmac/parse.hpp"
#include "nsmac/verify.hpp"

#include "doctest.h"

using namespace nsmac;

TEST_CASE("small polynomials against the frozen table") {
    auto E = [](const char* mu) { return E_combinatorial(Composition::parse(mu)); };

    CHECK(E("0,0,0") == XPolynomial::constant(3, QTRational(1)));
    CHECK(E("1,0,0") == XPolynomial::variable(3, 1));
    CHECK(E("0,1,0") == parse_xpoly("x2 + ((1-t)/(1-q*t^2))*x1", 3));
    CHECK(E("0,0,1") == parse_xpoly("x3 + ((1-t)/(1-q*t))*(x1 + x2)", 3));
    CHECK(E("1,1,0") == parse_xpoly("x1*x2", 3));
    CHECK(E("2,0,0") == parse_xpoly("x1^2 + ((q*(1-t))/(1-q*t))*(x1*x2 + x1*x3)", 3));

    // The whole degree <= 2 table in three variables, via the shared suite.
    verify::Options opt;
    for (const verify::CheckResult& r : verify::appendix_table(opt)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("integral form") {
    CHECK(hook_product(Composition::parse("0,1,0")) == one_minus(1, 2));
    CHECK(hook_product(Composition::parse("1,0,0")) == one_minus(1, 3));
    CHECK(hook_product(Composition::parse("0,0,0")) == QTPoly(1));

    CHECK(E_integral(Composition::parse("1,0,0")) ==
          XPolynomial::monomial(3, {1, 0, 0}, QTRational(one_minus(1, 3))));

    XPolynomial expected(3);
    expected.add_term({0, 1, 0}, QTRational(one_minus(1, 2)));
    expected.add_term({1, 0, 0}, QTRational(one_minus(0, 1)));
    CHECK(E_integral(Composition::parse("0,1,0")) == expected);

    for (const char* mu : {"0,1,0", "2,0,0", "0,1,1", "0,0,2"}) {
        Composition c = Composition::parse(mu);
        XPolynomial f = E_integral(c, Mode::checked);
        CHECK(f == E_integral(c, Mode::fast));
        for (const auto& [e, coeff] : f.terms()) CHECK(coeff.is_integral());
    }
}

TEST_CASE("inverted parameters") {
    Composition mu = Composition::parse("0,1,0");
    XPolynomial expected(3);
    expected.add_term({0, 1, 0}, QTRational(1));
    expected.add_term({1, 0, 0},
                      QTRational(one_minus(0, 1), one_minus(1, 2)).invert_params());
    CHECK(E_inverted(mu) == expected);
    CHECK(E_inverted(mu) == qt_invert_params(E_combinatorial(mu)));

    for (const char* text : {"0,0,2", "1,0,1", "2,0,0"}) {
        Composition c = Composition::parse(text);
        CHECK(E_inverted(c, Mode::checked) == E_inverted(c, Mode::fast));
    }
}

TEST_CASE("key polynomials") {
    auto key = [](const char* mu) { return key_polynomial(Composition::parse(mu)); };
    CHECK(key("1,0,0") == parse_xpoly("x1", 3));
    CHECK(key("0,1,0") == parse_xpoly("x2", 3));
    CHECK(key("0,0,1") == parse_xpoly("x3", 3));
    CHECK(key("0,2,0") == parse_xpoly("x2^2 + x2*x3", 3));
    CHECK(key("2,0,0") == parse_xpoly("x1^2 + x1*x2 + x1*x3", 3));
    CHECK(key("0,0,2") == parse_xpoly("x3^2", 3));

    // Every coefficient of a key polynomial is a bare integer.
    for (const char* text : {"0,0,2", "1,2,0"}) {
        XPolynomial k = key(text);
        for (const auto& [e, c] : k.terms()) {
            CHECK(c.is_integral());
            CHECK(c.num().is_constant());
        }
    }
}

TEST_CASE("complement identity") {
    CHECK(check_complement_identity(Composition::parse("0,1,0"), 1));
    CHECK(check_complement_identity(Composition::parse("0,1,0"), 2));
    CHECK(check_complement_identity(Composition::parse("1,0,2"), 2));
    CHECK(check_complement_identity(Composition::parse("2,1"), 3));
    CHECK_THROWS_AS(check_complement_identity(Composition::parse("1,0,2"), 1),
                    std::invalid_argument);
}

TEST_CASE("threaded enumeration agrees with serial") {
    for (const char* text : {"0,2,0", "1,0,1,1"}) {
        Composition mu = Composition::parse(text);
        CHECK(E_combinatorial(mu, 3) == E_combinatorial(mu, 1));
        CHECK(E_integral(mu, Mode::fast, 2) == E_integral(mu, Mode::fast, 1));
    }
}
