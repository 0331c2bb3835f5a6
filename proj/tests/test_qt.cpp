#include "nsmac/qt.hpp"

#include "doctest.h"

#include <random>

using namespace nsmac;

namespace {

QTPoly random_qtpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), expo(0, 3), coef(-4, 4);
    QTPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(coef(rng), expo(rng), expo(rng));
    return p;
}

QTRational random_qtrational(std::mt19937& rng) {
    QTPoly den;
    while (den.is_zero()) den = random_qtpoly(rng);
    return QTRational(random_qtpoly(rng), den);
}

}  // namespace

TEST_CASE("qtpoly basic arithmetic and degrees") {
    QTPoly p = one_minus(1, 1);  // 1 - q t
    CHECK(p.degree_q() == 1);
    CHECK(p.degree_t() == 1);
    CHECK(QTPoly().degree_q() == -1);
    CHECK((p * p).str() == "1-2*q*t+q^2*t^2");
    CHECK((p - p).is_zero());
    CHECK((-p).str() == "-1+q*t");

    QTPoly three_t_minus_q;
    three_t_minus_q.add_term(3, 0, 1);
    three_t_minus_q.add_term(-1, 1, 0);
    CHECK(three_t_minus_q.str() == "3*t-q");
    CHECK(one_minus(1, 2).str() == "1-q*t^2");
}

TEST_CASE("qtpoly gcd and exact division") {
    // (1-t)(1-qt)^2 and (1-qt)(1-q^2 t^2) = (1-qt)^2 (1+qt) share (1-qt)^2.
    QTPoly a = one_minus(0, 1) * one_minus(1, 1) * one_minus(1, 1);
    QTPoly b = one_minus(1, 1) * one_minus(2, 2);
    QTPoly g = QTPoly::gcd(a, b);
    CHECK(g == one_minus(1, 1) * one_minus(1, 1));
    CHECK(g.str() == "1-2*q*t+q^2*t^2");

    CHECK(a.divide_exact(g) * g == a);
    CHECK(b.divide_exact(g) == QTPoly(1) + QTPoly::monomial(1, 1, 1));
    CHECK(!one_minus(0, 1).divide_if_exact(one_minus(1, 0)).has_value());
    CHECK(one_minus(2, 2).divide_if_exact(one_minus(1, 1)).has_value());

    // gcd with integer content, normalized to a positive leading coefficient.
    QTPoly six(6), neg_four(-4);
    CHECK(QTPoly::gcd(six, neg_four) == QTPoly(2));
}

TEST_CASE("qtpoly substitution and evaluation") {
    QTPoly p = one_minus(2, 1);  // 1 - q^2 t
    CHECK(p.substitute_q_to_tk(2) == one_minus(0, 5));
    CHECK(p.substitute_q_to_tk(0) == one_minus(0, 1));
    CHECK(p.evaluate(Rat(1, 2), Rat(1, 3)) == Rat(11, 12));
}

TEST_CASE("qtrational canonical form") {
    QTRational r(one_minus(0, 1) * one_minus(1, 1), one_minus(1, 1) * one_minus(1, 2));
    CHECK(r.num() == one_minus(0, 1));
    CHECK(r.den() == one_minus(1, 2));

    // (1-t)/(t-1) reduces to -1 with a trivial denominator.
    QTPoly t_minus_1 = -one_minus(0, 1);
    CHECK(QTRational(one_minus(0, 1), t_minus_1) == QTRational(-1));

    QTRational half(QTPoly(2), QTPoly(-4));
    CHECK(half.num() == QTPoly(-1));
    CHECK(half.den() == QTPoly(2));

    QTRational zero(QTPoly(), one_minus(1, 1));
    CHECK(zero.is_zero());
    CHECK(zero.den().is_one());

    CHECK(QTRational(one_minus(0, 1), one_minus(1, 2)).str() == "(1-t)/(1-q*t^2)");
}

TEST_CASE("qtrational field axioms on random elements") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        QTRational a = random_qtrational(rng);
        QTRational b = random_qtrational(rng);
        QTRational c = random_qtrational(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + (-a) == QTRational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == QTRational(1));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("qtrational evaluation") {
    QTRational r(one_minus(0, 1), one_minus(1, 2));  // (1-t)/(1-q t^2)
    CHECK(r.evaluate(Rat(1, 2), Rat(1, 3)) == Rat(12, 17));
    QTRational pole(QTPoly(1), one_minus(1, 0));  // 1/(1-q)
    CHECK_THROWS_AS(pole.evaluate(Rat(1), Rat(0)), std::domain_error);
    CHECK(QTRational(1).inverse() == QTRational(1));
    CHECK_THROWS_AS(QTRational(0).inverse(), std::domain_error);
}

TEST_CASE("qtrational parameter inversion") {
    QTRational r(one_minus(0, 1), one_minus(1, 2));
    QTRational s = r.invert_params();
    // (1 - 1/t)/(1 - 1/(q t^2)) = (q t - q t^2)/(1 - q t^2).
    QTPoly num, den;
    num.add_term(-1, 1, 1);
    num.add_term(1, 1, 2);
    den.add_term(-1, 0, 0);
    den.add_term(1, 1, 2);
    CHECK(s == QTRational(num, den));
    CHECK(s.str() == "(q*t-q*t^2)/(1-q*t^2)");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        QTRational a = random_qtrational(rng);
        CHECK(a.invert_params().invert_params() == a);
    }
}

TEST_CASE("qtrational power") {
    QTRational r(one_minus(0, 1), one_minus(1, 0));
    CHECK(pow(r, 0) == QTRational(1));
    CHECK(pow(r, 3) == r * r * r);
    CHECK(pow(r, -2) == (r * r).inverse());
}
