#include "nsmac/shapes.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

using namespace nsmac;

namespace {

// All compositions with n parts summing to at most max_sum.
std::vector<Composition> compositions_up_to(int n, int max_sum) {
    std::vector<Composition> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, max_sum);
    return out;
}

std::pair<Box, Box> ordered_pair(Box a, Box b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

}  // namespace

TEST_CASE("composition parse and str") {
    Composition mu = Composition::parse("2,1,3,0,0,2");
    CHECK(mu.parts == std::vector<int>{2, 1, 3, 0, 0, 2});
    CHECK(mu.str() == "2,1,3,0,0,2");
    CHECK(mu.sum() == 8);
    CHECK(Composition::parse(" 1 , 0 ").parts == std::vector<int>{1, 0});

    CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,2x"), std::invalid_argument);
}

TEST_CASE("reading order and diagram membership") {
    Composition mu = Composition::parse("2,1,3,0,0,2");
    std::vector<Box> expected = {{3, 3}, {6, 2}, {3, 2}, {1, 2},
                                 {6, 1}, {3, 1}, {2, 1}, {1, 1}};
    CHECK(column_diagram(mu) == expected);
    CHECK(augmented_diagram(mu).size() == 14);
    CHECK(std::is_sorted(expected.begin(), expected.end(), reading_less));

    Composition zeros = Composition::parse("0,0,0");
    CHECK(column_diagram(zeros).empty());
    CHECK(augmented_diagram(zeros).size() == 3);

    CHECK(in_column_diagram(mu, {3, 3}));
    CHECK(!in_column_diagram(mu, {4, 1}));
    CHECK(!in_column_diagram(mu, {1, 0}));
    CHECK(in_augmented_diagram(mu, {4, 0}));
    CHECK(!in_augmented_diagram(mu, {7, 0}));
}

TEST_CASE("arm and leg boxes on a ragged shape") {
    Composition mu = Composition::parse("3,1,2,4,3,0,4,2,3");
    Box u{5, 2};
    CHECK(leg_length(mu, u) == 1);
    CHECK(arm_length(mu, u) == 3);
    CHECK(leg_boxes(mu, u) == std::vector<Box>{{5, 3}});
    CHECK(arm_left_boxes(mu, u) == std::vector<Box>{{1, 2}, {3, 2}});
    CHECK(arm_right_boxes(mu, u) == std::vector<Box>{{8, 1}});

    CHECK_THROWS_AS(leg_length(mu, Box{6, 1}), std::invalid_argument);
    CHECK_THROWS_AS(arm_length(mu, Box{1, 4}), std::invalid_argument);
}

TEST_CASE("arm lengths across a whole diagram") {
    Composition mu = Composition::parse("2,1,3,0,0,2");
    std::map<std::pair<int, int>, int> arms = {
        {{1, 1}, 3}, {{2, 1}, 2}, {{3, 1}, 5}, {{6, 1}, 2},
        {{1, 2}, 1}, {{3, 2}, 2}, {{6, 2}, 1}, {{3, 3}, 1},
    };
    std::map<std::pair<int, int>, int> legs = {
        {{1, 1}, 1}, {{2, 1}, 0}, {{3, 1}, 2}, {{6, 1}, 1},
        {{1, 2}, 0}, {{3, 2}, 1}, {{6, 2}, 0}, {{3, 3}, 0},
    };
    for (const Box& u : column_diagram(mu)) {
        CHECK(arm_length(mu, u) == arms.at({u.col, u.row}));
        CHECK(leg_length(mu, u) == legs.at({u.col, u.row}));
    }
}

TEST_CASE("attack relation") {
    CHECK(attacks({1, 2}, {4, 2}));
    CHECK(attacks({1, 2}, {3, 1}));
    CHECK(attacks({3, 1}, {1, 2}));
    CHECK(!attacks({3, 2}, {1, 1}));
    CHECK(!attacks({1, 2}, {1, 1}));
    CHECK(!attacks({1, 3}, {2, 1}));
    CHECK(!attacks({2, 2}, {2, 2}));
}

TEST_CASE("triples of the running example") {
    Composition mu = Composition::parse("2,1,3,0,0,2");
    std::vector<Triple> ts = enumerate_triples(mu);
    CHECK(ts.size() == 17);

    long long type1 = 0, type2 = 0, arm_total = 0;
    for (const Triple& t : ts) {
        (t.kind == Triple::Kind::I ? type1 : type2) += 1;
        CHECK(t.w.col == t.u.col);
        CHECK(t.w.row == t.u.row - 1);
        CHECK(reading_less(t.u, t.v));
        CHECK(reading_less(t.v, t.w));
    }
    for (const Box& u : column_diagram(mu)) arm_total += arm_length(mu, u);
    CHECK(arm_total == 17);
    CHECK(type1 == 11);
    CHECK(type2 == 6);
}

TEST_CASE("attacking pairs decompose into triples") {
    // Every attacking pair of the augmented diagram shows up exactly once as
    // {u,v} or {v,w} of a triple, except the basement pairs whose columns sit
    // in weakly increasing order.
    for (const Composition& mu : compositions_up_to(4, 4)) {
        std::map<std::pair<Box, Box>, int> cover;
        for (const Triple& t : enumerate_triples(mu)) {
            cover[ordered_pair(t.u, t.v)] += 1;
            cover[ordered_pair(t.v, t.w)] += 1;
        }

        std::vector<Box> aug = augmented_diagram(mu);
        std::map<std::pair<Box, Box>, int> expected;
        for (size_t i = 0; i < aug.size(); ++i)
            for (size_t j = i + 1; j < aug.size(); ++j) {
                const Box &a = aug[i], &b = aug[j];
                if (!attacks(a, b)) continue;
                if (a.row == 0 && b.row == 0) {
                    int lo = std::min(a.col, b.col), hi = std::max(a.col, b.col);
                    if (mu[lo - 1] <= mu[hi - 1]) continue;
                }
                expected[ordered_pair(a, b)] = 1;
            }
        CHECK(cover == expected);
    }
}

TEST_CASE("rotation preserves arms and legs") {
    for (const Composition& mu : compositions_up_to(3, 3)) {
        Composition shifted = pi_shift(mu);
        int n = mu.n();
        for (const Box& u : column_diagram(mu)) {
            Box pu = pi_box(n, u);
            CHECK(in_column_diagram(shifted, pu));
            CHECK(leg_length(shifted, pu) == leg_length(mu, u));
            CHECK(arm_length(shifted, pu) == arm_length(mu, u));

            std::vector<Box> mapped;
            for (const Box& v : arm_boxes(mu, u)) mapped.push_back(pi_box(n, v));
            std::sort(mapped.begin(), mapped.end());
            std::vector<Box> direct = arm_boxes(shifted, pu);
            std::sort(direct.begin(), direct.end());
            CHECK(mapped == direct);
        }
    }
}

TEST_CASE("bruhat order") {
    Composition a = Composition::parse("1,1");
    Composition b = Composition::parse("2,0");
    Composition c = Composition::parse("0,2");
    CHECK(bruhat_leq(a, b));
    CHECK(bruhat_leq(b, c));
    CHECK(bruhat_leq(a, c));
    CHECK(!bruhat_leq(b, a));
    CHECK(!bruhat_leq(c, a));
    CHECK(bruhat_leq(a, a));
    CHECK(!bruhat_leq(Composition::parse("1,0"), b));
    CHECK_THROWS_AS(bruhat_leq(Composition::parse("1,1,0"), b), std::invalid_argument);

    // Swapping a strictly decreasing pair moves down; the straightened
    // partition-ordered composition is minimal in its orbit.
    CHECK(bruhat_leq(Composition::parse("2,1,0"), Composition::parse("0,1,2")));
    CHECK(bruhat_leq(Composition::parse("2,1,0"), Composition::parse("1,2,0")));
    CHECK(!bruhat_leq(Composition::parse("0,1,2"), Composition::parse("2,1,0")));
}

TEST_CASE("rotation maps") {
    Composition mu = Composition::parse("2,1,3");
    CHECK(pi_shift(mu) == Composition::parse("4,2,1"));
    CHECK(pi_inverse(pi_shift(mu)) == mu);
    CHECK_THROWS_AS(pi_inverse(Composition::parse("0,1")), std::invalid_argument);

    CHECK(s_i(mu, 1) == Composition::parse("1,2,3"));
    CHECK(s_i(mu, 2) == Composition::parse("2,3,1"));
    CHECK_THROWS_AS(s_i(mu, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_i(mu, 0), std::invalid_argument);

    CHECK(pi_box(3, Box{1, 2}) == Box{2, 2});
    CHECK(pi_box(3, Box{3, 2}) == Box{1, 3});
    CHECK(pi_value(3, 1) == 2);
    CHECK(pi_value(3, 3) == 1);
    CHECK_THROWS_AS(pi_value(3, 4), std::invalid_argument);
}
