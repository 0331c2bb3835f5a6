#pragma once

// Compositions, column diagrams, arm/leg statistics, attacking pairs,
// reading order, triples, and the Bruhat-style order on compositions.

#include <string>
#include <vector>

namespace nsmac {

// Weak composition: a non-empty vector of non-negative parts.  Part i is
// the height of column i of the diagram.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int n() const { return static_cast<int>(parts.size()); }
    int sum() const;
    int operator[](int i) const { return parts[i]; }  // 0-based

    static Composition parse(const std::string& text);  // "2,1,3,0,0,2"
    std::string str() const;

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

// A cell (col, row) of a diagram: col in 1..n, row >= 0 (row 0 is the
// basement of the augmented diagram).
struct Box {
    int col = 0;
    int row = 0;
    auto operator<=>(const Box&) const = default;
};

// Reading order: top row first, right to left within a row.
bool reading_less(const Box& a, const Box& b);

bool in_column_diagram(const Composition& mu, const Box& u);
bool in_augmented_diagram(const Composition& mu, const Box& u);

// dg'(mu) in reading order.
std::vector<Box> column_diagram(const Composition& mu);
// dg'(mu) plus the basement row, in reading order.
std::vector<Box> augmented_diagram(const Composition& mu);

// Boxes strictly above u in its column.
std::vector<Box> leg_boxes(const Composition& mu, const Box& u);
// Left arm: boxes (i',row) of dg' with i' < col and mu_{i'} <= mu_col.
std::vector<Box> arm_left_boxes(const Composition& mu, const Box& u);
// Right arm: boxes (i',row-1) of the augmented diagram with i' > col and
// mu_{i'} < mu_col.
std::vector<Box> arm_right_boxes(const Composition& mu, const Box& u);
std::vector<Box> arm_boxes(const Composition& mu, const Box& u);

int leg_length(const Composition& mu, const Box& u);  // l(u)
int arm_length(const Composition& mu, const Box& u);  // a(u)

// Two distinct cells attack each other when they share a row, or sit in
// consecutive rows with the lower cell strictly to the right.
bool attacks(const Box& a, const Box& b);

// Triple (u, v, w): w directly below u, v in the arm of u.  Type I when v
// lies in the right arm, type II when v lies in the left arm.  In both
// orientations u < v < w in reading order.
struct Triple {
    enum class Kind { I, II };
    Box u, v, w;
    Kind kind;
};

std::vector<Triple> enumerate_triples(const Composition& mu);

// Bruhat-style order: the reflexive-transitive closure of
//   sigma_ij(lam) < lam           when i < j and lam_i < lam_j,
//   lam + e_i - e_j < sigma_ij(lam) when additionally lam_j - lam_i > 1.
// Compositions with different part sums are incomparable (false).
bool bruhat_leq(const Composition& a, const Composition& b);

// Rotation lam -> (lam_n + 1, lam_1, ..., lam_{n-1}) and its inverse.
Composition pi_shift(const Composition& mu);
Composition pi_inverse(const Composition& mu);
// Exchange parts i and i+1 (1-based i).
Composition s_i(const Composition& mu, int i);

// The corresponding cell map: (i,j) -> (i+1,j) for i < n, (n,j) -> (1,j+1);
// and the value rotation i -> i+1 mod n on the alphabet 1..n.
Box pi_box(int n, const Box& u);
int pi_value(int n, int v);

}  // namespace nsmac
