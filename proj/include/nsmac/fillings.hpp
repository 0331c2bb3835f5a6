#pragma once

// Fillings of column diagrams: enumeration with backward-looking pruning,
// the maj/inv/coinv statistics family, and the rotation transport map.

#include "nsmac/shapes.hpp"

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace nsmac {

// Per-shape precomputation shared by enumeration and statistics.  Boxes are
// listed in reading order; `values` vectors used throughout are indexed the
// same way.
struct DiagramInfo {
    Composition mu;
    int n = 0;                       // columns = alphabet size for E_mu
    std::vector<Box> boxes;          // dg'(mu) in reading order
    std::vector<int> arm;            // a(u)
    std::vector<int> leg;            // l(u)
    std::vector<int> below;          // index of the box directly below, -1 if basement
    std::vector<std::vector<int>> attackers;  // earlier boxes attacking each box
    long long arm_sum = 0;           // sum of a(u) over dg'
    int weak_order_pairs = 0;        // |{i<j : mu_i <= mu_j}|

    int box_index(const Box& u) const;  // -1 when absent
};

DiagramInfo make_diagram(const Composition& mu);

// A filling of dg'(mu); values are stored in reading order of the boxes.
struct Filling {
    Composition mu;
    std::vector<int> values;
};

// Statistics of the basement-augmented filling.  inv_pairs counts the
// attacking inversion pairs of the augmented diagram before the corrective
// subtraction that defines inv.
struct AugmentedStats {
    std::vector<Box> descents;
    long long maj = 0;
    long long inv_pairs = 0;
    long long inv = 0;
    long long coinv = 0;
    long long maj_prime = 0;
    long long coinv_prime = 0;
};

AugmentedStats augmented_stats(const DiagramInfo& d, const std::vector<int>& values);
// Same statistics with an explicit basement row (basement[i] is the value
// of cell (i+1, 0)); the standard basement is 1..n.
AugmentedStats augmented_stats(const DiagramInfo& d, const std::vector<int>& values,
                               const std::vector<int>& basement);

// Statistics of the bare (unaugmented) filling: descents and attacking
// pairs within dg'(mu) only.
struct PlainStats {
    long long maj = 0;
    long long inv = 0;
};

PlainStats plain_stats(const DiagramInfo& d, const std::vector<int>& values);

bool is_non_attacking(const DiagramInfo& d, const std::vector<int>& values);
// Augmented rule: additionally no conflict with the basement.
bool is_non_attacking_augmented(const DiagramInfo& d, const std::vector<int>& values);

long long count_inversion_triples(const DiagramInfo& d, const std::vector<int>& values);
long long count_coinversion_triples(const DiagramInfo& d, const std::vector<int>& values);

using FillingFn = std::function<void(const std::vector<int>&)>;

// All functions yield fillings in lexicographic order of the reading-order
// value string; pruning only ever inspects already-assigned boxes.

// Every filling with values in 1..alphabet.
void for_each_filling(const DiagramInfo& d, int alphabet, const FillingFn& fn);
// Non-attacking within dg'(mu), values in 1..alphabet.
void for_each_unaugmented_non_attacking(const DiagramInfo& d, int alphabet,
                                        const FillingFn& fn);
// Non-attacking including the basement; values in 1..n.  When first_value
// is nonzero, only fillings whose first reading-order box carries that
// value are produced (used to partition work across threads).
void for_each_non_attacking(const DiagramInfo& d, const FillingFn& fn,
                            int first_value = 0);

// Closed-form count; exact for every shape, no enumeration involved.
mpz_class count_non_attacking(const Composition& mu);

// Transport along the rotation: boxes through pi_box, values through
// pi_value.  Requires a non-attacking filling.
Filling pi_transport(const Filling& f);

AugmentedStats augmented_stats(const Filling& f);
bool is_non_attacking(const Filling& f);

}  // namespace nsmac
