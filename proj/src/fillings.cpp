#include "nsmac/fillings.hpp"

#include <numeric>
#include <stdexcept>

namespace nsmac {

int DiagramInfo::box_index(const Box& u) const {
    for (size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i] == u) return static_cast<int>(i);
    return -1;
}

DiagramInfo make_diagram(const Composition& mu) {
    DiagramInfo d;
    d.mu = mu;
    d.n = mu.n();
    d.boxes = column_diagram(mu);
    const int b = static_cast<int>(d.boxes.size());
    d.arm.resize(b);
    d.leg.resize(b);
    d.below.resize(b);
    d.attackers.resize(b);
    for (int i = 0; i < b; ++i) {
        d.arm[i] = arm_length(mu, d.boxes[i]);
        d.leg[i] = leg_length(mu, d.boxes[i]);
        d.arm_sum += d.arm[i];
        d.below[i] =
            d.boxes[i].row >= 2 ? d.box_index(Box{d.boxes[i].col, d.boxes[i].row - 1}) : -1;
        for (int j = 0; j < i; ++j)
            if (attacks(d.boxes[j], d.boxes[i])) d.attackers[i].push_back(j);
    }
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            if (mu[i] <= mu[j]) ++d.weak_order_pairs;
    return d;
}

static void check_values(const DiagramInfo& d, const std::vector<int>& values) {
    if (values.size() != d.boxes.size())
        throw std::invalid_argument("filling has wrong number of values");
}

AugmentedStats augmented_stats(const DiagramInfo& d, const std::vector<int>& values) {
    std::vector<int> basement(d.n);
    std::iota(basement.begin(), basement.end(), 1);
    return augmented_stats(d, values, basement);
}

AugmentedStats augmented_stats(const DiagramInfo& d, const std::vector<int>& values,
                               const std::vector<int>& basement) {
    check_values(d, values);
    if (static_cast<int>(basement.size()) != d.n)
        throw std::invalid_argument("basement has wrong length");
    AugmentedStats s;
    const int b = static_cast<int>(d.boxes.size());
    long long nonmatch_legs = 0, nonmatch_arms = 0;
    for (int i = 0; i < b; ++i) {
        int under = d.below[i] >= 0 ? values[d.below[i]] : basement[d.boxes[i].col - 1];
        if (values[i] != under) {
            nonmatch_legs += d.leg[i] + 1;
            nonmatch_arms += d.arm[i];
        }
        if (values[i] > under) {
            s.descents.push_back(d.boxes[i]);
            s.maj += d.leg[i] + 1;
        }
    }
    // Attacking inversion pairs of the augmented diagram, in reading order.
    for (int i = 0; i < b; ++i)
        for (int j : d.attackers[i])
            if (values[j] > values[i]) ++s.inv_pairs;
    for (int i = 0; i < b; ++i) {
        if (d.boxes[i].row != 1) continue;
        // Row-1 boxes read before the basement cells strictly to their right.
        for (int col = d.boxes[i].col + 1; col <= d.n; ++col)
            if (values[i] > basement[col - 1]) ++s.inv_pairs;
    }
    for (int i = 1; i <= d.n; ++i)
        for (int j = i + 1; j <= d.n; ++j)
            if (basement[j - 1] > basement[i - 1]) ++s.inv_pairs;  // (j,0) reads first

    long long descent_arms = 0;
    {
        size_t k = 0;
        for (int i = 0; i < b; ++i)
            if (k < s.descents.size() && d.boxes[i] == s.descents[k]) {
                descent_arms += d.arm[i];
                ++k;
            }
    }
    s.inv = s.inv_pairs - d.weak_order_pairs - descent_arms;
    s.coinv = d.arm_sum - s.inv;
    s.maj_prime = nonmatch_legs - s.maj;
    s.coinv_prime = nonmatch_arms - s.coinv;
    return s;
}

PlainStats plain_stats(const DiagramInfo& d, const std::vector<int>& values) {
    check_values(d, values);
    PlainStats s;
    const int b = static_cast<int>(d.boxes.size());
    long long inv_pairs = 0, descent_arms = 0;
    for (int i = 0; i < b; ++i) {
        if (d.below[i] >= 0 && values[i] > values[d.below[i]]) {
            s.maj += d.leg[i] + 1;
            descent_arms += d.arm[i];
        }
        for (int j : d.attackers[i])
            if (values[j] > values[i]) ++inv_pairs;
    }
    s.inv = inv_pairs - descent_arms;
    return s;
}

bool is_non_attacking(const DiagramInfo& d, const std::vector<int>& values) {
    check_values(d, values);
    for (size_t i = 0; i < values.size(); ++i)
        for (int j : d.attackers[i])
            if (values[j] == values[i]) return false;
    return true;
}

bool is_non_attacking_augmented(const DiagramInfo& d, const std::vector<int>& values) {
    if (!is_non_attacking(d, values)) return false;
    for (size_t i = 0; i < values.size(); ++i)
        if (d.boxes[i].row == 1 && values[i] > d.boxes[i].col) return false;
    return true;
}

// sigma-hat value of an augmented-diagram cell.
static int aug_value(const DiagramInfo& d, const std::vector<int>& values, const Box& u) {
    if (u.row == 0) return u.col;
    int idx = d.box_index(u);
    if (idx < 0) throw std::logic_error("triple cell outside diagram");
    return values[idx];
}

static void count_triples(const DiagramInfo& d, const std::vector<int>& values,
                          long long& inversions, long long& coinversions) {
    inversions = coinversions = 0;
    for (const Triple& tr : enumerate_triples(d.mu)) {
        int vu = aug_value(d, values, tr.u);
        int vv = aug_value(d, values, tr.v);
        int vw = aug_value(d, values, tr.w);
        int chi = (vu > vv ? 1 : 0) + (vv > vw ? 1 : 0) - (vu > vw ? 1 : 0);
        if (chi == 1) ++inversions;
        else ++coinversions;
    }
}

long long count_inversion_triples(const DiagramInfo& d, const std::vector<int>& values) {
    long long inv = 0, coinv = 0;
    count_triples(d, values, inv, coinv);
    return inv;
}

long long count_coinversion_triples(const DiagramInfo& d, const std::vector<int>& values) {
    long long inv = 0, coinv = 0;
    count_triples(d, values, inv, coinv);
    return coinv;
}

// ---------------------------------------------------------------------------
// Enumeration.  Boxes are filled in reading order; every attacking
// constraint looks only at earlier boxes (same-row partners to the right
// and upper-row partners are both earlier), so candidate pruning is exact.

namespace {

void enumerate(const DiagramInfo& d, int alphabet, bool non_attacking, bool augmented,
               int first_value, const FillingFn& fn) {
    const int b = static_cast<int>(d.boxes.size());
    std::vector<int> vals(b, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == b) {
            fn(vals);
            return;
        }
        int lo = 1, hi = alphabet;
        if (i == 0 && first_value != 0) lo = hi = first_value;
        for (int v = lo; v <= hi; ++v) {
            if (non_attacking) {
                if (augmented && d.boxes[i].row == 1 && v > d.boxes[i].col) continue;
                bool ok = true;
                for (int j : d.attackers[i])
                    if (vals[j] == v) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            vals[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

void for_each_filling(const DiagramInfo& d, int alphabet, const FillingFn& fn) {
    enumerate(d, alphabet, false, false, 0, fn);
}

void for_each_unaugmented_non_attacking(const DiagramInfo& d, int alphabet,
                                        const FillingFn& fn) {
    enumerate(d, alphabet, true, false, 0, fn);
}

void for_each_non_attacking(const DiagramInfo& d, const FillingFn& fn, int first_value) {
    enumerate(d, d.n, true, true, first_value, fn);
}

mpz_class count_non_attacking(const Composition& mu) {
    // Place values bottom row first, left to right.  The already-placed
    // attackers of a box (same-row boxes to its left, row-below boxes to
    // its right, basement included) attack each other pairwise, so they
    // carry distinct values and the box has a fixed number of choices no
    // matter what was placed before it.
    const int n = mu.n();
    mpz_class count = 1;
    for (int i = 1; i <= n; ++i) {
        for (int r = 1; r <= mu.parts[i - 1]; ++r) {
            int left = 0;
            for (int j = 1; j < i; ++j) left += mu.parts[j - 1] >= r;
            int below_right = 0;
            for (int j = i + 1; j <= n; ++j)
                below_right += r == 1 || mu.parts[j - 1] >= r - 1;
            count *= n - left - below_right;
        }
    }
    return count;
}

Filling pi_transport(const Filling& f) {
    DiagramInfo d = make_diagram(f.mu);
    if (!is_non_attacking_augmented(d, f.values))
        throw std::invalid_argument("pi_transport requires a non-attacking filling");
    Composition nmu = pi_shift(f.mu);
    DiagramInfo nd = make_diagram(nmu);
    std::vector<int> nvals(nd.boxes.size(), 0);
    // The basement cell (n,0) rotates into the new box (1,1) with value 1.
    nvals[nd.box_index(Box{1, 1})] = 1;
    for (size_t i = 0; i < d.boxes.size(); ++i) {
        Box nu = pi_box(d.n, d.boxes[i]);
        nvals[nd.box_index(nu)] = pi_value(d.n, f.values[i]);
    }
    return Filling{nmu, std::move(nvals)};
}

AugmentedStats augmented_stats(const Filling& f) {
    DiagramInfo d = make_diagram(f.mu);
    return augmented_stats(d, f.values);
}

bool is_non_attacking(const Filling& f) {
    DiagramInfo d = make_diagram(f.mu);
    return is_non_attacking_augmented(d, f.values);
}

}  // namespace nsmac
