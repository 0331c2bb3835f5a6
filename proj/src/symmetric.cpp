#include "nsmac/symmetric.hpp"

#include "nsmac/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsmac {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("empty partition");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

Partition Partition::parse(const std::string& text) {
    return Partition(Composition::parse(text).parts);
}

std::string Partition::str() const { return Composition(parts).str(); }

int n_lambda(const Partition& lam) {
    int s = 0;
    for (int i = 0; i < lam.len(); ++i) s += i * lam.parts[i];
    return s;
}

std::vector<Composition> rearrangements(const Partition& lam, int n) {
    if (n < lam.len() && lam.parts[n] > 0)
        throw std::invalid_argument("cannot fit partition into fewer parts");
    std::vector<int> v(lam.parts.begin(),
                       lam.parts.begin() + std::min<size_t>(lam.parts.size(), n));
    v.resize(n, 0);
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Composition increasing_rearrangement(const Partition& lam) {
    std::vector<int> v = lam.parts;
    std::sort(v.begin(), v.end());
    return Composition(std::move(v));
}

XPolynomial D_mu(const Composition& mu, int m) {
    if (m < 1) throw std::invalid_argument("need at least one variable");
    DiagramInfo d = make_diagram(mu);
    XPolynomial result(m);
    for_each_filling(d, m, [&](const std::vector<int>& vals) {
        PlainStats st = plain_stats(d, vals);
        XMonomial e(m, 0);
        for (int v : vals) ++e[v - 1];
        result.add_term(e, QTRational(QTPoly::monomial(1, static_cast<int>(st.maj),
                                                       static_cast<int>(st.inv))));
    });
    return result;
}

XPolynomial J_lambda(const Partition& lam, int m) {
    if (m < 1) throw std::invalid_argument("need at least one variable");
    Composition mu(lam.parts);
    DiagramInfo d = make_diagram(mu);
    const int nl = n_lambda(lam);
    std::vector<QTPoly> hook(d.boxes.size());
    for (size_t i = 0; i < d.boxes.size(); ++i)
        hook[i] = one_minus(d.leg[i] + 1, d.arm[i] + 1);
    const QTPoly one_minus_t = one_minus(0, 1);

    XPolynomial result(m);
    for_each_unaugmented_non_attacking(d, m, [&](const std::vector<int>& vals) {
        PlainStats st = plain_stats(d, vals);
        if (st.inv > nl) throw std::logic_error("inv exceeds n(lambda) in J_lambda");
        QTPoly coeff = QTPoly::monomial(1, static_cast<int>(st.maj),
                                        static_cast<int>(nl - st.inv));
        for (size_t i = 0; i < vals.size(); ++i) {
            bool matches_below = d.below[i] >= 0 && vals[i] == vals[d.below[i]];
            coeff *= matches_below ? hook[i] : one_minus_t;
        }
        XMonomial e(m, 0);
        for (int v : vals) ++e[v - 1];
        result.add_term(e, QTRational(std::move(coeff)));
    });
    return result;
}

namespace {

void check_rearrangement(const Partition& lam, const Composition& mu) {
    std::vector<int> a = lam.parts, b = mu.parts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    a.resize(std::max(a.size(), b.size()), 0);
    b.resize(std::max(a.size(), b.size()), 0);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("mu is not a rearrangement of lambda");
}

Composition zero_padded(const Composition& mu, int m) {
    std::vector<int> parts(m, 0);
    parts.insert(parts.end(), mu.parts.begin(), mu.parts.end());
    return Composition(std::move(parts));
}

}  // namespace

XPolynomial J_via_stable_limit(const Partition& lam, const Composition& mu, int m,
                               Mode mode) {
    check_rearrangement(lam, mu);
    return E_integral(zero_padded(mu, m), mode).truncate_vars(m);
}

XPolynomial P_lambda_truncated(const Partition& lam, const Composition& mu, int m,
                               Mode mode) {
    check_rearrangement(lam, mu);
    XPolynomial e = E_combinatorial(zero_padded(mu, m)).truncate_vars(m);
    if (mode == Mode::checked) {
        // The combinatorial and operator engines must agree on the source.
        Composition padded = zero_padded(mu, m);
        if (!(E_recurrence(padded) == E_combinatorial(padded)))
            throw std::logic_error("engine mismatch for mu=" + padded.str());
    }
    QTPoly num = hook_product(mu);
    Composition inc = increasing_rearrangement(lam);
    DiagramInfo d = make_diagram(inc);
    QTPoly den(1);
    for (size_t i = 0; i < d.boxes.size(); ++i)
        den *= one_minus(d.leg[i], d.arm[i] + 1);
    return e * QTRational(std::move(num), std::move(den));
}

XPolynomial P_lambda_symmetrized(const Partition& lam, Mode mode) {
    const int n = lam.len();
    Composition inc = increasing_rearrangement(lam);
    DiagramInfo dinc = make_diagram(inc);
    QTPoly prefactor(1);
    for (size_t i = 0; i < dinc.boxes.size(); ++i)
        prefactor *= one_minus(dinc.leg[i] + 1, dinc.arm[i]);

    XPolynomial sum(n);
    for (const Composition& mu : rearrangements(lam, n)) {
        DiagramInfo d = make_diagram(mu);
        QTPoly den(1);
        for (size_t i = 0; i < d.boxes.size(); ++i)
            den *= one_minus(d.leg[i] + 1, d.arm[i]);
        sum += E_inverted(mu, mode) * QTRational(QTPoly(1), std::move(den));
    }
    return sum * QTRational(std::move(prefactor));
}

XPolynomial schur_via_keys(const Partition& lam, int n) {
    XPolynomial sum(n);
    for (const Composition& mu : rearrangements(lam, n)) sum += key_polynomial(mu);
    return sum;
}

XPolynomial schur_oracle(const Partition& lam, int n) {
    std::vector<int> rows;
    for (int v : lam.parts)
        if (v > 0) rows.push_back(v);
    XPolynomial result(n);
    if (rows.empty()) return XPolynomial::constant(n, QTRational(1));

    // Semistandard tableaux: rows weakly increase, columns strictly increase.
    std::vector<std::vector<int>> tab(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) tab[r].assign(rows[r], 0);
    XMonomial content(n, 0);
    auto rec = [&](auto&& self, size_t r, int c) -> void {
        if (r == rows.size()) {
            result.add_term(content, QTRational(1));
            return;
        }
        size_t nr = r;
        int nc = c + 1;
        if (nc >= rows[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0 && c < rows[r - 1]) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            ++content[v - 1];
            self(self, nr, nc);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
    return result;
}

}  // namespace nsmac
