#include "nsmac/hecke.hpp"

#include <stdexcept>

namespace nsmac {

namespace {

void check_index(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("operator index out of range");
}

// The monomial x^{alpha_i}: exponent vector step and its q-coefficient
// (q for the affine root, 1 otherwise), plus the pairing <lam, alpha_i^v>.
struct RootData {
    std::vector<int> step;  // exponent vector of x^{alpha_i}
    int qpow;               // power of q carried by x^{alpha_i}
};

RootData root_data(int n, int i) {
    RootData r;
    r.step.assign(n, 0);
    if (i == 0) {
        r.step[n - 1] = 1;
        r.step[0] = -1;
        r.qpow = 1;
    } else {
        r.step[i - 1] = 1;
        r.step[i] = -1;
        r.qpow = 0;
    }
    return r;
}

int pairing(const XMonomial& lam, int n, int i) {
    return i == 0 ? lam[n - 1] - lam[0] : lam[i - 1] - lam[i];
}

// q^e as a coefficient, e possibly negative.
QTRational q_power(int e) {
    if (e >= 0) return QTRational(QTPoly::q(e));
    return QTRational(QTPoly(1), QTPoly::q(-e));
}

}  // namespace

XPolynomial apply_si(const XPolynomial& f, int i) {
    const int n = f.vars();
    check_index(n, i);
    if (i >= 1) return f.swap_vars(i, i + 1);
    XPolynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        XMonomial s = e;
        std::swap(s[0], s[n - 1]);
        r.add_term(s, c * q_power(e[0] - e[n - 1]));
    }
    return r;
}

XPolynomial apply_Ti(const XPolynomial& f, int i) {
    const int n = f.vars();
    check_index(n, i);
    const RootData rt = root_data(n, i);
    const QTRational t_coeff{QTPoly::t()};
    const QTRational one_minus_t{one_minus(0, 1)};

    auto shifted = [&](const XMonomial& lam, int m) {
        XMonomial e = lam;
        for (int k = 0; k < n; ++k) e[k] += m * rt.step[k];
        return e;
    };

    XPolynomial r(n);
    for (const auto& [lam, c] : f.terms()) {
        const int k = pairing(lam, n, i);
        if (k == 0) {
            r.add_term(lam, c * t_coeff);
            continue;
        }
        // t * x^{s_i lam}; the reflected monomial is x^lam (x^alpha)^{-k}.
        r.add_term(shifted(lam, -k), c * t_coeff * q_power(-k * rt.qpow));
        if (k > 0) {
            for (int j = 1; j <= k; ++j)
                r.add_term(shifted(lam, -j), c * one_minus_t * q_power(-j * rt.qpow));
        } else {
            for (int j = 0; j < -k; ++j)
                r.add_term(shifted(lam, j), -c * one_minus_t * q_power(j * rt.qpow));
        }
    }
    return r;
}

XPolynomial apply_Psi(const XPolynomial& f) {
    const int n = f.vars();
    XPolynomial r(n);
    for (const auto& [lam, c] : f.terms()) {
        XMonomial e(n);
        e[0] = lam[n - 1] + 1;
        for (int k = 1; k < n; ++k) e[k] = lam[k - 1];
        r.add_term(e, c * q_power(-lam[n - 1]));
    }
    return r;
}

QTRational intertwiner_coefficient(const Composition& mu, int i) {
    if (i < 1 || i >= mu.n()) throw std::invalid_argument("intertwiner index out of range");
    if (mu[i - 1] <= mu[i])
        throw std::invalid_argument("intertwiner needs mu_i > mu_{i+1}");
    Box u{i, mu[i] + 1};
    int l = leg_length(mu, u);
    int a = arm_length(mu, u);
    return QTRational(one_minus(0, 1), one_minus(l + 1, a));
}

RecurrenceEngine::RecurrenceEngine(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
}

const XPolynomial& RecurrenceEngine::E(const Composition& mu) {
    if (mu.n() != n_) throw std::invalid_argument("composition length mismatch");
    auto it = memo_.find(mu.parts);
    if (it != memo_.end()) return it->second;

    XPolynomial result(n_);
    if (mu.sum() == 0) {
        result = XPolynomial::constant(n_, QTRational(1));
    } else if (mu[0] > 0) {
        // Peel the first column: mu = pi(nu) with nu = (mu_2,...,mu_n,mu_1-1).
        Composition nu = pi_inverse(mu);
        result = apply_Psi(E(nu)) * QTRational(QTPoly::q(nu[n_ - 1]));
    } else {
        // Move the first zero part past the nonzero part that follows it.
        int i = 1;
        while (mu[i - 1] == 0 && mu[i] == 0) ++i;
        Composition nu = s_i(mu, i);
        const XPolynomial& base = E(nu);
        result = apply_Ti(base, i) + base * intertwiner_coefficient(nu, i);
    }
    return memo_.emplace(mu.parts, std::move(result)).first->second;
}

XPolynomial E_recurrence(const Composition& mu) {
    RecurrenceEngine engine(mu.n());
    return engine.E(mu);
}

}  // namespace nsmac
