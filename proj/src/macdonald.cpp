#include "nsmac/macdonald.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace nsmac {

namespace {

XMonomial content_vector(int n, const std::vector<int>& values) {
    XMonomial e(n, 0);
    for (int v : values) ++e[v - 1];
    return e;
}

// Accumulate one polynomial per admissible first-box value on its own
// thread, then merge.  The merge order is fixed, and every coefficient is
// canonical, so the result does not depend on the thread schedule.
XPolynomial sum_partitioned(
    const DiagramInfo& d, int jobs,
    const std::function<void(XPolynomial&, const std::vector<int>&)>& accumulate) {
    if (jobs <= 1 || d.boxes.empty()) {
        XPolynomial total(d.n);
        for_each_non_attacking(d, [&](const std::vector<int>& vals) {
            accumulate(total, vals);
        });
        return total;
    }
    std::vector<XPolynomial> parts(d.n, XPolynomial(d.n));
    std::vector<std::thread> workers;
    const int threads = std::min(jobs, d.n);
    for (int w = 0; w < threads; ++w)
        workers.emplace_back([&, w] {
            for (int v = w + 1; v <= d.n; v += threads)
                for_each_non_attacking(
                    d, [&](const std::vector<int>& vals) { accumulate(parts[v - 1], vals); },
                    v);
        });
    for (auto& th : workers) th.join();
    XPolynomial total(d.n);
    for (const XPolynomial& p : parts) total += p;
    return total;
}

}  // namespace

XPolynomial E_combinatorial(const Composition& mu, int jobs) {
    DiagramInfo d = make_diagram(mu);
    // Per-box contribution when the value differs from the cell below.
    std::vector<QTRational> box_factor(d.boxes.size());
    for (size_t i = 0; i < d.boxes.size(); ++i)
        box_factor[i] = QTRational(one_minus(0, 1), one_minus(d.leg[i] + 1, d.arm[i] + 1));

    return sum_partitioned(d, jobs, [&](XPolynomial& acc, const std::vector<int>& vals) {
        AugmentedStats st = augmented_stats(d, vals);
        QTRational coeff{QTPoly::monomial(1, static_cast<int>(st.maj),
                                          static_cast<int>(st.coinv))};
        for (size_t i = 0; i < vals.size(); ++i) {
            int under = d.below[i] >= 0 ? vals[d.below[i]] : d.boxes[i].col;
            if (vals[i] != under) coeff *= box_factor[i];
        }
        acc.add_term(content_vector(d.n, vals), coeff);
    });
}

QTPoly hook_product(const Composition& mu) {
    DiagramInfo d = make_diagram(mu);
    QTPoly p(1);
    for (size_t i = 0; i < d.boxes.size(); ++i)
        p *= one_minus(d.leg[i] + 1, d.arm[i] + 1);
    return p;
}

XPolynomial E_integral(const Composition& mu, Mode mode, int jobs) {
    DiagramInfo d = make_diagram(mu);
    std::vector<QTPoly> hook(d.boxes.size());
    for (size_t i = 0; i < d.boxes.size(); ++i)
        hook[i] = one_minus(d.leg[i] + 1, d.arm[i] + 1);
    const QTPoly one_minus_t = one_minus(0, 1);

    XPolynomial result =
        sum_partitioned(d, jobs, [&](XPolynomial& acc, const std::vector<int>& vals) {
            AugmentedStats st = augmented_stats(d, vals);
            QTPoly coeff = QTPoly::monomial(1, static_cast<int>(st.maj),
                                            static_cast<int>(st.coinv));
            for (size_t i = 0; i < vals.size(); ++i) {
                int under = d.below[i] >= 0 ? vals[d.below[i]] : d.boxes[i].col;
                coeff *= (vals[i] == under) ? hook[i] : one_minus_t;
            }
            acc.add_term(content_vector(d.n, vals), QTRational(std::move(coeff)));
        });

    if (mode == Mode::checked) {
        XPolynomial alt = E_combinatorial(mu, jobs) * QTRational(hook_product(mu));
        if (!(alt == result))
            throw std::logic_error("integral-form routes disagree for mu=" + mu.str());
    }
    return result;
}

XPolynomial E_inverted(const Composition& mu, Mode mode, int jobs) {
    DiagramInfo d = make_diagram(mu);
    std::vector<QTRational> box_factor(d.boxes.size());
    for (size_t i = 0; i < d.boxes.size(); ++i)
        box_factor[i] = QTRational(one_minus(0, 1), one_minus(d.leg[i] + 1, d.arm[i] + 1));

    XPolynomial result =
        sum_partitioned(d, jobs, [&](XPolynomial& acc, const std::vector<int>& vals) {
            AugmentedStats st = augmented_stats(d, vals);
            QTRational coeff{QTPoly::monomial(1, static_cast<int>(st.maj_prime),
                                              static_cast<int>(st.coinv_prime))};
            for (size_t i = 0; i < vals.size(); ++i) {
                int under = d.below[i] >= 0 ? vals[d.below[i]] : d.boxes[i].col;
                if (vals[i] != under) coeff *= box_factor[i];
            }
            acc.add_term(content_vector(d.n, vals), coeff);
        });

    if (mode == Mode::checked) {
        XPolynomial alt = qt_invert_params(E_combinatorial(mu, jobs));
        if (!(alt == result))
            throw std::logic_error("inverted-form routes disagree for mu=" + mu.str());
    }
    return result;
}

XPolynomial key_polynomial(const Composition& mu) {
    DiagramInfo d = make_diagram(mu);
    XPolynomial result(d.n);
    for_each_non_attacking(d, [&](const std::vector<int>& vals) {
        AugmentedStats st = augmented_stats(d, vals);
        if (st.maj_prime == 0 && st.coinv_prime == 0)
            result.add_term(content_vector(d.n, vals), QTRational(1));
    });
    return result;
}

bool check_complement_identity(const Composition& nu, int r) {
    const int n = nu.n();
    int top = *std::max_element(nu.parts.begin(), nu.parts.end());
    if (r < top) throw std::invalid_argument("complement exponent below largest part");
    std::vector<int> parts(n);
    for (int i = 0; i < n; ++i) parts[i] = r - nu[n - 1 - i];
    XPolynomial lhs = E_combinatorial(Composition(parts));

    // (x_1...x_n)^r * E_nu evaluated at x_i -> 1/x_{n+1-i}.
    std::vector<XPolynomial::Image> images(n);
    for (int i = 0; i < n; ++i) {
        XMonomial m(n, 0);
        m[n - 1 - i] = -1;
        images[i] = {QTRational(1), std::move(m)};
    }
    XPolynomial rhs = E_combinatorial(nu).substitute(images) *
                      XPolynomial::monomial(n, XMonomial(n, r));
    return lhs == rhs;
}

}  // namespace nsmac
