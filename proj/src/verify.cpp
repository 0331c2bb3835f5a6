#include "nsmac/verify.hpp"

#include "nsmac/hecke.hpp"
#include "nsmac/macdonald.hpp"
#include "nsmac/parse.hpp"
#include "nsmac/render.hpp"
#include "nsmac/symmetric.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace nsmac::verify {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name,
                  const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.name = name;
    auto start = Clock::now();
    try {
        r.pass = body(r.detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

void for_each_composition(int n, int total, const std::function<void(const Composition&)>& fn) {
    std::vector<int> parts(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            parts[pos] = left;
            fn(Composition(parts));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

void for_each_composition_up_to(int n, int max_total,
                                const std::function<void(const Composition&)>& fn) {
    for (int d = 0; d <= max_total; ++d) for_each_composition(n, d, fn);
}

std::vector<Partition> partitions_up_to(int max_sum, int max_len) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (!parts.empty()) out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == max_len) return;
        for (int v = std::min(left, cap); v >= 1; --v) {
            parts.push_back(v);
            rec(left - v, v);
            parts.pop_back();
        }
    };
    rec(max_sum, max_sum);
    return out;
}

std::string describe(const Composition& mu, const XPolynomial& lhs,
                     const XPolynomial& rhs) {
    std::ostringstream out;
    out << "mu=(" << mu.str() << ") lhs=" << xpoly_text(lhs)
        << " rhs=" << xpoly_text(rhs);
    return out.str();
}

const std::vector<std::pair<std::vector<int>, const char*>>& appendix_entries() {
    static const std::vector<std::pair<std::vector<int>, const char*>> table = {
        {{0, 0, 0}, "1"},
        {{1, 0, 0}, "x1"},
        {{0, 1, 0}, "x2 + ((1-t)/(1-q*t^2))*x1"},
        {{0, 0, 1}, "x3 + ((1-t)/(1-q*t))*(x1 + x2)"},
        {{1, 1, 0}, "x1*x2"},
        {{1, 0, 1}, "x1*x3 + ((1-t)/(1-q*t^2))*x1*x2"},
        {{0, 1, 1}, "x2*x3 + ((1-t)/(1-q*t))*(x1*x2 + x1*x3)"},
        {{2, 0, 0}, "x1^2 + ((q*(1-t))/(1-q*t))*(x1*x2 + x1*x3)"},
        {{0, 2, 0},
         "x2^2 + ((1-t)/(1-q^2*t^2))*x1^2 + ((q*(1-t))/(1-q*t))*x2*x3"
         " + ((q*(1-t)^2)/((1-q*t)*(1-q^2*t^2)))*x1*x3"
         " + (((1-t)*(1+q-q*t-q^2*t^2))/((1-q*t)*(1-q^2*t^2)))*x1*x2"},
        {{0, 0, 2},
         "x3^2 + ((1-t)/(1-q^2*t))*(x1^2 + x2^2)"
         " + (((1-t)*(1+q-q*t-q^2*t))/((1-q*t)*(1-q^2*t)))*(x1*x3 + x2*x3)"
         " + (((1+q)*(1-t)^2)/((1-q*t)*(1-q^2*t)))*x1*x2"},
    };
    return table;
}

XPolynomial random_poly(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(-2, 2), coef(-3, 3), qt(0, 2);
    XPolynomial f(n);
    int k = nterms(rng);
    for (int term = 0; term < k; ++term) {
        XMonomial e(n);
        for (int& v : e) v = expo(rng);
        QTPoly c;
        c.add_term(coef(rng), qt(rng), qt(rng));
        if (nterms(rng) > 2) c.add_term(coef(rng), qt(rng), qt(rng));
        if (c.is_zero()) c = QTPoly(1);
        f.add_term(e, QTRational(std::move(c)));
    }
    if (f.is_zero()) f = XPolynomial::variable(n, 1);
    return f;
}

}  // namespace

std::vector<CheckResult> appendix_table(const Options& opt) {
    std::vector<CheckResult> out;
    for (const auto& [parts, expected_text] : appendix_entries()) {
        Composition mu(parts);
        out.push_back(timed("appendix E_(" + mu.str() + ")", [&](std::string& detail) {
            XPolynomial expected = parse_xpoly(expected_text, 3);
            XPolynomial got = E_combinatorial(mu, opt.jobs);
            if (got == expected) return true;
            detail = describe(mu, got, expected);
            return false;
        }));
    }
    return out;
}

std::vector<CheckResult> worked_example(const Options&) {
    std::vector<CheckResult> out;
    out.push_back(timed("worked-example stats (2,1,3,0,0,2)", [](std::string& detail) {
        Composition mu({2, 1, 3, 0, 0, 2});
        DiagramInfo d = make_diagram(mu);
        // Reading order: (3,3); (6,2),(3,2),(1,2); (6,1),(3,1),(2,1),(1,1).
        std::vector<int> values = {2, 5, 4, 6, 5, 3, 2, 1};
        if (!is_non_attacking_augmented(d, values)) {
            detail = "filling reported as attacking";
            return false;
        }
        AugmentedStats s = augmented_stats(d, values);
        long long triples = count_coinversion_triples(d, values);
        std::vector<std::pair<Box, int>> arm_table = {
            {{1, 1}, 3}, {{2, 1}, 2}, {{3, 1}, 5}, {{6, 1}, 2},
            {{1, 2}, 1}, {{3, 2}, 2}, {{6, 2}, 1}, {{3, 3}, 1},
        };
        for (const auto& [u, a] : arm_table) {
            if (arm_length(mu, u) != a) {
                std::ostringstream msg;
                msg << "a((" << u.col << "," << u.row << ")) = " << arm_length(mu, u)
                    << ", expected " << a;
                detail = msg.str();
                return false;
            }
        }
        if (s.maj == 3 && s.inv_pairs == 25 && s.inv == 15 && s.coinv == 2 &&
            triples == 2)
            return true;
        std::ostringstream msg;
        msg << "maj=" << s.maj << " |Inv|=" << s.inv_pairs << " inv=" << s.inv
            << " coinv=" << s.coinv << " coinv-triples=" << triples
            << ", expected 3/25/15/2/2";
        detail = msg.str();
        return false;
    }));
    out.push_back(timed("arm and leg of (3,1,2,4,3,0,4,2,3) at (5,2)", [](std::string& detail) {
        Composition mu({3, 1, 2, 4, 3, 0, 4, 2, 3});
        Box u{5, 2};
        auto leg = leg_boxes(mu, u);
        auto left = arm_left_boxes(mu, u);
        auto right = arm_right_boxes(mu, u);
        bool ok = leg_length(mu, u) == 1 && arm_length(mu, u) == 3 &&
                  leg == std::vector<Box>{{5, 3}} &&
                  left == std::vector<Box>{{1, 2}, {3, 2}} &&
                  right == std::vector<Box>{{8, 1}};
        if (!ok) {
            std::ostringstream msg;
            msg << "l=" << leg_length(mu, u) << " a=" << arm_length(mu, u)
                << ", expected l=1 a=3 with leg {(5,3)}, arm-left {(1,2),(3,2)},"
                << " arm-right {(8,1)}";
            detail = msg.str();
        }
        return ok;
    }));
    return out;
}

std::vector<CheckResult> dual_engine(const Options& opt) {
    std::vector<CheckResult> out;
    RecurrenceEngine engine(opt.n);
    for (int d = 0; d <= opt.max_degree; ++d) {
        std::ostringstream name;
        name << "dual-engine n=" << opt.n << " |mu|=" << d;
        out.push_back(timed(name.str(), [&](std::string& detail) {
            bool ok = true;
            int count = 0;
            for_each_composition(opt.n, d, [&](const Composition& mu) {
                if (!ok) return;
                ++count;
                XPolynomial a = E_combinatorial(mu, opt.jobs);
                const XPolynomial& b = engine.E(mu);
                if (!(a == b)) {
                    ok = false;
                    detail = describe(mu, a, b);
                }
            });
            if (ok) detail = std::to_string(count) + " compositions";
            return ok;
        }));
    }
    return out;
}

std::vector<CheckResult> operator_relations(const Options& opt) {
    std::vector<CheckResult> out;
    const int n = opt.n;
    const int rounds = 20;
    QTRational tq{QTPoly::t()};

    out.push_back(timed("quadratic (T_i - t)(T_i + 1) = 0, n=" + std::to_string(n),
                        [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed);
        for (int r = 0; r < rounds; ++r) {
            XPolynomial f = random_poly(rng, n);
            for (int i = 0; i < n; ++i) {
                XPolynomial g = apply_Ti(f, i);
                XPolynomial lhs = apply_Ti(g, i) + g * (QTRational(1) - tq) - f * tq;
                if (!lhs.is_zero()) {
                    detail = "i=" + std::to_string(i) + " f=" + xpoly_text(f);
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(timed("braid T_i T_j T_i = T_j T_i T_j, n=" + std::to_string(n),
                        [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 1);
        for (int r = 0; r < rounds; ++r) {
            XPolynomial f = random_poly(rng, n);
            for (int i = 0; i < n; ++i) {
                int j = (i + 1) % n;
                XPolynomial lhs = apply_Ti(apply_Ti(apply_Ti(f, i), j), i);
                XPolynomial rhs = apply_Ti(apply_Ti(apply_Ti(f, j), i), j);
                if (!(lhs == rhs)) {
                    detail = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                             " f=" + xpoly_text(f);
                    return false;
                }
            }
        }
        return true;
    }));

    if (n >= 4) {
        out.push_back(timed("commuting T_i T_j = T_j T_i, n=" + std::to_string(n),
                            [&](std::string& detail) {
            std::mt19937_64 rng(opt.seed + 2);
            for (int r = 0; r < rounds; ++r) {
                XPolynomial f = random_poly(rng, n);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 2; j < n; ++j) {
                        if (i == 0 && j == n - 1) continue;
                        XPolynomial lhs = apply_Ti(apply_Ti(f, j), i);
                        XPolynomial rhs = apply_Ti(apply_Ti(f, i), j);
                        if (!(lhs == rhs)) {
                            detail = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                     " f=" + xpoly_text(f);
                            return false;
                        }
                    }
            }
            return true;
        }));
    }

    out.push_back(timed("T_i f = t f iff s_i f = f, n=" + std::to_string(n),
                        [&](std::string& detail) {
        std::mt19937_64 rng(opt.seed + 3);
        for (int r = 0; r < rounds; ++r) {
            XPolynomial f = random_poly(rng, n);
            for (int i = 1; i < n; ++i) {
                XPolynomial sym = f + f.swap_vars(i, i + 1);
                for (const XPolynomial& g : {f, sym}) {
                    bool fixed = g.swap_vars(i, i + 1) == g;
                    bool eigen = apply_Ti(g, i) == g * tq;
                    if (fixed != eigen) {
                        detail = "i=" + std::to_string(i) + " f=" + xpoly_text(g) +
                                 (fixed ? " symmetric but not a t-eigenfunction"
                                        : " t-eigenfunction but not symmetric");
                        return false;
                    }
                }
            }
        }
        return true;
    }));
    return out;
}

std::vector<CheckResult> recurrence_steps(const Options& opt) {
    std::vector<CheckResult> out;
    out.push_back(timed("rotation step E_pi(mu) = q^{mu_n} Psi E_mu", [&](std::string& detail) {
        bool ok = true;
        for_each_composition_up_to(opt.n, opt.max_degree, [&](const Composition& mu) {
            if (!ok) return;
            XPolynomial lhs = E_combinatorial(pi_shift(mu), opt.jobs);
            XPolynomial rhs = apply_Psi(E_combinatorial(mu, opt.jobs)) *
                              QTRational(QTPoly::q(mu.parts.back()));
            if (!(lhs == rhs)) {
                ok = false;
                detail = describe(mu, lhs, rhs);
            }
        });
        return ok;
    }));
    out.push_back(timed("intertwiner step E_{s_i mu} = (T_i + c) E_mu", [&](std::string& detail) {
        bool ok = true;
        for_each_composition_up_to(opt.n, opt.max_degree, [&](const Composition& mu) {
            if (!ok) return;
            XPolynomial e_mu = E_combinatorial(mu, opt.jobs);
            for (int i = 1; i < opt.n; ++i) {
                if (mu[i - 1] <= mu[i]) continue;
                XPolynomial lhs = E_combinatorial(s_i(mu, i), opt.jobs);
                XPolynomial rhs =
                    apply_Ti(e_mu, i) + e_mu * intertwiner_coefficient(mu, i);
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = "i=" + std::to_string(i) + " " + describe(mu, lhs, rhs);
                    return;
                }
            }
        });
        return ok;
    }));
    return out;
}

std::vector<CheckResult> triangularity(const Options& opt) {
    std::vector<CheckResult> out;
    out.push_back(timed("triangularity and Bruhat support", [&](std::string& detail) {
        bool ok = true;
        for_each_composition_up_to(opt.n, opt.max_degree, [&](const Composition& mu) {
            if (!ok) return;
            XPolynomial e = E_combinatorial(mu, opt.jobs);
            if (!e.coeff(mu.parts).is_one()) {
                ok = false;
                detail = "mu=(" + mu.str() + ") head coefficient " +
                         e.coeff(mu.parts).str();
                return;
            }
            for (const auto& [lam, c] : e.terms()) {
                if (!bruhat_leq(Composition(lam), mu)) {
                    ok = false;
                    detail = "mu=(" + mu.str() + ") support term (" +
                             Composition(lam).str() + ") not below mu";
                    return;
                }
            }
        });
        return ok;
    }));
    return out;
}

std::vector<CheckResult> integrality(const Options& opt) {
    std::vector<CheckResult> out;
    out.push_back(timed("integral-form coefficients in Z[q,t]", [&](std::string& detail) {
        bool ok = true;
        for_each_composition_up_to(opt.n, opt.max_degree, [&](const Composition& mu) {
            if (!ok) return;
            XPolynomial e = E_integral(mu, Mode::fast, opt.jobs);
            for (const auto& [lam, c] : e.terms()) {
                if (!c.is_integral()) {
                    ok = false;
                    detail = "mu=(" + mu.str() + ") coefficient of x^(" +
                             Composition(lam).str() + ") is " + c.str();
                    return;
                }
            }
        });
        return ok;
    }));
    out.push_back(timed("positivity of E-integral at q = t^k over (1-t)^{|mu|}",
                        [&](std::string& detail) {
        bool ok = true;
        for_each_composition_up_to(opt.n, opt.max_degree, [&](const Composition& mu) {
            if (!ok) return;
            XPolynomial e = E_integral(mu, Mode::fast, opt.jobs);
            QTPoly divisor(1);
            for (int s = 0; s < mu.sum(); ++s) divisor *= one_minus(0, 1);
            for (int k = 0; k <= 2; ++k) {
                for (const auto& [lam, c] : e.terms()) {
                    auto quotient = c.num().substitute_q_to_tk(k).divide_if_exact(divisor);
                    if (!quotient) {
                        ok = false;
                        detail = "mu=(" + mu.str() + ") k=" + std::to_string(k) +
                                 ": (1-t)^{|mu|} does not divide " + c.num().str();
                        return;
                    }
                    for (const auto& [exp, coeff] : quotient->terms()) {
                        if (coeff < 0) {
                            ok = false;
                            detail = "mu=(" + mu.str() + ") k=" + std::to_string(k) +
                                     ": negative coefficient in " + quotient->str();
                            return;
                        }
                    }
                }
            }
        });
        return ok;
    }));
    return out;
}

std::vector<CheckResult> rearrangement_invariance(const Options&) {
    std::vector<CheckResult> out;
    out.push_back(timed("D_mu invariant under rearrangement", [](std::string& detail) {
        for (const Partition& lam : partitions_up_to(4, 3)) {
            for (int m = 1; m <= 3; ++m) {
                auto mus = rearrangements(lam, 3);
                XPolynomial base = D_mu(mus.front(), m);
                for (size_t k = 1; k < mus.size(); ++k) {
                    XPolynomial other = D_mu(mus[k], m);
                    if (!(other == base)) {
                        detail = "lambda=(" + lam.str() + ") m=" + std::to_string(m) +
                                 " mu=(" + mus[k].str() + "): " +
                                 xpoly_text(other) + " vs " + xpoly_text(base);
                        return false;
                    }
                }
            }
        }
        return true;
    }));
    return out;
}

std::vector<CheckResult> stable_limit(const Options&) {
    std::vector<CheckResult> out;
    out.push_back(timed("stable limit of E-integral equals J", [](std::string& detail) {
        for (const Partition& lam : partitions_up_to(3, 2)) {
            for (int m = 1; m <= 3; ++m) {
                XPolynomial j = J_lambda(lam, m);
                for (const Composition& mu : rearrangements(lam, lam.len())) {
                    XPolynomial limit = J_via_stable_limit(lam, mu, m, Mode::fast);
                    if (!(limit == j)) {
                        detail = "lambda=(" + lam.str() + ") mu=(" + mu.str() +
                                 ") m=" + std::to_string(m) + ": " +
                                 xpoly_text(limit) + " vs " + xpoly_text(j);
                        return false;
                    }
                }
            }
        }
        return true;
    }));
    return out;
}

std::vector<CheckResult> p_dual_routes(const Options&) {
    std::vector<CheckResult> out;
    auto lambdas = []() {
        std::vector<Partition> ls;
        for (const Partition& lam : partitions_up_to(3, 3)) {
            std::vector<int> padded = lam.parts;
            padded.resize(3, 0);
            ls.emplace_back(padded);
        }
        return ls;
    }();
    out.push_back(timed("P routes agree", [&](std::string& detail) {
        for (const Partition& lam : lambdas) {
            XPolynomial b = P_lambda_symmetrized(lam, Mode::fast);
            for (const Composition& mu : rearrangements(lam, 3)) {
                XPolynomial a = P_lambda_truncated(lam, mu, 3, Mode::fast);
                if (!(a == b)) {
                    detail = "lambda=(" + lam.str() + ") mu=(" + mu.str() + "): " +
                             xpoly_text(a) + " vs " + xpoly_text(b);
                    return false;
                }
            }
        }
        return true;
    }));
    out.push_back(timed("P symmetric and monic", [&](std::string& detail) {
        for (const Partition& lam : lambdas) {
            XPolynomial p = P_lambda_symmetrized(lam, Mode::fast);
            if (!p.is_symmetric()) {
                detail = "lambda=(" + lam.str() + "): " + xpoly_text(p);
                return false;
            }
            if (!p.coeff(lam.parts).is_one()) {
                detail = "lambda=(" + lam.str() + ") head coefficient " +
                         p.coeff(lam.parts).str();
                return false;
            }
        }
        return true;
    }));
    out.push_back(timed("P invariant under q,t -> 1/q,1/t", [&](std::string& detail) {
        for (const Partition& lam : lambdas) {
            XPolynomial p = P_lambda_symmetrized(lam, Mode::fast);
            if (!(qt_invert_params(p) == p)) {
                detail = "lambda=(" + lam.str() + "): " + xpoly_text(p);
                return false;
            }
        }
        return true;
    }));
    return out;
}

std::vector<CheckResult> schur(const Options&) {
    std::vector<CheckResult> out;
    out.push_back(timed("key-polynomial sums equal Schur", [](std::string& detail) {
        for (const Partition& lam : partitions_up_to(4, 3)) {
            XPolynomial keys = schur_via_keys(lam, 3);
            XPolynomial tableaux = schur_oracle(lam, 3);
            if (!(keys == tableaux)) {
                detail = "lambda=(" + lam.str() + "): " + xpoly_text(keys) + " vs " +
                         xpoly_text(tableaux);
                return false;
            }
        }
        return true;
    }));
    return out;
}

std::vector<CheckResult> triple_oracle(const Options&) {
    std::vector<CheckResult> out;
    out.push_back(timed("inv/coinv equal triple counts on every filling",
                        [](std::string& detail) {
        bool ok = true;
        for (int n = 1; n <= 4 && ok; ++n) {
            for (int d = 0; d <= 3 && ok; ++d) {
                for_each_composition(n, d, [&](const Composition& mu) {
                    if (!ok) return;
                    DiagramInfo dg = make_diagram(mu);
                    for_each_filling(dg, n, [&](const std::vector<int>& values) {
                        if (!ok) return;
                        AugmentedStats s = augmented_stats(dg, values);
                        long long ti = count_inversion_triples(dg, values);
                        long long tc = count_coinversion_triples(dg, values);
                        if (s.inv != ti || s.coinv != tc) {
                            ok = false;
                            std::ostringstream msg;
                            msg << "mu=(" << mu.str() << ") values=[";
                            for (size_t k = 0; k < values.size(); ++k)
                                msg << (k ? "," : "") << values[k];
                            msg << "] inv=" << s.inv << " triples=" << ti
                                << " coinv=" << s.coinv << " cotriples=" << tc;
                            detail = msg.str();
                        }
                    });
                });
            }
        }
        return ok;
    }));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "appendix-table",    "worked-example", "dual-engine",
        "operator-relations", "recurrence-steps", "triangularity",
        "integrality",       "rearrangement-invariance", "stable-limit",
        "p-dual-routes",     "schur",          "triple-oracle",
    };
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const Options& opt) {
    using Suite = std::vector<CheckResult> (*)(const Options&);
    static const std::vector<std::pair<std::string, Suite>> table = {
        {"appendix-table", appendix_table},
        {"worked-example", worked_example},
        {"dual-engine", dual_engine},
        {"operator-relations", operator_relations},
        {"recurrence-steps", recurrence_steps},
        {"triangularity", triangularity},
        {"integrality", integrality},
        {"rearrangement-invariance", rearrangement_invariance},
        {"stable-limit", stable_limit},
        {"p-dual-routes", p_dual_routes},
        {"schur", schur},
        {"triple-oracle", triple_oracle},
    };
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& [_, suite] : table) {
            auto part = suite(opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    for (const auto& [key, suite] : table)
        if (key == name) return suite(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace nsmac::verify
