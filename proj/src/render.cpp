#include "nsmac/render.hpp"

#include <algorithm>
#include <sstream>

namespace nsmac {

namespace {

int total_degree(const XMonomial& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

}  // namespace

std::vector<const std::pair<const XMonomial, QTRational>*> display_order(
    const XPolynomial& f, const std::optional<XMonomial>& head) {
    std::vector<const std::pair<const XMonomial, QTRational>*> out;
    for (const auto& term : f.terms()) out.push_back(&term);
    std::sort(out.begin(), out.end(), [&](const auto* a, const auto* b) {
        if (head) {
            bool ha = a->first == *head, hb = b->first == *head;
            if (ha != hb) return ha;
        }
        int da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Plain text

namespace {

std::string xmono_text(const XMonomial& e) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << "x" << (i + 1);
        if (e[i] != 1) out << "^" << e[i];
    }
    return out.str();
}

bool is_single_term(const QTPoly& p) { return p.terms().size() == 1; }

std::string coeff_text(const QTRational& c) {
    if (c.is_integral() && is_single_term(c.num())) return c.num().str();
    return "(" + c.str() + ")";
}

}  // namespace

std::string xpoly_text(const XPolynomial& f, const std::optional<XMonomial>& head) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto* term : display_order(f, head)) {
        if (!first) out << " + ";
        first = false;
        std::string mono = xmono_text(term->first);
        if (mono.empty()) {
            out << coeff_text(term->second);
        } else if (term->second.is_one()) {
            out << mono;
        } else if (term->second == QTRational(-1)) {
            out << "-" << mono;
        } else {
            out << coeff_text(term->second) << "*" << mono;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// LaTeX

namespace {

// poly = (neg ? -1 : 1) * content * q^eq t^et * prod (1-q^a t^b)^mult * rest
struct Factored {
    bool neg = false;
    Int content = 1;
    int eq = 0, et = 0;
    std::vector<std::array<int, 3>> binoms;  // {a, b, multiplicity}
    QTPoly rest;
};

Factored factor_qtpoly(QTPoly p) {
    Factored f;
    if (p.is_zero()) {
        f.rest = p;
        return f;
    }
    // Match the fraction normalization: hooks read 1 - q^a t^b, so the sign
    // is pulled out when the lexicographically smallest term is negative.
    if (sgn(p.terms().begin()->second) < 0) {
        f.neg = true;
        p = -p;
    }
    Int content = 0;
    int min_q = p.degree_q(), min_t = p.degree_t();
    for (const auto& [e, c] : p.terms()) {
        content = gcd(content, c);
        min_q = std::min(min_q, e.eq);
        min_t = std::min(min_t, e.et);
    }
    f.content = content;
    f.eq = min_q;
    f.et = min_t;
    {
        QTPoly reduced;
        for (const auto& [e, c] : p.terms()) {
            Int d;
            mpz_divexact(d.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
            reduced.add_term(d, e.eq - min_q, e.et - min_t);
        }
        p = std::move(reduced);
    }
    // Greedy binomial extraction, largest total degree first, so reducible
    // binomials like 1-q^2 t^2 are not split into their own factors.
    std::vector<std::pair<int, int>> candidates;
    for (int a = 0; a <= p.degree_q(); ++a)
        for (int b = 0; b <= p.degree_t(); ++b)
            if (a + b >= 1) candidates.emplace_back(a, b);
    std::sort(candidates.begin(), candidates.end(), [](auto l, auto r) {
        if (l.first + l.second != r.first + r.second)
            return l.first + l.second > r.first + r.second;
        return l > r;
    });
    for (auto [a, b] : candidates) {
        int mult = 0;
        while (true) {
            auto q = p.divide_if_exact(one_minus(a, b));
            if (!q) break;
            p = std::move(*q);
            ++mult;
        }
        if (mult > 0) f.binoms.push_back({a, b, mult});
    }
    std::sort(f.binoms.begin(), f.binoms.end());
    f.rest = std::move(p);
    return f;
}

std::string qt_mono_latex(int eq, int et) {
    std::ostringstream out;
    if (eq > 0) {
        out << "q";
        if (eq > 1) out << "^{" << eq << "}";
        if (et > 0) out << "\\,";
    }
    if (et > 0) {
        out << "t";
        if (et > 1) out << "^{" << et << "}";
    }
    return out.str();
}

std::string qtpoly_latex_expanded(const QTPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        std::string mono = qt_mono_latex(e.eq, e.et);
        if (a != 1 || mono.empty()) {
            out << a.get_str();
            if (!mono.empty()) out << "\\,";
        }
        out << mono;
    }
    return out.str();
}

// Multiplicative rendering of a factored polynomial; `unit_one` controls
// whether a bare 1 is printed.
std::string factored_latex(const Factored& f, bool unit_one) {
    std::vector<std::string> pieces;
    std::string mono = qt_mono_latex(f.eq, f.et);
    if (f.content != 1 || (mono.empty() && f.binoms.empty() && f.rest.is_one() && unit_one))
        pieces.push_back(f.content.get_str());
    if (!mono.empty()) pieces.push_back(mono);
    for (const auto& [a, b, mult] : f.binoms) {
        std::string base = "(1-" + qt_mono_latex(a, b) + ")";
        if (mult > 1) base += "^{" + std::to_string(mult) + "}";
        pieces.push_back(base);
    }
    if (!f.rest.is_one()) {
        std::string body = qtpoly_latex_expanded(f.rest);
        pieces.push_back(pieces.empty() && f.rest.terms().size() <= 1 ? body
                                                                      : "(" + body + ")");
    }
    std::ostringstream out;
    if (f.neg) out << "-";
    if (pieces.empty()) {
        out << "1";
    } else {
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) out << "\\,";
            out << pieces[i];
        }
    }
    return out.str();
}

std::string xmono_latex(const XMonomial& e) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "\\,";
        first = false;
        out << "x_{" << (i + 1) << "}";
        if (e[i] != 1) out << "^{" << e[i] << "}";
    }
    return out.str();
}

}  // namespace

namespace {

// The braces of \frac already group, so one redundant outer paren pair in a
// numerator or denominator gets dropped.
std::string strip_outer_parens(std::string s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
    int depth = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0) return s;
    }
    return s.substr(1, s.size() - 2);
}

}  // namespace

std::string qtrational_latex(const QTRational& c) {
    Factored num = factor_qtpoly(c.num());
    if (c.is_integral()) return factored_latex(num, true);
    bool neg = num.neg;
    num.neg = false;
    Factored den = factor_qtpoly(c.den());
    std::string body = "\\frac{" + strip_outer_parens(factored_latex(num, true)) + "}{" +
                       strip_outer_parens(factored_latex(den, true)) + "}";
    return neg ? "-" + body : body;
}

std::string xpoly_latex(const XPolynomial& f, const std::optional<XMonomial>& head) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto* term : display_order(f, head)) {
        std::string coeff = qtrational_latex(term->second);
        bool negative = coeff.rfind('-', 0) == 0;
        if (negative) coeff = coeff.substr(1);
        if (!first) out << (negative ? " - " : " + ");
        else if (negative) out << "-";
        first = false;
        std::string mono = xmono_latex(term->first);
        if (mono.empty()) {
            out << coeff;
        } else if (coeff == "1") {
            out << mono;
        } else {
            out << coeff << "\\," << mono;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json qtpoly_json_terms(const QTPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(nlohmann::json::array({e.eq, e.et, c.get_str()}));
    return arr;
}

QTPoly qtpoly_from_json_terms(const nlohmann::json& arr) {
    QTPoly p;
    for (const auto& term : arr)
        p.add_term(Int(term.at(2).get<std::string>()), term.at(0).get<int>(),
                   term.at(1).get<int>());
    return p;
}

}  // namespace

nlohmann::json xpoly_json(const XPolynomial& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::json term;
        term["x"] = e;
        term["num"] = qtpoly_json_terms(c.num());
        term["den"] = qtpoly_json_terms(c.den());
        arr.push_back(std::move(term));
    }
    return arr;
}

XPolynomial xpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("cannot infer variable count from empty term list");
    XPolynomial f(static_cast<int>(j.front().at("x").size()));
    for (const auto& term : j)
        f.add_term(term.at("x").get<XMonomial>(),
                   QTRational(qtpoly_from_json_terms(term.at("num")),
                              qtpoly_from_json_terms(term.at("den"))));
    return f;
}

nlohmann::json filling_json(const Filling& f) {
    DiagramInfo d = make_diagram(f.mu);
    int top = 0;
    for (int v : f.mu.parts) top = std::max(top, v);
    nlohmann::json rows = nlohmann::json::array();
    for (int row = 1; row <= top; ++row) {
        nlohmann::json line = nlohmann::json::array();
        for (int col = 1; col <= f.mu.n(); ++col) {
            int idx = d.box_index(Box{col, row});
            if (idx >= 0) line.push_back(f.values[idx]);
        }
        rows.push_back(std::move(line));
    }
    nlohmann::json out;
    out["mu"] = f.mu.parts;
    out["rows"] = rows;
    return out;
}

Filling filling_from_json(const nlohmann::json& j) {
    Composition mu(j.at("mu").get<std::vector<int>>());
    DiagramInfo d = make_diagram(mu);
    std::vector<int> values(d.boxes.size(), 0);
    const auto& rows = j.at("rows");
    int top = 0;
    for (int v : mu.parts) top = std::max(top, v);
    if (static_cast<int>(rows.size()) != top)
        throw std::invalid_argument("row count does not match shape");
    for (int row = 1; row <= top; ++row) {
        const auto& line = rows.at(row - 1);
        size_t k = 0;
        for (int col = 1; col <= mu.n(); ++col) {
            int idx = d.box_index(Box{col, row});
            if (idx < 0) continue;
            if (k >= line.size()) throw std::invalid_argument("row too short");
            values[idx] = line.at(k++).get<int>();
        }
        if (k != line.size()) throw std::invalid_argument("row too long");
    }
    return Filling{mu, std::move(values)};
}

}  // namespace nsmac
