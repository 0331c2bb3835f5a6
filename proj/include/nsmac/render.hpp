#pragma once

// Deterministic text, LaTeX, and JSON renderings, plus the filling
// serialization.

#include "nsmac/fillings.hpp"
#include "nsmac/xpoly.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace nsmac {

// Display order: the head monomial (when present in the support) first,
// then total degree ascending, then exponent vectors lexicographically
// descending.
std::vector<const std::pair<const XMonomial, QTRational>*> display_order(
    const XPolynomial& f, const std::optional<XMonomial>& head);

std::string xpoly_text(const XPolynomial& f,
                       const std::optional<XMonomial>& head = std::nullopt);
std::string xpoly_latex(const XPolynomial& f,
                        const std::optional<XMonomial>& head = std::nullopt);

// Terms sorted by exponent vector lexicographically ascending; each term is
// {x: [e_1..e_n], num: [[e_q, e_t, "coeff"]...], den: [...]} with base-10
// coefficient strings.
nlohmann::json xpoly_json(const XPolynomial& f);
XPolynomial xpoly_from_json(const nlohmann::json& j);

std::string qtrational_latex(const QTRational& c);

// {"mu": [...], "rows": [[row 1 values left to right], [row 2 ...], ...]}.
nlohmann::json filling_json(const Filling& f);
Filling filling_from_json(const nlohmann::json& j);

}  // namespace nsmac
