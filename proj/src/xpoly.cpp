#include "nsmac/xpoly.hpp"

namespace nsmac {

XPolynomial XPolynomial::constant(int n, QTRational c) {
    XPolynomial p(n);
    p.add_term(XMonomial(n, 0), c);
    return p;
}

XPolynomial XPolynomial::monomial(int n, XMonomial e, QTRational c) {
    if (static_cast<int>(e.size()) != n)
        throw std::invalid_argument("exponent vector length mismatch");
    XPolynomial p(n);
    p.add_term(e, c);
    return p;
}

XPolynomial XPolynomial::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    XMonomial e(n, 0);
    e[i - 1] = 1;
    return monomial(n, e);
}

QTRational XPolynomial::coeff(const XMonomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QTRational() : it->second;
}

void XPolynomial::add_term(const XMonomial& e, const QTRational& c) {
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPolynomial XPolynomial::operator-() const {
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
    XPolynomial r(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            XMonomial e = ea;
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

XPolynomial XPolynomial::operator*(const QTRational& c) const {
    XPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

XPolynomial XPolynomial::operator/(const QTRational& c) const {
    return *this * c.inverse();
}

XPolynomial XPolynomial::map_coeffs(
    const std::function<QTRational(const QTRational&)>& f) const {
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        QTRational v = f(c);
        if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
}

XPolynomial XPolynomial::substitute(const std::vector<Image>& images) const {
    if (static_cast<int>(images.size()) != n_)
        throw std::invalid_argument("substitution needs one image per variable");
    for (const auto& im : images)
        if (static_cast<int>(im.mono.size()) != n_)
            throw std::invalid_argument("image exponent length mismatch");
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        XMonomial out(n_, 0);
        QTRational cc = c;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            for (int k = 0; k < n_; ++k) out[k] += e[i] * images[i].mono[k];
            if (!images[i].coeff.is_one()) cc *= pow(images[i].coeff, e[i]);
        }
        r.add_term(out, cc);
    }
    return r;
}

XPolynomial XPolynomial::swap_vars(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::invalid_argument("variable index out of range");
    XPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        XMonomial s = e;
        std::swap(s[i - 1], s[j - 1]);
        r.add_term(s, c);
    }
    return r;
}

bool XPolynomial::is_symmetric() const {
    for (int i = 1; i < n_; ++i)
        if (!(swap_vars(i, i + 1) == *this)) return false;
    return true;
}

XPolynomial XPolynomial::invert_params() const {
    return map_coeffs([](const QTRational& c) { return c.invert_params(); });
}

XPolynomial XPolynomial::truncate_vars(int m) const {
    if (m < 0 || m > n_) throw std::invalid_argument("truncation width out of range");
    XPolynomial r(m);
    for (const auto& [e, c] : terms_) {
        bool supported = true;
        for (int k = m; k < n_; ++k)
            if (e[k] != 0) {
                supported = false;
                break;
            }
        if (!supported) continue;
        r.add_term(XMonomial(e.begin(), e.begin() + m), c);
    }
    return r;
}

XPolynomial qt_invert_params(const XPolynomial& f) { return f.invert_params(); }

}  // namespace nsmac
