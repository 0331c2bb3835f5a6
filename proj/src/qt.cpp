#include "nsmac/qt.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace nsmac {

QTPoly QTPoly::monomial(const Int& coeff, int eq, int et) {
    QTPoly p;
    p.add_term(coeff, eq, et);
    return p;
}

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

bool QTPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0});
}

int QTPoly::degree_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.eq);
    return d;
}

int QTPoly::degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.et);
    return d;
}

const Int& QTPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

void QTPoly::add_term(const Int& coeff, int eq, int et) {
    if (sgn(coeff) == 0) return;
    if (eq < 0 || et < 0) throw std::invalid_argument("negative q/t exponent in QTPoly");
    QTExp e{eq, et};
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e.eq, e.et);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e.eq, e.et);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(ca * cb, ea.eq + eb.eq, ea.et + eb.et);
    return r;
}

QTPoly QTPoly::substitute_q_to_tk(int k) const {
    if (k < 0) throw std::invalid_argument("substitute_q_to_tk requires k >= 0");
    QTPoly r;
    for (const auto& [e, c] : terms_) r.add_term(c, 0, e.et + k * e.eq);
    return r;
}

namespace {

Rat rat_pow(const Rat& base, int e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

}  // namespace

Rat QTPoly::evaluate(const Rat& q0, const Rat& t0) const {
    Rat sum = 0;
    for (const auto& [e, c] : terms_) sum += Rat(c) * rat_pow(q0, e.eq) * rat_pow(t0, e.et);
    return sum;
}

// ---------------------------------------------------------------------------
// gcd and exact division.
//
// The polynomial is viewed as an element of (Z[t])[q]: a map from q-degree
// to a univariate integer polynomial in t.  gcd follows the classic
// content/primitive-part scheme with a primitive pseudo-remainder sequence
// at both levels, so all intermediate arithmetic stays in Z.

namespace {

using TP = std::map<int, Int>;  // Z[t]
using QP = std::map<int, TP>;   // (Z[t])[q]

int tp_deg(const TP& p) { return p.empty() ? -1 : p.rbegin()->first; }

void tp_add_term(TP& p, int e, const Int& c) {
    if (sgn(c) == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) p.erase(it);
    }
}

TP tp_mul(const TP& a, const TP& b) {
    TP r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) tp_add_term(r, ea + eb, ca * cb);
    return r;
}

// a - c * t^e * b
TP tp_sub_scaled(TP a, const TP& b, const Int& c, int e) {
    for (const auto& [eb, cb] : b) tp_add_term(a, eb + e, -c * cb);
    return a;
}

TP tp_scale(const TP& a, const Int& c) {
    TP r;
    if (sgn(c) == 0) return r;
    for (const auto& [e, cc] : a) r.emplace(e, cc * c);
    return r;
}

Int tp_content(const TP& p) {
    Int g = 0;
    for (const auto& [e, c] : p) g = gcd(g, c);
    return g;  // non-negative by gmp convention
}

TP tp_divexact_int(const TP& p, const Int& c) {
    TP r;
    for (const auto& [e, cc] : p) {
        Int q;
        mpz_divexact(q.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
        r.emplace(e, q);
    }
    return r;
}

TP tp_primitive(const TP& p) {
    if (p.empty()) return p;
    Int c = tp_content(p);
    if (sgn(p.rbegin()->second) < 0) c = -c;
    return tp_divexact_int(p, c);
}

// Pseudo-remainder: repeatedly scale by lc(b) and cancel the lead of a.
TP tp_prem(TP a, const TP& b) {
    const int db = tp_deg(b);
    const Int& lb = b.rbegin()->second;
    while (!a.empty() && tp_deg(a) >= db) {
        Int la = a.rbegin()->second;
        int d = tp_deg(a) - db;
        TP scaled = tp_scale(a, lb);
        a = tp_sub_scaled(std::move(scaled), b, la, d);
    }
    return a;
}

std::optional<TP> tp_div_if_exact(const TP& a, const TP& b) {
    if (b.empty()) return std::nullopt;
    TP rem = a, quot;
    const int db = tp_deg(b);
    const Int& lb = b.rbegin()->second;
    while (!rem.empty()) {
        int d = tp_deg(rem) - db;
        if (d < 0) return std::nullopt;
        const Int& lr = rem.rbegin()->second;
        if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Int qc;
        mpz_divexact(qc.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
        tp_add_term(quot, d, qc);
        rem = tp_sub_scaled(std::move(rem), b, qc, d);
    }
    return quot;
}

TP tp_sign_norm(TP p) {
    if (!p.empty() && sgn(p.rbegin()->second) < 0)
        for (auto& [e, c] : p) c = -c;
    return p;
}

TP tp_gcd(TP a, TP b) {
    if (a.empty()) return tp_sign_norm(std::move(b));
    if (b.empty()) return tp_sign_norm(std::move(a));
    Int g0 = gcd(tp_content(a), tp_content(b));
    a = tp_primitive(a);
    b = tp_primitive(b);
    if (tp_deg(a) < tp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        TP r = tp_prem(a, b);
        a = std::move(b);
        b = tp_primitive(r);
    }
    return tp_scale(tp_primitive(a), g0);
}

int qp_deg(const QP& p) { return p.empty() ? -1 : p.rbegin()->first; }

QP qp_from(const QTPoly& p) {
    QP r;
    for (const auto& [e, c] : p.terms()) r[e.eq].emplace(e.et, c);
    return r;
}

QTPoly qp_to(const QP& p) {
    QTPoly r;
    for (const auto& [dq, tp] : p)
        for (const auto& [dt, c] : tp) r.add_term(c, dq, dt);
    return r;
}

void qp_set(QP& p, int e, TP v) {
    if (v.empty()) p.erase(e);
    else p[e] = std::move(v);
}

// a - t_factor * q^e * b
QP qp_sub_scaled(QP a, const QP& b, const TP& t_factor, int e) {
    for (const auto& [eb, tb] : b) {
        TP prod = tp_mul(tb, t_factor);
        TP cur = a.count(eb + e) ? a[eb + e] : TP{};
        for (const auto& [et, c] : prod) tp_add_term(cur, et, -c);
        qp_set(a, eb + e, std::move(cur));
    }
    return a;
}

QP qp_scale(const QP& a, const TP& f) {
    QP r;
    if (f.empty()) return r;
    for (const auto& [e, tp] : a) r.emplace(e, tp_mul(tp, f));
    return r;
}

TP qp_content(const QP& a) {
    TP g;
    for (const auto& [e, tp] : a) g = tp_gcd(g, tp);
    return g;
}

QP qp_divexact_tp(const QP& a, const TP& c) {
    QP r;
    for (const auto& [e, tp] : a) {
        auto q = tp_div_if_exact(tp, c);
        if (!q) throw std::logic_error("inexact content division in gcd");
        r.emplace(e, *q);
    }
    return r;
}

QP qp_primitive(const QP& a) {
    if (a.empty()) return a;
    TP c = qp_content(a);
    return qp_divexact_tp(a, c);
}

QP qp_prem(QP a, const QP& b) {
    const int db = qp_deg(b);
    const TP& lb = b.rbegin()->second;
    while (!a.empty() && qp_deg(a) >= db) {
        TP la = a.rbegin()->second;
        int d = qp_deg(a) - db;
        QP scaled = qp_scale(a, lb);
        a = qp_sub_scaled(std::move(scaled), b, la, d);
    }
    return a;
}

}  // namespace

QTPoly QTPoly::gcd(const QTPoly& a, const QTPoly& b) {
    auto sign_norm = [](QTPoly p) {
        if (!p.is_zero() && sgn(p.leading_coeff()) < 0) return -p;
        return p;
    };
    if (a.is_zero()) return sign_norm(b);
    if (b.is_zero()) return sign_norm(a);
    if (a.is_one() || b.is_one()) return QTPoly(1);

    // Constant operand: gcd is the gcd of all integer contents.
    auto int_content = [](const QTPoly& p) {
        Int g = 0;
        for (const auto& [e, c] : p.terms()) g = ::gcd(g, c);
        return g;
    };
    if (a.is_constant() || b.is_constant())
        return QTPoly(Int(::gcd(int_content(a), int_content(b))));
    if (a == b) return sign_norm(a);

    QP A = qp_from(a), B = qp_from(b);
    TP g0 = tp_gcd(qp_content(A), qp_content(B));
    A = qp_primitive(A);
    B = qp_primitive(B);
    if (qp_deg(A) < qp_deg(B)) std::swap(A, B);
    while (!B.empty()) {
        QP r = qp_prem(A, B);
        A = std::move(B);
        B = qp_primitive(r);
    }
    return sign_norm(qp_to(qp_scale(qp_primitive(A), g0)));
}

std::optional<QTPoly> QTPoly::divide_if_exact(const QTPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return QTPoly();
    if (divisor.is_one()) return *this;
    QP rem = qp_from(*this);
    const QP b = qp_from(divisor);
    const int db = qp_deg(b);
    const TP& lb = b.rbegin()->second;
    QP quot;
    while (!rem.empty()) {
        int d = qp_deg(rem) - db;
        if (d < 0) return std::nullopt;
        auto qc = tp_div_if_exact(rem.rbegin()->second, lb);
        if (!qc) return std::nullopt;
        qp_set(quot, d, *qc);
        rem = qp_sub_scaled(std::move(rem), b, *qc, d);
    }
    return qp_to(quot);
}

QTPoly QTPoly::divide_exact(const QTPoly& divisor) const {
    auto q = divide_if_exact(divisor);
    if (!q) throw std::logic_error("inexact polynomial division");
    return *q;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? "-" : "+");
        }
        bool has_var = e.eq > 0 || e.et > 0;
        if (a != 1 || !has_var) {
            out << a.get_str();
            if (has_var) out << "*";
        }
        if (e.eq > 0) {
            out << "q";
            if (e.eq > 1) out << "^" << e.eq;
            if (e.et > 0) out << "*";
        }
        if (e.et > 0) {
            out << "t";
            if (e.et > 1) out << "^" << e.et;
        }
    }
    return out.str();
}

QTPoly one_minus(int eq, int et) {
    QTPoly p(1);
    p.add_term(-1, eq, et);
    return p;
}

// ---------------------------------------------------------------------------
// QTRational

QTRational::QTRational(QTPoly num, QTPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void QTRational::normalize() {
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    if (!den_.is_one()) {
        QTPoly g = QTPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    // Hook-style denominators 1 - q^a t^b stay as written: normalize the
    // sign so the lexicographically smallest term of den is positive.
    if (sgn(den_.terms().begin()->second) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QTRational QTRational::operator-() const {
    QTRational r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRational QTRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return QTRational(den_, num_);
}

QTRational& QTRational::operator+=(const QTRational& o) {
    *this = QTRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

QTRational& QTRational::operator-=(const QTRational& o) {
    *this = QTRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

QTRational& QTRational::operator*=(const QTRational& o) {
    *this = QTRational(num_ * o.num_, den_ * o.den_);
    return *this;
}

QTRational& QTRational::operator/=(const QTRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    *this = QTRational(num_ * o.den_, den_ * o.num_);
    return *this;
}

Rat QTRational::evaluate(const Rat& q0, const Rat& t0) const {
    Rat d = den_.evaluate(q0, t0);
    if (sgn(d) == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.evaluate(q0, t0) / d;
}

QTRational QTRational::invert_params() const {
    if (is_zero()) return QTRational();
    int aq = std::max(num_.degree_q(), den_.degree_q());
    int at = std::max(num_.degree_t(), den_.degree_t());
    auto flip = [&](const QTPoly& p) {
        QTPoly r;
        for (const auto& [e, c] : p.terms()) r.add_term(c, aq - e.eq, at - e.et);
        return r;
    };
    return QTRational(flip(num_), flip(den_));
}

std::string QTRational::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QTRational pow(const QTRational& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    QTRational r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace nsmac
