#include "nsmac/parse.hpp"

#include <cctype>
#include <string>

namespace nsmac {

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    XPolynomial run() {
        XPolynomial f = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    std::string_view text_;
    int n_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    long parse_long() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000L) fail("integer too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    XPolynomial parse_expr() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else {
            accept('+');
        }
        XPolynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    XPolynomial parse_term() {
        XPolynomial acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= parse_factor();
            } else if (c == '/') {
                ++pos_;
                acc = acc * to_coefficient(parse_factor()).inverse();
            } else {
                return acc;
            }
        }
    }

    XPolynomial parse_factor() {
        XPolynomial base = parse_atom();
        if (!accept('^')) return base;
        long e = parse_long();
        return power(base, e);
    }

    XPolynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            XPolynomial inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'q') {
            ++pos_;
            return XPolynomial::constant(n_, QTRational(QTPoly::q()));
        }
        if (c == 't') {
            ++pos_;
            return XPolynomial::constant(n_, QTRational(QTPoly::t()));
        }
        if (c == 'x') {
            ++pos_;
            long i = parse_long();
            if (i < 1 || i > n_) fail("variable index out of range");
            return XPolynomial::variable(n_, static_cast<int>(i));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return XPolynomial::constant(n_, QTRational(parse_long()));
        fail("expected a value");
    }

    // Divisors and bases of negative powers must be invertible; only single
    // monomials and x-free expressions qualify.
    QTRational to_coefficient(const XPolynomial& f) const {
        QTRational out;
        for (const auto& [e, c] : f.terms()) {
            for (int v : e)
                if (v != 0)
                    throw std::invalid_argument("division by an expression containing x");
            out += c;
        }
        return out;
    }

    XPolynomial power(const XPolynomial& base, long e) const {
        if (e >= 0) {
            XPolynomial acc = XPolynomial::constant(n_, QTRational(1));
            for (long k = 0; k < e; ++k) acc *= base;
            return acc;
        }
        if (base.terms().size() != 1)
            throw std::invalid_argument("negative power of a non-monomial");
        const auto& [mono, coeff] = *base.terms().begin();
        XMonomial inv_mono(mono.size());
        for (size_t i = 0; i < mono.size(); ++i) inv_mono[i] = -mono[i];
        XPolynomial inv = XPolynomial::monomial(n_, inv_mono, coeff.inverse());
        return power(inv, -e);
    }
};

}  // namespace

XPolynomial parse_xpoly(std::string_view text, int n) { return Parser(text, n).run(); }

QTRational parse_qtrational(std::string_view text) {
    XPolynomial f = Parser(text, 0).run();
    if (f.is_zero()) return QTRational(0);
    return f.terms().begin()->second;
}

}  // namespace nsmac
