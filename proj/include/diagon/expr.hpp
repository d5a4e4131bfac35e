#pragma once

// Recursive-descent parser for bivariate rational expressions in x and y.
// Precedence: ^ (nonnegative integer exponents) > unary minus > * / > + -,
// left-associative, parentheses; implicit multiplication is not supported.
// Every expression evaluates to a single reduced fraction of two BiPoly.

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diagon/bipoly.hpp"

namespace diagon {

struct ParseError : std::domain_error {
    std::size_t offset;  // 1-based byte offset
    ParseError(std::size_t off, const std::string& what)
        : std::domain_error("syntax error at offset " + std::to_string(off) + ": " + what),
          offset(off) {}
};

// abstract syntax tree; normalization happens at evaluation
struct Expr {
    enum class Kind { Integer, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    mpz_class value;              // Integer
    unsigned long exponent = 0;   // Pow
    std::unique_ptr<Expr> lhs, rhs;

    explicit Expr(Kind k) : kind(k) {}
};

using ExprPtr = std::unique_ptr<Expr>;

struct RatFunXY {
    BiPoly num;
    BiPoly den;  // canonical form, never zero
};

namespace detail_parse {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    ExprPtr sum() {
        ExprPtr e = product();
        while (true) {
            if (consume('+')) {
                auto n = std::make_unique<Expr>(Expr::Kind::Add);
                n->lhs = std::move(e);
                n->rhs = product();
                e = std::move(n);
            } else if (consume('-')) {
                auto n = std::make_unique<Expr>(Expr::Kind::Sub);
                n->lhs = std::move(e);
                n->rhs = product();
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (true) {
            if (consume('*')) {
                auto n = std::make_unique<Expr>(Expr::Kind::Mul);
                n->lhs = std::move(e);
                n->rhs = unary();
                e = std::move(n);
            } else if (consume('/')) {
                auto n = std::make_unique<Expr>(Expr::Kind::Div);
                n->lhs = std::move(e);
                n->rhs = unary();
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        if (consume('-')) {
            auto n = std::make_unique<Expr>(Expr::Kind::Neg);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        while (consume('^')) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponents are not allowed");
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a nonnegative integer exponent");
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos_;
            }
            auto n = std::make_unique<Expr>(Expr::Kind::Pow);
            n->exponent = e;
            n->lhs = std::move(base);
            base = std::move(n);
        }
        return base;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto n = std::make_unique<Expr>(Expr::Kind::Integer);
            n->value = mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
            return n;
        }
        if (c == 'x' || c == 'y') {
            if (pos_ + 1 < s_.size() &&
                std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))
                fail("unexpected character after variable");
            ++pos_;
            return std::make_unique<Expr>(c == 'x' ? Expr::Kind::VarX : Expr::Kind::VarY);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail("only variables x and y are allowed");
        fail(std::string("unexpected character '") + c + "'");
    }
};

struct Frac {
    BiPoly num, den;
};

inline Frac reduce(BiPoly num, BiPoly den) {
    if (den.is_zero()) throw std::domain_error("denominator is zero");
    if (num.is_zero()) return {BiPoly(), BiPoly::one()};
    auto [n, d] = bipoly_reduce(num, den);
    // normalize the pair: denominator in canonical form
    BiPoly dc = canonical_form(d);
    Rational unit;
    d.for_each_term([&](std::size_t i, std::size_t j, const Rational& c) {
        if (unit.is_zero() && !dc.coeff(i, j).is_zero()) unit = c / dc.coeff(i, j);
    });
    BiPoly nscaled = n * unit.inv();
    return {std::move(nscaled), std::move(dc)};
}

inline Frac eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Integer:
            return {BiPoly::constant(Rational(e.value)), BiPoly::one()};
        case Expr::Kind::VarX:
            return {BiPoly::monomial(1, 0, Rational::one()), BiPoly::one()};
        case Expr::Kind::VarY:
            return {BiPoly::monomial(0, 1, Rational::one()), BiPoly::one()};
        case Expr::Kind::Neg: {
            Frac a = eval(*e.lhs);
            return {-a.num, a.den};
        }
        case Expr::Kind::Add: {
            Frac a = eval(*e.lhs), b = eval(*e.rhs);
            return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
        }
        case Expr::Kind::Sub: {
            Frac a = eval(*e.lhs), b = eval(*e.rhs);
            return reduce(a.num * b.den - b.num * a.den, a.den * b.den);
        }
        case Expr::Kind::Mul: {
            Frac a = eval(*e.lhs), b = eval(*e.rhs);
            return reduce(a.num * b.num, a.den * b.den);
        }
        case Expr::Kind::Div: {
            Frac a = eval(*e.lhs), b = eval(*e.rhs);
            return reduce(a.num * b.den, a.den * b.num);
        }
        case Expr::Kind::Pow: {
            Frac a = eval(*e.lhs);
            return reduce(bipoly_pow(a.num, e.exponent), bipoly_pow(a.den, e.exponent));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail_parse

inline ExprPtr parse_expr(std::string_view text) { return detail_parse::Parser(text).parse(); }

// parse and normalize to a single reduced fraction A/B
inline RatFunXY parse_ratfun(std::string_view text) {
    ExprPtr e = parse_expr(text);
    detail_parse::Frac f = detail_parse::eval(*e);
    return {std::move(f.num), std::move(f.den)};
}

}  // namespace diagon
