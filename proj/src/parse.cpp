#include "kakeya/parse.hpp"

#include <cctype>

namespace kakeya {

RationalExpr RationalExpr::from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::constant(p.vars(), Scalar::one(p.ctx()));
    return RationalExpr{std::move(p), std::move(one)};
}

bool RationalExpr::is_polynomial() const {
    auto d = den.degree();
    return d && *d == 0;
}

RationalExpr RationalExpr::operator-() const { return RationalExpr{-num, den}; }

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr{a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr{a.num * b.num, a.den * b.den};
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
    if (b.num.is_zero()) throw ZeroPolynomial("division by zero expression");
    return RationalExpr{a.num * b.den, a.den * b.num};
}

RationalExpr RationalExpr::pow(unsigned e) const {
    RationalExpr r = from_poly(MultiPoly::constant(num.vars(), Scalar::one(num.ctx())));
    RationalExpr b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Scalar RationalExpr::eval(std::span<const Scalar> point) const {
    Scalar d = den.eval(point);
    if (d.is_zero()) throw ZeroInversion("expression denominator vanishes at the point");
    return num.eval(point) / d;
}

std::string RationalExpr::str() const {
    if (is_polynomial()) {
        Scalar c = den.terms().begin()->second;
        return (c.is_one() ? num : (Scalar::one(num.ctx()) / c) * num).str();
    }
    return "(" + num.str() + ")/(" + den.str() + ")";
}

namespace {

struct Token {
    enum Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::size_t pos;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) return {Token::End, start, ""};
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            return {Token::Int, start, std::string(src_.substr(start, i_ - start))};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            return {Token::Name, start, std::string(src_.substr(start, i_ - start))};
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, start, "+"};
            case '-': return {Token::Minus, start, "-"};
            case '*': return {Token::Star, start, "*"};
            case '/': return {Token::Slash, start, "/"};
            case '^': return {Token::Caret, start, "^"};
            case '(': return {Token::LParen, start, "("};
            case ')': return {Token::RParen, start, ")"};
        }
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, const VarSet& vars, const FieldCtx& ctx, bool allow_var_division)
        : lex_(src), vars_(vars), ctx_(ctx), allow_var_division_(allow_var_division) {
        advance();
    }

    RationalExpr parse() {
        RationalExpr e = expr();
        if (tok_.kind != Token::End) throw SyntaxError(tok_.pos, "trailing input");
        return e;
    }

private:
    void advance() { tok_ = lex_.next(); }

    RationalExpr one() const {
        return RationalExpr::from_poly(MultiPoly::constant(vars_, Scalar::one(ctx_)));
    }

    RationalExpr expr() {
        bool neg = false;
        if (tok_.kind == Token::Minus) {
            neg = true;
            advance();
        }
        RationalExpr acc = term();
        if (neg) acc = -acc;
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            RationalExpr rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    RationalExpr term() {
        RationalExpr acc = factor();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            bool div = tok_.kind == Token::Slash;
            std::size_t pos = tok_.pos;
            advance();
            RationalExpr rhs = factor();
            if (div) {
                if (rhs.is_zero()) throw SyntaxError(pos, "division by zero");
                bool rhs_constant = rhs.is_polynomial() &&
                                    (rhs.num.is_zero() || *rhs.num.degree() == 0);
                if (!allow_var_division_ && !rhs_constant)
                    throw SyntaxError(pos, "division by a non-constant expression");
                acc = acc / rhs;
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    RationalExpr factor() {
        RationalExpr base = primary();
        if (tok_.kind == Token::Caret) {
            advance();
            if (tok_.kind != Token::Int) throw SyntaxError(tok_.pos, "exponent must be an integer");
            unsigned long e = std::stoul(tok_.text);
            if (e > 100000) throw SyntaxError(tok_.pos, "exponent too large");
            advance();
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    RationalExpr primary() {
        switch (tok_.kind) {
            case Token::Int: {
                mpz_class n(tok_.text);
                advance();
                return RationalExpr::from_poly(
                    MultiPoly::constant(vars_, Scalar::from_mpz(ctx_, n)));
            }
            case Token::Name: {
                auto idx = vars_.index(tok_.text);
                if (!idx) throw UnknownVariable(tok_.text);
                advance();
                return RationalExpr::from_poly(MultiPoly::variable(vars_, ctx_, *idx));
            }
            case Token::LParen: {
                advance();
                RationalExpr e = expr();
                if (tok_.kind != Token::RParen) throw SyntaxError(tok_.pos, "expected ')'");
                advance();
                return e;
            }
            default:
                throw SyntaxError(tok_.pos, "expected an integer, a variable, or '('");
        }
    }

    Lexer lex_;
    Token tok_{Token::End, 0, ""};
    const VarSet& vars_;
    const FieldCtx& ctx_;
    bool allow_var_division_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarSet& vars, const FieldCtx& ctx) {
    RationalExpr e = Parser(text, vars, ctx, false).parse();
    // Division was restricted to constants, so den is a nonzero scalar.
    Scalar d = e.den.terms().begin()->second;
    return d.is_one() ? e.num : d.inv() * e.num;
}

RationalExpr parse_rational(std::string_view text, const VarSet& vars, const FieldCtx& ctx) {
    return Parser(text, vars, ctx, true).parse();
}

}  // namespace kakeya
