#include "optdeg/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace optdeg {
namespace {

struct Token {
    enum Kind { integer, ident, plus, minus, star, caret, lparen, rparen, slash, end } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.'))
                throw SyntaxError(i, "unexpected character after number (implicit multiplication is not allowed)");
            out.push_back({Token::integer, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Token::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::plus; break;
            case '-': kind = Token::minus; break;
            case '*': kind = Token::star; break;
            case '^': kind = Token::caret; break;
            case '(': kind = Token::lparen; break;
            case ')': kind = Token::rparen; break;
            case '/': kind = Token::slash; break;
            default: throw SyntaxError(i, std::string("unexpected character '") + s[i] + "'");
        }
        out.push_back({kind, std::string(1, s[i]), start});
        ++i;
    }
    out.push_back({Token::end, "", s.size()});
    return out;
}

template <class F>
class Parser {
public:
    Parser(std::string_view text, const RingPtr<F>& ring) : tokens_(tokenize(text)), ring_(ring) {}

    Polynomial<F> polynomial() {
        auto p = expression();
        if (peek().kind == Token::slash)
            throw SyntaxError(peek().pos, "division is only allowed between integer literals");
        expect_end();
        return p;
    }

    RationalFunction<F> rational_function() {
        auto num = expression();
        if (peek().kind != Token::slash) {
            expect_end();
            return RationalFunction<F>(std::move(num));
        }
        const auto slash_pos = next().pos;
        auto den = expression();
        if (peek().kind == Token::slash) throw SyntaxError(peek().pos, "more than one top-level division");
        expect_end();
        if (den.is_zero()) throw Error(Errc::zero_denominator, "zero denominator at position " + std::to_string(slash_pos));
        return RationalFunction<F>(std::move(num), std::move(den));
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(index_ + ahead, tokens_.size() - 1)]; }
    const Token& next() { return tokens_[index_++]; }

    void expect_end() {
        if (peek().kind != Token::end) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    }

    Polynomial<F> expression() {
        Polynomial<F> acc(ring_);
        bool negate = false;
        if (peek().kind == Token::plus || peek().kind == Token::minus) negate = next().kind == Token::minus;
        auto t = term();
        acc = negate ? -t : t;
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            bool minus = next().kind == Token::minus;
            auto rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial<F> term() {
        auto acc = factor();
        while (peek().kind == Token::star) {
            next();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial<F> factor() {
        auto base = primary();
        if (peek().kind != Token::caret) return base;
        next();
        if (peek().kind == Token::minus) throw Error(Errc::negative_exponent, "negative exponent at position " + std::to_string(peek().pos));
        if (peek().kind != Token::integer) throw SyntaxError(peek().pos, "expected an integer exponent");
        const auto& tok = next();
        mpz_class e(tok.text);
        if (e > std::numeric_limits<std::uint16_t>::max()) throw SyntaxError(tok.pos, "exponent too large");
        if (peek().kind == Token::caret) throw SyntaxError(peek().pos, "chained exponents need parentheses");
        return pow(base, static_cast<unsigned>(e.get_ui()));
    }

    Polynomial<F> primary() {
        const auto& tok = peek();
        switch (tok.kind) {
            case Token::integer: {
                next();
                mpz_class num(tok.text);
                if (peek().kind == Token::slash && peek(1).kind == Token::integer) {
                    next();
                    mpz_class den(next().text);
                    return Polynomial<F>::constant(ring_, ring_->field().from_fraction(num, den));
                }
                return Polynomial<F>::constant(ring_, ring_->field().from_mpz(num));
            }
            case Token::ident: {
                next();
                return Polynomial<F>::variable(ring_, ring_->require(tok.text));
            }
            case Token::lparen: {
                next();
                auto inner = expression();
                if (peek().kind != Token::rparen) throw SyntaxError(peek().pos, "expected ')'");
                next();
                return inner;
            }
            case Token::end: throw SyntaxError(tok.pos, "unexpected end of input");
            default: throw SyntaxError(tok.pos, "unexpected '" + tok.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    RingPtr<F> ring_;
};

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!m.exp[i]) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
    }
    return out;
}

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
    return Parser<F>(text, ring).polynomial();
}

template <class F>
RationalFunction<F> parse_rational_function(std::string_view text, const RingPtr<F>& ring) {
    return Parser<F>(text, ring).rational_function();
}

template <class F>
std::string format_element(const F& field, const typename F::Element& c) {
    return field.to_string(c);
}

template <class F>
std::string format_polynomial(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    const auto& field = p.field();
    std::string out;
    for (const auto& t : p.terms()) {
        const bool negative = field.is_negative(t.coeff);
        const auto magnitude = negative ? field.neg(t.coeff) : t.coeff;
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (t.mono.is_one()) {
            out += field.to_string(magnitude);
        } else {
            if (!field.is_one(magnitude)) out += field.to_string(magnitude) + '*';
            out += format_monomial(t.mono, p.ring()->names());
        }
    }
    return out;
}

template <class F>
std::string format_rational_function(const RationalFunction<F>& r) {
    if (r.den.is_one()) return format_polynomial(r.num);
    return "(" + format_polynomial(r.num) + ")/(" + format_polynomial(r.den) + ")";
}

#define OPTDEG_INSTANTIATE(F)                                                                     \
    template Polynomial<F> parse_polynomial<F>(std::string_view, const RingPtr<F>&);              \
    template RationalFunction<F> parse_rational_function<F>(std::string_view, const RingPtr<F>&); \
    template std::string format_polynomial<F>(const Polynomial<F>&);                               \
    template std::string format_rational_function<F>(const RationalFunction<F>&);                  \
    template std::string format_element<F>(const F&, const typename F::Element&);

OPTDEG_INSTANTIATE(PrimeField)
OPTDEG_INSTANTIATE(RationalField)

}  // namespace optdeg
