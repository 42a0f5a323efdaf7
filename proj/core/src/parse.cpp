#include "binom/poly.hpp"

#include <cctype>

namespace binom {
namespace {

constexpr long kMaxExponent = 100000;

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    LaurentPoly parse() {
        skip_space();
        if (at_end())
            fail("empty expression");
        LaurentPoly f = expr();
        skip_space();
        if (!at_end())
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        LaurentPoly f = term();
        for (;;) {
            if (accept('+'))
                f = f + term();
            else if (accept('-'))
                f = f - term();
            else
                return f;
        }
    }

    LaurentPoly term() {
        LaurentPoly f = unary();
        for (;;) {
            if (accept('*')) {
                f = f * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                LaurentPoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                f = f.scaled(1 / d.terms()[0].coeff);
            } else {
                return f;
            }
        }
    }

    LaurentPoly unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    LaurentPoly power() {
        LaurentPoly base = primary();
        if (!accept('^'))
            return base;
        skip_space();
        std::size_t at = pos_;
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer exponent");
        long k = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            k = k * 10 + (text_[pos_++] - '0');
            if (k > kMaxExponent) {
                pos_ = at;
                fail("exponent too large");
            }
        }
        if (!negative)
            return base.pow(static_cast<unsigned>(k));
        if (!ring_->laurent()) {
            pos_ = at;
            fail("negative exponent in a non-Laurent ring");
        }
        if (base.size() != 1) {
            pos_ = at;
            fail("negative exponent applied to a non-monomial");
        }
        const Term& t = base.terms()[0];
        auto inverse = LaurentPoly::monomial(ring_, -t.exp, 1 / t.coeff);
        return inverse.pow(static_cast<unsigned>(k));
    }

    LaurentPoly primary() {
        skip_space();
        if (at_end())
            fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Integer value(std::string(text_.substr(start, pos_ - start)));
            return LaurentPoly::constant(ring_, Rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                 text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return LaurentPoly::variable(ring_, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_poly(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

} // namespace binom
