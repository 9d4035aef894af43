#include "frobsing/parse.hpp"

#include <cctype>

#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial run() {
        Polynomial f = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    const std::string& text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool negate = eat('-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            std::uint64_t e = uint_literal();
            if (e > Monomial::kMaxExponent) throw SizingError("literal exponent exceeds 2^31");
            return b.pow(e);
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial::constant(ring_, uint_literal());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size()) {
                char ch = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                    name += ch;
                    ++pos_;
                } else {
                    break;
                }
            }
            int idx = ring_->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        throw ParseError("expected a variable, number or '('", pos_);
    }

    std::uint64_t uint_literal() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected an unsigned integer", pos_);
        }
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (~std::uint64_t{0} - digit) / 10) {
                throw SizingError("integer literal overflows 64 bits");
            }
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    if (!ring) throw Error("parse without ring context");
    return Parser(text, ring).run();
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            std::uint32_t p) {
    return parse_polynomial(text, make_ring(p, vars));
}

}  // namespace frobsing
