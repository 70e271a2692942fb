#include "pvi/expr.hpp"

#include <cctype>

#include "pvi/errors.hpp"

namespace pvi {

ExprContext::ExprContext(TowerPtr tower) : tower_(std::move(tower)) {
    symbols_.emplace(tower_->base_name(), TowerElement::base(tower_));
    for (unsigned i = 0; i < tower_->size(); ++i)
        symbols_.emplace(tower_->gen_name(i), TowerElement::generator(tower_, i));
}

void ExprContext::define(const std::string& name, TowerElement value) {
    if (symbols_.count(name)) throw ParseError("symbol already defined: " + name);
    symbols_.emplace(name, std::move(value));
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const TowerPtr& tower;
    const std::map<std::string, TowerElement, std::less<>>& symbols;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos) + " in: " +
                         std::string(text));
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    TowerElement expr() {
        TowerElement acc = term();
        while (true) {
            if (consume('+'))
                acc += term();
            else if (consume('-'))
                acc -= term();
            else
                return acc;
        }
    }

    TowerElement term() {
        TowerElement acc = factor();
        while (true) {
            if (consume('*')) {
                acc *= factor();
            } else if (consume('/')) {
                TowerElement d = factor();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    TowerElement factor() {
        if (consume('-')) return -factor();
        TowerElement base = primary();
        if (consume('^')) {
            bool neg = consume('-');
            long e = integer();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an integer exponent");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    TowerElement primary() {
        skip_ws();
        if (consume('(')) {
            TowerElement e = expr();
            if (!consume(')')) fail("missing ')'");
            return e;
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            Integer n(std::string(text.substr(start, pos - start)));
            return TowerElement::constant(tower, Rational(n));
        }
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                  text[pos] == '_')) {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            auto it = symbols.find(name);
            if (it == symbols.end()) fail("unknown symbol '" + name + "'");
            return it->second;
        }
        fail("unexpected character");
    }
};

}  // namespace

TowerElement ExprContext::parse(std::string_view text) const {
    Parser p{text, 0, tower_, symbols_};
    TowerElement out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace pvi
