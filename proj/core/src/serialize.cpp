#include "pvi/serialize.hpp"

#include <istream>
#include <sstream>

#include "pvi/errors.hpp"

namespace pvi {

std::string poly_to_text(const Poly& p, const Tower& tower) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        if (m.base == 1)
            os << "*" << tower.base_name();
        else if (m.base > 1)
            os << "*" << tower.base_name() << "^" << m.base;
        for (unsigned i = 0; i < 32; ++i)
            if (m.gens & (1u << i)) os << "*" << tower.gen_name(i);
    }
    return os.str();
}

std::string element_to_text(const TowerElement& x) {
    return "(" + poly_to_text(x.num(), *x.tower()) + ") / (" +
           poly_to_text(x.den(), *x.tower()) + ")";
}

std::string tower_to_text(const Tower& t) {
    std::ostringstream os;
    os << "base " << t.base_name() << "\n";
    for (unsigned i = 0; i < t.size(); ++i)
        os << "gen " << t.gen_name(i) << "^2 = " << poly_to_text(t.relation(i), t) << "\n";
    return os.str();
}

namespace {

struct TermLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
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
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        return text.substr(start, pos - start);
    }
};

}  // namespace

Poly poly_from_text(const std::string& text, const Tower& tower) {
    TermLexer lex{text};
    Poly out;
    if (lex.eof()) throw ParseError("empty polynomial text");
    bool negate = false;
    if (lex.peek() == '0') {
        lex.consume('0');
        if (lex.eof()) return out;
        throw ParseError("malformed polynomial: " + text);
    }
    while (!lex.eof()) {
        // coefficient
        auto num = lex.number();
        auto coeff = parse_rational(num);
        if (!coeff) throw ParseError("bad coefficient '" + num + "' in: " + text);
        Rational c = negate ? Rational(-*coeff) : *coeff;
        Monomial m;
        while (lex.consume('*')) {
            std::string name = lex.ident();
            unsigned exp = 1;
            if (lex.consume('^')) {
                auto e = lex.number();
                auto ev = parse_rational(e);
                if (!ev || !is_integer(*ev) || *ev < 0)
                    throw ParseError("bad exponent in: " + text);
                exp = static_cast<unsigned>(ev->get_num().get_ui());
            }
            if (name == tower.base_name()) {
                m.base += exp;
            } else {
                int idx = tower.find_gen(name);
                if (idx < 0) throw ParseError("unknown variable '" + name + "' in: " + text);
                if (exp != 1) throw ParseError("generator exponent must be 1 in: " + text);
                m.gens |= 1u << idx;
            }
        }
        out.add_term(m, c);
        if (lex.eof()) break;
        if (lex.consume('+')) {
            negate = false;
        } else if (lex.consume('-')) {
            negate = true;
        } else {
            throw ParseError("expected '+' between terms in: " + text);
        }
    }
    return out;
}

TowerElement element_from_text(const std::string& text, const TowerPtr& tower) {
    auto open1 = text.find('(');
    auto close1 = text.find(')');
    if (open1 == std::string::npos || close1 == std::string::npos)
        throw ParseError("element text must be '(num) / (den)': " + text);
    auto slash = text.find('/', close1);
    auto open2 = text.find('(', slash);
    auto close2 = text.rfind(')');
    if (slash == std::string::npos || open2 == std::string::npos || close2 <= open2)
        throw ParseError("element text must be '(num) / (den)': " + text);
    Poly num = poly_from_text(text.substr(open1 + 1, close1 - open1 - 1), *tower);
    Poly den = poly_from_text(text.substr(open2 + 1, close2 - open2 - 1), *tower);
    return TowerElement::from_fraction(tower, std::move(num), std::move(den));
}

TowerPtr tower_from_text(std::istream& in) {
    std::string line;
    TowerPtr tower;
    while (in.peek() != EOF) {
        std::streampos before = in.tellg();
        if (!std::getline(in, line)) break;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "base") {
            std::string name;
            ls >> name;
            if (name.empty()) throw ParseError("base line without a name");
            tower = Tower::rational(name);
        } else if (key == "gen") {
            if (!tower) throw ParseError("gen line before base line");
            std::string decl;
            ls >> decl;
            auto caret = decl.find("^2");
            if (caret == std::string::npos) throw ParseError("gen line must be 'gen u^2 = ...'");
            std::string name = decl.substr(0, caret);
            std::string rest;
            std::getline(ls, rest);
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError("gen line must be 'gen u^2 = ...'");
            Poly rel = poly_from_text(rest.substr(eq + 1), *tower);
            tower = tower->extended(name, std::move(rel));
        } else {
            in.seekg(before);
            break;
        }
    }
    if (!tower) throw ParseError("missing base line");
    return tower;
}

}  // namespace pvi
