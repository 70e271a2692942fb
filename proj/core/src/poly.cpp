#include "pvi/poly.hpp"

#include <cassert>

#include "pvi/errors.hpp"
#include "pvi/tower.hpp"

namespace pvi {

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

Poly Poly::variable_base(std::uint32_t exp) {
    Poly p;
    p.terms_.emplace(Monomial{exp, 0}, Rational(1));
    return p;
}

Poly Poly::generator(unsigned index) {
    Poly p;
    p.terms_.emplace(Monomial{0, 1u << index}, Rational(1));
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool Poly::is_rational_constant(Rational& out) const {
    if (terms_.empty()) {
        out = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) {
        out = terms_.begin()->second;
        return true;
    }
    return false;
}

unsigned Poly::degree_base() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.base);
    return d;
}

std::uint32_t Poly::gens_used() const {
    std::uint32_t g = 0;
    for (const auto& [m, c] : terms_) g |= m.gens;
    return g;
}

const Rational& Poly::leading_coefficient() const {
    static const Rational kZero(0);
    if (terms_.empty()) return kZero;
    return terms_.rbegin()->second;
}

Monomial Poly::leading_monomial() const {
    if (terms_.empty()) return Monomial{};
    return terms_.rbegin()->first;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::cofactor_of_gen(unsigned index) const {
    std::uint32_t bit = 1u << index;
    Poly out;
    for (const auto& [m, c] : terms_)
        if (m.gens & bit) out.add_term(Monomial{m.base, m.gens & ~bit}, c);
    return out;
}

Poly Poly::part_without_gen(unsigned index) const {
    std::uint32_t bit = 1u << index;
    Poly out;
    for (const auto& [m, c] : terms_)
        if (!(m.gens & bit)) out.add_term(m, c);
    return out;
}

Poly Poly::partial_base() const {
    Poly out;
    for (const auto& [m, c] : terms_)
        if (m.base > 0) out.add_term(Monomial{m.base - 1, m.gens}, c * Rational(m.base));
    return out;
}

Poly Poly::shift_base(const Rational& shift) const {
    // s -> s + shift via Horner on each generator block
    Poly out;
    for (const auto& [m, c] : terms_) {
        // expand (s + shift)^base
        std::vector<Rational> binom(m.base + 1);
        binom[0] = 1;
        for (std::uint32_t i = 1; i <= m.base; ++i) {
            binom[i] = 1;
            for (std::uint32_t j = i - 1; j >= 1; --j) binom[j] += binom[j - 1];
        }
        Rational p(1);
        for (std::uint32_t k = 0; k <= m.base; ++k) {
            // coefficient of s^(base-k): C(base,k) shift^k
            out.add_term(Monomial{m.base - k, m.gens}, c * binom[k] * p);
            p *= shift;
        }
    }
    return out;
}

Poly Poly::reverse_base() const {
    unsigned d = degree_base();
    Poly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{d - m.base, m.gens}, c);
    return out;
}

Rational Poly::content() const {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(0);
    return rat(num_gcd, den_lcm);
}

Poly Poly::primitive_part(Rational* factor) const {
    if (terms_.empty()) {
        if (factor) *factor = 1;
        return *this;
    }
    Rational c = content();
    if (leading_coefficient() < 0) c = -c;
    if (factor) *factor = c;
    Poly out = *this;
    out.scale(Rational(1) / c);
    return out;
}

std::vector<Rational> Poly::univariate() const {
    std::vector<Rational> out(terms_.empty() ? 0 : degree_base() + 1);
    for (const auto& [m, c] : terms_) {
        if (m.gens) throw Error("univariate(): polynomial involves generators");
        out[m.base] = c;
    }
    return out;
}

Poly Poly::from_univariate(const std::vector<Rational>& coeffs) {
    Poly out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out.add_term(Monomial{static_cast<std::uint32_t>(i), 0}, coeffs[i]);
    return out;
}

// --- tower-aware multiplication -------------------------------------------

Poly mul_term(const Poly& a, const Monomial& m, const Rational& c, const Tower& tower) {
    Poly acc;
    if (c == 0 || a.is_zero()) return acc;
    for (const auto& [ma, ca] : a.terms()) {
        Monomial prod{ma.base + m.base, ma.gens ^ m.gens};
        std::uint32_t overlap = ma.gens & m.gens;
        Rational coeff = ca * c;
        if (!overlap) {
            acc.add_term(prod, coeff);
            continue;
        }
        // squared generators: multiply in the defining polynomials
        Poly partial = Poly::monomial(prod, coeff);
        while (overlap) {
            unsigned idx = __builtin_ctz(overlap);
            overlap &= overlap - 1;
            partial = mul(partial, tower.relation(idx), tower);
        }
        acc += partial;
    }
    return acc;
}

Poly mul(const Poly& a, const Poly& b, const Tower& tower) {
    Poly acc;
    if (a.is_zero() || b.is_zero()) return acc;
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    for (const auto& [m, c] : small.terms()) acc += mul_term(big, m, c, tower);
    return acc;
}

Poly pow(const Poly& a, unsigned e, const Tower& tower) {
    Poly out = Poly::constant(Rational(1));
    Poly base = a;
    while (e) {
        if (e & 1) out = mul(out, base, tower);
        e >>= 1;
        if (e) base = mul(base, base, tower);
    }
    return out;
}

// --- univariate utilities ---------------------------------------------------

namespace uni {

void normalize(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const UPoly& p) { return p.empty(); }

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    normalize(out);
    return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw DivisionByZero("univariate division by zero");
    r = a;
    normalize(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
    const Rational& lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        Rational f = r.back() / lead;
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        normalize(r);
    }
    normalize(q);
}

UPoly div_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    if (!r.empty()) throw Error("univariate division not exact");
    return q;
}

namespace {

// integer content + primitive part over Z after clearing denominators
void make_integer_primitive(UPoly& p) {
    if (p.empty()) return;
    Integer lcm(1);
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer g(0);
    for (auto& c : p) {
        c *= Rational(lcm);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& c : p) c /= Rational(g);
    if (p.back() < 0)
        for (auto& c : p) c = -c;
}

}  // namespace

UPoly gcd(UPoly a, UPoly b) {
    normalize(a);
    normalize(b);
    if (a.empty()) {
        make_integer_primitive(b);
        return b;
    }
    if (b.empty()) {
        make_integer_primitive(a);
        return a;
    }
    make_integer_primitive(a);
    make_integer_primitive(b);
    if (a.size() < b.size()) a.swap(b);
    // primitive PRS
    while (!b.empty()) {
        UPoly q, r;
        // pseudo-remainder: scale a by lead(b)^(deg a - deg b + 1)
        long k = degree(a) - degree(b) + 1;
        UPoly aa = a;
        Rational lead = b.back();
        Rational f = pow_rational(lead, k);
        for (auto& c : aa) c *= f;
        divmod(aa, b, q, r);
        a.swap(b);
        b.swap(r);
        make_integer_primitive(b);
    }
    make_integer_primitive(a);
    return a;
}

UPoly derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rational(static_cast<long>(i));
    return out;
}

void squarefree_split(const UPoly& p, UPoly& square, UPoly& sqfree) {
    square = {Rational(1)};
    sqfree = p;
    normalize(sqfree);
    if (sqfree.size() <= 1) return;
    // Yun's algorithm on the primitive part
    UPoly w = sqfree;
    make_integer_primitive(w);
    UPoly d = derivative(w);
    UPoly g = gcd(w, d);
    if (degree(g) == 0) {
        sqfree = w;
        return;
    }
    // p = prod a_i^i ; square part = prod a_i^(i/2), odd part = prod_{i odd} a_i
    UPoly b = div_exact(w, g);
    UPoly c = div_exact(d, g);
    UPoly dd = c;
    {
        UPoly bd = derivative(b);
        dd.resize(std::max(dd.size(), bd.size()), Rational(0));
        for (std::size_t i = 0; i < bd.size(); ++i) dd[i] -= bd[i];
        normalize(dd);
    }
    UPoly sq = {Rational(1)};
    UPoly odd = {Rational(1)};
    unsigned i = 1;
    while (degree(b) > 0) {
        UPoly ai = gcd(b, dd);
        if (i % 2) odd = mul(odd, ai);
        for (unsigned j = 0; j < i / 2; ++j) sq = mul(sq, ai);
        b = div_exact(b, ai);
        UPoly cc = div_exact(dd, ai);
        UPoly bd = derivative(b);
        dd = cc;
        dd.resize(std::max(dd.size(), bd.size()), Rational(0));
        for (std::size_t k2 = 0; k2 < bd.size(); ++k2) dd[k2] -= bd[k2];
        normalize(dd);
        ++i;
    }
    make_integer_primitive(sq);
    make_integer_primitive(odd);
    square = sq;
    sqfree = odd;
}

}  // namespace uni

}  // namespace pvi
