#include "pvi/element.hpp"

#include <sstream>

#include "pvi/errors.hpp"

namespace pvi {

TowerElement::TowerElement(TowerPtr t, Poly num, Poly den)
    : tower_(std::move(t)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

TowerElement TowerElement::zero(TowerPtr t) {
    return TowerElement(std::move(t), Poly{}, Poly::constant(Rational(1)));
}

TowerElement TowerElement::one(TowerPtr t) {
    return constant(std::move(t), Rational(1));
}

TowerElement TowerElement::constant(TowerPtr t, const Rational& c) {
    return TowerElement(std::move(t), Poly::constant(c), Poly::constant(Rational(1)));
}

TowerElement TowerElement::base(TowerPtr t, std::uint32_t exp) {
    return TowerElement(std::move(t), Poly::variable_base(exp), Poly::constant(Rational(1)));
}

TowerElement TowerElement::generator(TowerPtr t, unsigned index) {
    if (index >= t->size()) throw TowerError("generator index out of range");
    return TowerElement(std::move(t), Poly::generator(index), Poly::constant(Rational(1)));
}

TowerElement TowerElement::from_poly(TowerPtr t, Poly p) {
    return TowerElement(std::move(t), std::move(p), Poly::constant(Rational(1)));
}

TowerElement TowerElement::from_fraction(TowerPtr t, Poly num, Poly den) {
    return TowerElement(std::move(t), std::move(num), std::move(den));
}

bool TowerElement::is_one() const {
    Rational c;
    return is_rational(c) && c == 1;
}

bool TowerElement::is_rational(Rational& out) const {
    Rational n, d;
    if (num_.is_rational_constant(n) && den_.is_rational_constant(d)) {
        out = n / d;
        return true;
    }
    return false;
}

void TowerElement::normalize() {
    if (!tower_) tower_ = Tower::rational();
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    // 1. make the denominator generator-free by conjugation, top generator down
    std::uint32_t gens = den_.gens_used();
    while (gens) {
        unsigned idx = 31 - __builtin_clz(gens);
        Poly d0 = den_.part_without_gen(idx);
        Poly d1 = den_.cofactor_of_gen(idx);
        // conj = d0 - d1*u_idx ; den*conj = d0^2 - d1^2 * p_idx
        Poly conj = d0 - mul_term(d1, Monomial{0, 1u << idx}, Rational(1), *tower_);
        Poly new_den = mul(d0, d0, *tower_) -
                       mul(mul(d1, d1, *tower_), tower_->relation(idx), *tower_);
        if (new_den.is_zero())
            throw TowerError("tower has zero divisors (non-squarefree radicand?)");
        num_ = mul(num_, conj, *tower_);
        den_ = std::move(new_den);
        gens = den_.gens_used();
    }
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    // 2. cancel the univariate gcd of the denominator and the numerator's
    //    base-variable columns
    uni::UPoly d = den_.univariate();
    if (uni::degree(d) > 0) {
        uni::UPoly g = d;
        std::map<std::uint32_t, uni::UPoly> columns;
        for (const auto& [m, c] : num_.terms()) {
            auto& col = columns[m.gens];
            if (col.size() <= m.base) col.resize(m.base + 1, Rational(0));
            col[m.base] = c;
        }
        for (auto& [mask, col] : columns) {
            uni::normalize(col);
            g = uni::gcd(g, col);
            if (uni::degree(g) == 0) break;
        }
        if (uni::degree(g) > 0) {
            d = uni::div_exact(d, g);
            Poly new_num;
            for (auto& [mask, col] : columns) {
                uni::UPoly q = uni::div_exact(col, g);
                for (std::size_t i = 0; i < q.size(); ++i)
                    if (q[i] != 0) new_num.add_term(Monomial{static_cast<std::uint32_t>(i), mask}, q[i]);
            }
            num_ = std::move(new_num);
            den_ = Poly::from_univariate(d);
        }
    }
    // 3. monic denominator
    const Rational& lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_.scale(inv);
        den_.scale(inv);
    }
}

TowerElement TowerElement::operator-() const {
    TowerElement out = *this;
    out.num_ = -out.num_;
    return out;
}

namespace {

void align(const TowerElement& a, const TowerElement& b, TowerPtr& t, const TowerElement*& pa,
           const TowerElement*& pb, TowerElement& sa, TowerElement& sb) {
    t = join(a.tower(), b.tower());
    if (a.tower() == t || a.tower()->same_as(*t)) {
        pa = &a;
    } else {
        sa = a.lifted(t);
        pa = &sa;
    }
    if (b.tower() == t || b.tower()->same_as(*t)) {
        pb = &b;
    } else {
        sb = b.lifted(t);
        pb = &sb;
    }
}

}  // namespace

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    TowerPtr t;
    const TowerElement *pa, *pb;
    TowerElement sa, sb;
    align(a, b, t, pa, pb, sa, sb);
    Poly num = mul(pa->num(), pb->den(), *t) + mul(pb->num(), pa->den(), *t);
    Poly den = mul(pa->den(), pb->den(), *t);
    return TowerElement::from_fraction(t, std::move(num), std::move(den));
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) {
    TowerPtr t;
    const TowerElement *pa, *pb;
    TowerElement sa, sb;
    align(a, b, t, pa, pb, sa, sb);
    Poly num = mul(pa->num(), pb->den(), *t) - mul(pb->num(), pa->den(), *t);
    Poly den = mul(pa->den(), pb->den(), *t);
    return TowerElement::from_fraction(t, std::move(num), std::move(den));
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    TowerPtr t;
    const TowerElement *pa, *pb;
    TowerElement sa, sb;
    align(a, b, t, pa, pb, sa, sb);
    Poly num = mul(pa->num(), pb->num(), *t);
    Poly den = mul(pa->den(), pb->den(), *t);
    return TowerElement::from_fraction(t, std::move(num), std::move(den));
}

TowerElement operator/(const TowerElement& a, const TowerElement& b) {
    if (b.is_zero()) throw DivisionByZero();
    TowerPtr t;
    const TowerElement *pa, *pb;
    TowerElement sa, sb;
    align(a, b, t, pa, pb, sa, sb);
    Poly num = mul(pa->num(), pb->den(), *t);
    Poly den = mul(pa->den(), pb->num(), *t);
    return TowerElement::from_fraction(t, std::move(num), std::move(den));
}

TowerElement TowerElement::operator+(const Rational& c) const {
    return *this + constant(tower_, c);
}
TowerElement TowerElement::operator-(const Rational& c) const {
    return *this - constant(tower_, c);
}
TowerElement TowerElement::operator*(const Rational& c) const {
    TowerElement out = *this;
    out.num_.scale(c);
    if (c == 0) out.den_ = Poly::constant(Rational(1));
    return out;
}
TowerElement TowerElement::operator/(const Rational& c) const {
    if (c == 0) throw DivisionByZero();
    TowerElement out = *this;
    out.num_.scale(Rational(1) / c);
    return out;
}

TowerElement operator+(const Rational& c, const TowerElement& x) { return x + c; }
TowerElement operator-(const Rational& c, const TowerElement& x) { return (-x) + c; }
TowerElement operator*(const Rational& c, const TowerElement& x) { return x * c; }

TowerElement TowerElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return TowerElement::from_fraction(tower_, den_, num_);
}

TowerElement TowerElement::pow(long e) const {
    if (e == 0) return one(tower_);
    TowerElement b = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? e : -e;
    TowerElement out = one(tower_);
    while (n) {
        if (n & 1) out *= b;
        b = n > 1 ? b * b : b;
        n >>= 1;
    }
    return out;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
    if (a.tower() == b.tower() || a.tower()->same_as(*b.tower()))
        return a.num() == b.num() && a.den() == b.den();
    TowerPtr t;
    const TowerElement *pa, *pb;
    TowerElement sa, sb;
    align(a, b, t, pa, pb, sa, sb);
    return pa->num() == pb->num() && pa->den() == pb->den();
}

TowerElement TowerElement::lifted(TowerPtr to) const {
    if (!tower_->is_prefix_of(*to))
        throw TowerError("cannot lift: " + tower_->describe() + " is not a prefix of " +
                         to->describe());
    TowerElement out = *this;
    out.tower_ = std::move(to);
    return out;
}

std::string TowerElement::describe() const {
    std::ostringstream os;
    auto poly_str = [&](const Poly& p) {
        if (p.is_zero()) {
            os << "0";
            return;
        }
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const auto& [m, c] = *it;
            if (!first) os << " + ";
            first = false;
            os << to_string(c);
            if (m.base) os << "*" << tower_->base_name() << "^" << m.base;
            for (unsigned i = 0; i < 32; ++i)
                if (m.gens & (1u << i)) os << "*" << tower_->gen_name(i);
        }
    };
    os << "(";
    poly_str(num_);
    os << ") / (";
    poly_str(den_);
    os << ")";
    return os.str();
}

// --- TowerMap ---------------------------------------------------------------

TowerElement TowerMap::apply(const Poly& p) const {
    TowerElement acc = TowerElement::zero(target);
    // cache base powers
    std::vector<TowerElement> base_pow{TowerElement::one(target)};
    for (const auto& [m, c] : p.terms()) {
        while (base_pow.size() <= m.base) base_pow.push_back(base_pow.back() * base_image);
        TowerElement term = base_pow[m.base] * c;
        std::uint32_t g = m.gens;
        while (g) {
            unsigned idx = __builtin_ctz(g);
            g &= g - 1;
            if (idx >= gen_images.size()) throw TowerError("tower map missing a generator image");
            term *= gen_images[idx];
        }
        acc += term;
    }
    return acc;
}

TowerElement TowerMap::apply(const TowerElement& x) const {
    return apply(x.num()) / apply(x.den());
}

void TowerMap::verify(const Tower& source) const {
    if (gen_images.size() < source.size())
        throw TowerError("tower map missing generator images");
    for (unsigned i = 0; i < source.size(); ++i) {
        TowerElement lhs = gen_images[i] * gen_images[i];
        TowerElement rhs = apply(source.relation(i));
        if (!(lhs == rhs))
            throw TowerError("tower map does not respect relation of " + source.gen_name(i));
    }
}

}  // namespace pvi
