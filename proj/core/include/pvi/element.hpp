#pragma once

#include <string>

#include "pvi/poly.hpp"
#include "pvi/tower.hpp"

namespace pvi {

// Element of the function field of a tower: num/den, reduced modulo the
// tower relations, with the denominator rationalized (generator-free),
// cancelled against the numerator and made monic.  Representation is
// canonical: equal elements compare equal structurally.
class TowerElement {
  public:
    TowerElement() = default;  // zero over Q(s)

    static TowerElement zero(TowerPtr t);
    static TowerElement one(TowerPtr t);
    static TowerElement constant(TowerPtr t, const Rational& c);
    static TowerElement base(TowerPtr t, std::uint32_t exp = 1);
    static TowerElement generator(TowerPtr t, unsigned index);
    static TowerElement from_poly(TowerPtr t, Poly p);
    static TowerElement from_fraction(TowerPtr t, Poly num, Poly den);

    const TowerPtr& tower() const { return tower_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational(Rational& out) const;
    std::size_t term_count() const { return num_.size() + den_.size(); }

    TowerElement operator-() const;
    friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator/(const TowerElement& a, const TowerElement& b);
    TowerElement& operator+=(const TowerElement& o) { return *this = *this + o; }
    TowerElement& operator-=(const TowerElement& o) { return *this = *this - o; }
    TowerElement& operator*=(const TowerElement& o) { return *this = *this * o; }
    TowerElement& operator/=(const TowerElement& o) { return *this = *this / o; }

    TowerElement operator+(const Rational& c) const;
    TowerElement operator-(const Rational& c) const;
    TowerElement operator*(const Rational& c) const;
    TowerElement operator/(const Rational& c) const;

    TowerElement inverse() const;
    TowerElement pow(long e) const;

    friend bool operator==(const TowerElement& a, const TowerElement& b);
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

    // Re-interpret on a tower that this element's tower is a prefix of.
    TowerElement lifted(TowerPtr to) const;

    std::string describe() const;

  private:
    TowerElement(TowerPtr t, Poly num, Poly den);
    void normalize();

    TowerPtr tower_;
    Poly num_;
    Poly den_ = Poly::constant(Rational(1));
};

// Arithmetic helpers used throughout the transformation formulas.
TowerElement operator+(const Rational& c, const TowerElement& x);
TowerElement operator-(const Rational& c, const TowerElement& x);
TowerElement operator*(const Rational& c, const TowerElement& x);

// Substitution homomorphism between towers: s -> base_image,
// u_i -> gen_images[i].  apply() verifies nothing; use verify() once per map
// to check gen_images[i]^2 == image(relation_i) exactly.
struct TowerMap {
    TowerPtr target;
    TowerElement base_image;
    std::vector<TowerElement> gen_images;

    TowerElement apply(const TowerElement& x) const;
    TowerElement apply(const Poly& p) const;
    // throws TowerError if some generator image does not satisfy its relation
    void verify(const Tower& source) const;
};

}  // namespace pvi
