#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pvi/rational.hpp"

namespace pvi {

class Tower;

// Monomial in the base variable and the tower generators.  Generator
// exponents are always 0 or 1 (u_i^2 is rewritten to its defining polynomial
// on every multiplication), so a bitmask is enough.
struct Monomial {
    std::uint32_t base = 0;
    std::uint32_t gens = 0;

    unsigned total_degree() const { return base + __builtin_popcount(gens); }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // graded lex, base variable first, then generators in tower order
    friend bool operator<(const Monomial& a, const Monomial& b) {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.base != b.base) return a.base < b.base;
        // lower bit = earlier generator; earlier generator weighs more
        std::uint32_t diff = a.gens ^ b.gens;
        if (!diff) return false;
        std::uint32_t low = diff & (~diff + 1);
        return (b.gens & low) != 0;
    }
};

// Sparse multivariate polynomial, kept reduced modulo the tower relations.
class Poly {
  public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly variable_base(std::uint32_t exp = 1);
    static Poly generator(unsigned index);
    static Poly monomial(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_rational_constant(Rational& out) const;
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // 0 for the zero polynomial
    unsigned degree_base() const;
    std::uint32_t gens_used() const;
    bool base_only() const { return gens_used() == 0; }

    const Rational& leading_coefficient() const;  // under the monomial order
    Monomial leading_monomial() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly& scale(const Rational& c);

    friend bool operator==(const Poly&, const Poly&) = default;

    // Terms containing generator `index`, with that generator removed.
    Poly cofactor_of_gen(unsigned index) const;
    // Terms not containing generator `index`.
    Poly part_without_gen(unsigned index) const;
    // d/ds applied termwise to the base variable only.
    Poly partial_base() const;
    // substitute s -> s + shift (generators untouched); used by branching
    Poly shift_base(const Rational& shift) const;
    // substitute s -> 1/s and clear: returns P(1/s) * s^degree_base()
    Poly reverse_base() const;

    // gcd of all coefficients (positive), 0 for zero poly
    Rational content() const;
    // multiply so that coefficients are coprime integers, leading coeff > 0;
    // returns the factor that was divided out (original = factor * result)
    Poly primitive_part(Rational* factor = nullptr) const;

    // dense coefficients of a base-only polynomial, index = exponent
    std::vector<Rational> univariate() const;
    static Poly from_univariate(const std::vector<Rational>& coeffs);

    void add_term(const Monomial& m, const Rational& c);

  private:
    Terms terms_;
};

// Tower-aware products (generator squares are rewritten eagerly).
Poly mul(const Poly& a, const Poly& b, const Tower& tower);
Poly mul_term(const Poly& a, const Monomial& m, const Rational& c, const Tower& tower);
Poly pow(const Poly& a, unsigned e, const Tower& tower);

// --- univariate utilities over Q (dense, index = exponent) ---------------
namespace uni {

using UPoly = std::vector<Rational>;

void normalize(UPoly& p);  // drop trailing zeros
int degree(const UPoly& p);
bool is_zero(const UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
// exact division; throws if not exact
UPoly div_exact(const UPoly& a, const UPoly& b);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(UPoly a, UPoly b);  // monic gcd, primitive-PRS based
UPoly derivative(const UPoly& p);
// p = square^2 * sqfree, sqfree squarefree (Yun); all primitive
void squarefree_split(const UPoly& p, UPoly& square, UPoly& sqfree);

}  // namespace uni

}  // namespace pvi
