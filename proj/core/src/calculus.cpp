#include "pvi/calculus.hpp"

#include <vector>

#include "pvi/errors.hpp"

namespace pvi {

namespace {

TowerElement d_poly(const Poly& p, const TowerPtr& tower,
                    std::vector<TowerElement>& gen_deriv_cache,
                    std::vector<bool>& cached);

// u_i' = p_i' * u_i / (2 p_i)
TowerElement d_gen(unsigned idx, const TowerPtr& tower,
                   std::vector<TowerElement>& cache, std::vector<bool>& cached) {
    if (cached[idx]) return cache[idx];
    const Poly& rel = tower->relation(idx);
    TowerElement dp = d_poly(rel, tower, cache, cached);
    TowerElement u = TowerElement::generator(tower, idx);
    TowerElement p = TowerElement::from_poly(tower, rel);
    TowerElement result = dp * u / (Rational(2) * p);
    cache[idx] = result;
    cached[idx] = true;
    return result;
}

TowerElement d_poly(const Poly& p, const TowerPtr& tower,
                    std::vector<TowerElement>& cache, std::vector<bool>& cached) {
    TowerElement out = TowerElement::from_poly(tower, p.partial_base());
    std::uint32_t gens = p.gens_used();
    while (gens) {
        unsigned idx = __builtin_ctz(gens);
        gens &= gens - 1;
        Poly cof = p.cofactor_of_gen(idx);
        out += TowerElement::from_poly(tower, cof) * d_gen(idx, tower, cache, cached);
    }
    return out;
}

}  // namespace

TowerElement derivative(const TowerElement& x) {
    const TowerPtr& t = x.tower();
    std::vector<TowerElement> cache(t->size());
    std::vector<bool> cached(t->size(), false);
    TowerElement dn = d_poly(x.num(), t, cache, cached);
    TowerElement dd = d_poly(x.den(), t, cache, cached);
    TowerElement num = TowerElement::from_poly(t, x.num());
    TowerElement den = TowerElement::from_poly(t, x.den());
    return (dn * den - num * dd) / (den * den);
}

TowerElement derivative_along(const TowerElement& y, const TowerElement& t) {
    TowerElement dt = derivative(t);
    if (dt.is_zero())
        throw DegenerateSolution("t is constant along the curve (dt/ds = 0)");
    return derivative(y) / dt;
}

}  // namespace pvi
