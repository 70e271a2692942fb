#include "pvi/sqrt_adjoin.hpp"

#include "pvi/errors.hpp"

namespace pvi {

SqrtResult sqrt_adjoin(const TowerPtr& tower, const TowerElement& radicand,
                       const std::string& name_hint) {
    if (radicand.is_zero()) throw TowerError("cannot adjoin the square root of zero");
    TowerPtr t = join(tower, radicand.tower());
    // radicand = N/D  ->  sqrt(N/D) = sqrt(N*D)/D
    Poly M = mul(radicand.num(), radicand.den(), *t);
    TowerElement outer = TowerElement::from_poly(t, radicand.den()).inverse();

    // rational square content: M = (a/b) * P with P integer-primitive, lc > 0
    Rational c;
    Poly P = M.primitive_part(&c);
    Integer k, m;
    split_square(c.get_num() * c.get_den(), k, m);
    Rational scalar = rat(k, c.get_den());  // sqrt(a/b) = k*sqrt(m)/b

    Poly relation;
    Poly square_poly = Poly::constant(Rational(1));
    if (P.base_only()) {
        uni::UPoly S, F;
        uni::squarefree_split(P.univariate(), S, F);
        square_poly = Poly::from_univariate(S);
        relation = Poly::from_univariate(F);
    } else {
        // pull even powers of the base variable out
        std::uint32_t emin = UINT32_MAX;
        for (const auto& [mo, co] : P.terms()) emin = std::min(emin, mo.base);
        std::uint32_t h = emin / 2;
        if (h > 0) {
            Poly shifted;
            for (const auto& [mo, co] : P.terms())
                shifted.add_term(Monomial{mo.base - 2 * h, mo.gens}, co);
            P = std::move(shifted);
            square_poly = Poly::variable_base(h);
        }
        relation = P;
    }
    relation.scale(Rational(m));

    Rational rel_const;
    if (relation.is_rational_constant(rel_const) && rel_const == 1) {
        // the radicand was a perfect square
        TowerElement root =
            outer * TowerElement::from_poly(t, square_poly) * scalar;
        return SqrtResult{t, std::move(root), true};
    }

    int existing = t->find_relation(relation);
    TowerPtr extended_tower;
    unsigned idx;
    bool reused = false;
    if (existing >= 0) {
        extended_tower = t;
        idx = static_cast<unsigned>(existing);
        reused = true;
    } else {
        std::string name = name_hint;
        int suffix = 1;
        while (t->find_gen(name) >= 0 || name == t->base_name())
            name = name_hint + std::to_string(suffix++);
        extended_tower = t->extended(name, relation);
        idx = extended_tower->size() - 1;
    }
    TowerElement root = outer.lifted(extended_tower) *
                        TowerElement::from_poly(extended_tower, square_poly) *
                        TowerElement::generator(extended_tower, idx) * scalar;
    return SqrtResult{extended_tower, std::move(root), reused};
}

void RootResolver::add_known_root(const TowerElement& radicand, const TowerElement& root) {
    if (!(root * root == radicand))
        throw TowerError("known root does not square to its radicand");
    known_.emplace_back(radicand, root);
}

TowerElement RootResolver::resolve(TowerPtr& tower, const TowerElement& radicand,
                                   const std::string& name_hint) {
    for (const auto& [rad, root] : known_) {
        if (rad == radicand) {
            tower = join(tower, root.tower());
            return root.tower()->same_as(*tower) ? root : root.lifted(tower);
        }
    }
    SqrtResult res = sqrt_adjoin(tower, radicand, name_hint);
    tower = res.tower;
    return res.root;
}

}  // namespace pvi
