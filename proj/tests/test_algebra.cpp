#include <doctest.h>

#include <random>

#include "pvi/element.hpp"
#include "pvi/errors.hpp"
#include "pvi/sqrt_adjoin.hpp"

using namespace pvi;

namespace {

TowerPtr tower_39() {
    // u^2 = 3(s+3)(4s^2-s+1) = 12s^3+33s^2+6s+9
    auto base = Tower::rational("s");
    Poly rel;
    rel.add_term(Monomial{3, 0}, rat(12));
    rel.add_term(Monomial{2, 0}, rat(33));
    rel.add_term(Monomial{1, 0}, rat(6));
    rel.add_term(Monomial{0, 0}, rat(9));
    return base->extended("u", rel);
}

// random small elements for property tests
TowerElement random_element(const TowerPtr& t, std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> genbit(0, (1 << t->size()) - 1);
    auto poly = [&] {
        Poly p;
        for (int i = 0; i < max_terms; ++i)
            p.add_term(Monomial{static_cast<std::uint32_t>(expo(rng)),
                                static_cast<std::uint32_t>(genbit(rng))},
                       rat(coeff(rng)));
        return p;
    };
    Poly num = poly();
    Poly den;
    while (den.is_zero()) den = poly();
    return TowerElement::from_fraction(t, num, den);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(*parse_rational("-22/7")) == "-22/7");
    CHECK(*parse_rational("4/2") == rat(2));
    CHECK(!parse_rational("1.5"));
    CHECK(!parse_rational("2/0"));
    CHECK(!parse_rational(""));
    CHECK(to_string(rat(-10, 4)) == "-5/2");
}

TEST_CASE("square splitting of integers") {
    Integer k, m;
    split_square(Integer(48), k, m);
    CHECK(k == 4);
    CHECK(m == 3);
    split_square(Integer(-18), k, m);
    CHECK(k == 3);
    CHECK(m == -2);
    split_square(Integer(1), k, m);
    CHECK(k == 1);
    CHECK(m == 1);
}

TEST_CASE("generator squares reduce to the defining polynomial") {
    auto t = tower_39();
    TowerElement u = TowerElement::generator(t, 0);
    TowerElement p = TowerElement::from_poly(t, t->relation(0));
    CHECK(u * u == p);                      // u*u -> 3(s+3)(4s^2-s+1)
    CHECK((u * u - p).is_zero());
    CHECK(u.pow(4) == p * p);
}

TEST_CASE("additive and multiplicative inverses") {
    auto base = Tower::rational("s");
    Poly rel;
    rel.add_term(Monomial{1, 0}, rat(1));
    rel.add_term(Monomial{0, 0}, rat(1));  // u^2 = s+1
    auto t = base->extended("u", rel);
    TowerElement u = TowerElement::generator(t, 0);
    TowerElement one = TowerElement::one(t);
    TowerElement x = u - rat(1);
    CHECK((x - x).is_zero());
    CHECK(x.inverse() * x == one);          // (1/(u-1)) * (u-1) = 1
    CHECK_THROWS_AS(TowerElement::zero(t).inverse(), DivisionByZero);
}

TEST_CASE("canonical form is idempotent and denominators are generator-free") {
    auto t = tower_39();
    std::mt19937_64 rng(42);
    for (int i = 0; i < 40; ++i) {
        TowerElement x = random_element(t, rng);
        CHECK(x.den().gens_used() == 0);
        CHECK(x.den().leading_coefficient() == rat(1));
        // rebuilding from the canonical pieces must reproduce them exactly
        TowerElement again = TowerElement::from_fraction(t, x.num(), x.den());
        CHECK(again == x);
    }
}

TEST_CASE("ring axioms on random tower elements") {
    auto t = tower_39();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        TowerElement a = random_element(t, rng);
        TowerElement b = random_element(t, rng);
        TowerElement c = random_element(t, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("tower extension embeds existing elements unchanged") {
    auto base = Tower::rational("s");
    TowerElement s = TowerElement::base(base);
    SqrtResult r = sqrt_adjoin(base, s, "tau");
    CHECK(r.tower->size() == 1);
    CHECK(r.root * r.root == s.lifted(r.tower));
    // mixing towers: prefix elements join automatically
    TowerElement sum = r.root + s;
    CHECK(sum.tower()->same_as(*r.tower));
}

TEST_CASE("duplicate radicand reuses the generator") {
    auto base = Tower::rational("s");
    TowerElement s = TowerElement::base(base);
    SqrtResult first = sqrt_adjoin(base, s, "tau");
    SqrtResult second = sqrt_adjoin(first.tower, s, "other");
    CHECK(second.reused);
    CHECK(second.tower->same_as(*first.tower));
    CHECK(second.root == first.root);
}

TEST_CASE("square content is pulled out of radicands") {
    auto base = Tower::rational("s");
    TowerElement s = TowerElement::base(base);
    // sqrt(4 s^2) = 2 s without any extension
    SqrtResult r = sqrt_adjoin(base, rat(4) * s * s, "w");
    CHECK(r.reused);
    CHECK(r.tower->size() == 0);
    CHECK(r.root == rat(2) * s);
    // sqrt(48) = 4 sqrt(3): one constant generator with relation 3
    SqrtResult c = sqrt_adjoin(base, TowerElement::constant(base, rat(48)), "c");
    CHECK(c.tower->size() == 1);
    Rational rc;
    CHECK(c.tower->relation(0).is_rational_constant(rc));
    CHECK(rc == rat(3));
    // sqrt of a rational function: sqrt(s/(s+1)) = sqrt(s(s+1))/(s+1)
    Poly den;
    den.add_term(Monomial{1, 0}, rat(1));
    den.add_term(Monomial{0, 0}, rat(1));
    TowerElement f = TowerElement::from_fraction(base, Poly::variable_base(1), den);
    SqrtResult q = sqrt_adjoin(base, f, "r");
    CHECK(q.root * q.root == f.lifted(q.tower));
}

TEST_CASE("squarefree extraction keeps relations small") {
    auto base = Tower::rational("s");
    // sqrt(s^3 (s+1)^5 (s-2)^2) -> s (s+1)^2 (s-2) sqrt(s (s+1))
    Poly p = Poly::variable_base(3);
    Poly f1;  // (s+1)^5
    f1.add_term(Monomial{0, 0}, rat(1));
    f1.add_term(Monomial{1, 0}, rat(1));
    Poly f2;  // (s-2)^2
    f2.add_term(Monomial{1, 0}, rat(1));
    f2.add_term(Monomial{0, 0}, rat(-2));
    Poly prod = p;
    for (int i = 0; i < 5; ++i) prod = mul(prod, f1, *base);
    for (int i = 0; i < 2; ++i) prod = mul(prod, f2, *base);
    SqrtResult r = sqrt_adjoin(base, TowerElement::from_poly(base, prod), "w");
    REQUIRE(r.tower->size() == 1);
    // the stored relation is the squarefree core s(s+1)
    Poly expect;
    expect.add_term(Monomial{2, 0}, rat(1));
    expect.add_term(Monomial{1, 0}, rat(1));
    CHECK(r.tower->relation(0) == expect);
    CHECK(r.root * r.root == TowerElement::from_poly(base, prod).lifted(r.tower));
}

TEST_CASE("known roots are validated and preferred") {
    auto base = Tower::rational("s");
    TowerElement s = TowerElement::base(base);
    RootResolver roots;
    CHECK_THROWS_AS(roots.add_known_root(s, s), TowerError);
    roots.add_known_root(s * s, s);
    TowerPtr t = base;
    TowerElement r = roots.resolve(t, s * s, "w");
    CHECK(r == s);
    CHECK(t->size() == 0);
}
