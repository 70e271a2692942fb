#include "pvi/quadratic.hpp"

#include "pvi/errors.hpp"
#include "pvi/residual.hpp"

namespace pvi {

namespace {

TowerElement resolve_root(RootResolver* roots, TowerPtr& tower, const TowerElement& radicand,
                          const std::string& hint) {
    if (roots) return roots->resolve(tower, radicand, hint);
    RootResolver local;
    return local.resolve(tower, radicand, hint);
}

void lift_all(const TowerPtr& tower, std::initializer_list<TowerElement*> xs) {
    for (TowerElement* x : xs)
        if (!x->tower()->same_as(*tower)) *x = x->lifted(tower);
}

}  // namespace

ParamSolution manin_quadratic(const ParamSolution& sol, RootResolver* roots) {
    if (sol.theta.t0 != 0 || sol.theta.ti != 1)
        throw ShapeError("manin quadratic needs theta = (0, A, B, 1), got " + sol.theta.str());
    if (sol.y.is_zero())
        throw DegenerateSolution("y == 0 is the degenerate solution; no quadratic image");
    check_nondegenerate(sol);
    Rational A = sol.theta.t1, Bv = sol.theta.tt;

    TowerPtr tower = sol.tower;
    TowerElement tau = resolve_root(roots, tower, sol.t, "tau");
    TowerElement eta = resolve_root(roots, tower, sol.y.tower()->same_as(*tower)
                                                      ? sol.y
                                                      : sol.y.lifted(tower),
                                    "eta");
    tower = join(tau.tower(), eta.tower());
    lift_all(tower, {&tau, &eta});

    const Rational one(1);
    ParamSolution out;
    out.tower = tower;
    out.t = ((tau + one) * (tau + one)) / ((tau - one) * (tau - one));
    out.y = ((tau + one) * (eta + one)) / ((tau - one) * (eta - one));
    out.theta = ThetaTuple{A / 2, Bv / 2, Bv / 2, A / 2 + 1};
    out.label = "manin " + sol.label;
    return out;
}

ParamSolution table_quadratic(const ParamSolution& sol, int top_row, int bottom_row,
                              bool swap_ab, RootResolver* roots) {
    if (top_row < 1 || top_row > 6 || bottom_row < 7 || bottom_row > 9)
        throw ShapeError("table rows are 1..6 (top) and 7..9 (bottom)");
    check_nondegenerate(sol);
    const ThetaTuple& th = sol.theta;
    const Rational one(1);
    Rational A, Bv;
    TowerElement tau_sq, eta_sq;
    const TowerElement& t = sol.t;
    const TowerElement& y = sol.y;
    auto require = [&](bool ok) {
        if (!ok)
            throw ShapeError("solution theta " + th.str() + " does not match top row " +
                             std::to_string(top_row));
    };
    switch (top_row) {
        case 1:  // (0, A, B, 1): y = eta^2, t = tau^2
            require(th.t0 == 0 && th.ti == 1);
            A = th.t1; Bv = th.tt;
            tau_sq = t;
            eta_sq = y;
            break;
        case 2:  // (A, 0, B, 1): y = 1-eta^2, t = 1-tau^2
            require(th.t1 == 0 && th.ti == 1);
            A = th.t0; Bv = th.tt;
            tau_sq = one - t;
            eta_sq = one - y;
            break;
        case 3:  // (A, B, 0, 1): y = (eta^2-1)/(tau^2-1), t = 1/(1-tau^2)
            require(th.tt == 0 && th.ti == 1);
            A = th.t0; Bv = th.t1;
            tau_sq = (t - one) / t;
            eta_sq = (t - y) / t;
            break;
        case 4:  // (B, 0, 0, A+1): y = (eta^2-tau^2)/(eta^2-1), t = tau^2
            require(th.t1 == 0 && th.tt == 0);
            Bv = th.t0; A = th.ti - 1;
            tau_sq = t;
            eta_sq = (t - y) / (one - y);
            break;
        case 5:  // (0, B, 0, A+1): y = (tau^2-1)/(eta^2-1), t = 1-tau^2
            require(th.t0 == 0 && th.tt == 0);
            Bv = th.t1; A = th.ti - 1;
            tau_sq = one - t;
            eta_sq = (y - t) / y;
            break;
        default:  // 6: (0, 0, B, A+1): y = 1/(1-eta^2), t = 1/(1-tau^2)
            require(th.t0 == 0 && th.t1 == 0);
            Bv = th.tt; A = th.ti - 1;
            tau_sq = (t - one) / t;
            eta_sq = (y - one) / y;
            break;
    }
    if (eta_sq.is_zero() || tau_sq.is_zero())
        throw DegenerateSolution("top-row relation not invertible on this solution");

    TowerPtr tower = sol.tower;
    TowerElement tau = resolve_root(roots, tower, tau_sq, "tau");
    TowerElement eta = resolve_root(roots, tower, eta_sq.tower()->same_as(*tower)
                                                      ? eta_sq
                                                      : eta_sq.lifted(tower),
                                    "eta");
    tower = join(tau.tower(), eta.tower());
    lift_all(tower, {&tau, &eta});
    if (swap_ab) {
        eta = tau / eta;
        std::swap(A, Bv);
    }

    ParamSolution out;
    out.tower = tower;
    switch (bottom_row) {
        case 7:
            out.t = ((tau + one) * (tau + one)) / ((tau - one) * (tau - one));
            out.y = ((tau + one) * (eta + one)) / ((tau - one) * (eta - one));
            out.theta = ThetaTuple{A / 2, Bv / 2, Bv / 2, A / 2 + 1};
            break;
        case 8:
            out.t = ((tau + one) * (tau + one)) / (Rational(4) * tau);
            out.y = ((tau + one) * (eta + one)) / (Rational(2) * (eta + tau));
            out.theta = ThetaTuple{A / 2, A / 2, Bv / 2, Bv / 2 + 1};
            break;
        default:
            out.t = Rational(4) * tau / ((tau + one) * (tau + one));
            out.y = Rational(2) * (eta + tau) / ((tau + one) * (eta + one));
            out.theta = ThetaTuple{Bv / 2, A / 2, Bv / 2, A / 2 + 1};
            break;
    }
    out.label = "table(" + std::to_string(top_row) + "," + std::to_string(bottom_row) + ") " +
                sol.label;
    return out;
}

// --- direct transformation, (a, b-1, b, a+1) route --------------------------

ChainA build_chain_a(const ParamSolution& sol, RootResolver* roots) {
    const ThetaTuple& th = sol.theta;
    Rational a = th.t0, b = th.tt;
    if (th.t1 != b - 1 || th.ti != a + 1)
        throw ShapeError("chain needs theta = (a, b-1, b, a+1), got " + th.str());
    if (a == 0) throw ShapeError("a == 0 degenerates the transformation formula");
    check_nondegenerate(sol);

    ParamSolution y1sol = okamoto(sol, NuTuple{-a, b - 1, -b, 1 - a});
    TowerPtr tower = y1sol.tower;
    TowerElement tau = resolve_root(roots, tower, sol.t.lifted(tower), "tau");
    TowerElement eta = resolve_root(roots, tower,
                                    y1sol.y.tower()->same_as(*tower) ? y1sol.y
                                                                     : y1sol.y.lifted(tower),
                                    "eta");
    tower = join(tau.tower(), eta.tower());
    ChainA chain;
    chain.a = a;
    chain.b = b;
    chain.tower = tower;
    chain.y0 = sol.y.lifted(tower);
    chain.y1 = y1sol.y.tower()->same_as(*tower) ? y1sol.y : y1sol.y.lifted(tower);
    chain.tau = tau.tower()->same_as(*tower) ? tau : tau.lifted(tower);
    chain.eta = eta.tower()->same_as(*tower) ? eta : eta.lifted(tower);
    const Rational one(1);
    chain.t_new =
        ((chain.tau + one) * (chain.tau + one)) / ((chain.tau - one) * (chain.tau - one));
    chain.label = sol.label;
    return chain;
}

ParamSolution ChainA::companion_y2_solution() const {
    // y2 = K[a, b-1, -b, a+1] y0, rebuilt from the source data (t1 = tau^2)
    ParamSolution src;
    src.tower = tower;
    src.t = tau * tau;
    src.y = y0;
    src.theta = ThetaTuple{a, b - 1, b, a + 1};
    src.label = label;
    return okamoto(src, NuTuple{a, b - 1, -b, a + 1});
}

ParamSolution ChainA::Y1() const {
    const Rational one(1);
    ParamSolution out;
    out.tower = tower;
    out.t = t_new;
    out.y = ((tau + one) * (eta + one)) / ((tau - one) * (eta - one));
    Rational A = a + b - 1, Bv = b - a;
    out.theta = ThetaTuple{A / 2, Bv / 2, Bv / 2, A / 2 + 1};
    out.label = "Y1 " + label;
    return out;
}

ParamSolution ChainA::Y2() const {
    const Rational one(1);
    ParamSolution out;
    out.tower = tower;
    out.t = t_new;
    out.y = ((tau + one) * (y0 + eta)) / ((tau - one) * (y0 - eta));
    Rational A = a + b - 1, Bv = b - a;
    out.theta = ThetaTuple{(Bv - 1) / 2, (A + 1) / 2, (A + 1) / 2, (Bv + 1) / 2};
    out.label = "Y2 " + label;
    return out;
}

ParamSolution ChainA::Y0() const {
    const Rational one(1);
    TowerElement eta_sq = eta * eta;
    TowerElement den =
        (tau - one) * (a * (eta * (y0 - one)) - (b - 1) * (y0 - eta_sq));
    if (den.is_zero()) throw DegenerateSolution("transformation denominator vanishes");
    ParamSolution out;
    out.tower = tower;
    out.t = t_new;
    out.y = a * ((tau + one) * (eta + one) * (y0 + eta)) / den;
    out.theta = ThetaTuple{a, Rational(1, 2), Rational(1, 2), b};
    out.label = "quad " + label;
    return out;
}

ParamSolution ChainA::Y0_b_plus_one() const {
    const Rational one(1);
    TowerElement eta_sq = eta * eta;
    TowerElement tau_sq = tau * tau;
    TowerElement den =
        (one - tau) * (a * (eta * (y0 - tau_sq)) + b * (tau * (y0 - eta_sq)));
    if (den.is_zero()) throw DegenerateSolution("transformation denominator vanishes");
    ParamSolution out;
    out.tower = tower;
    out.t = t_new;
    out.y = a * ((tau + one) * (eta + tau) * (y0 + eta * tau)) / den;
    out.theta = ThetaTuple{a, Rational(1, 2), Rational(1, 2), b + 1};
    out.label = "quad+ " + label;
    return out;
}

ParamSolution ChainA::Y0_half() const {
    const Rational one(1);
    TowerElement eta_sq = eta * eta;
    Rational two_a = a * 2, bma = b - a;
    TowerElement num =
        (tau + one) * (two_a * ((eta + tau) * (y0 + eta)) + bma * ((tau - one) * (y0 - eta_sq)));
    TowerElement den =
        (tau - one) * (two_a * ((eta + tau) * (y0 - eta)) + bma * ((tau + one) * (y0 - eta_sq)));
    if (den.is_zero()) throw DegenerateSolution("transformation denominator vanishes");
    ParamSolution out;
    out.tower = tower;
    out.t = t_new;
    out.y = num / den;
    out.theta = ThetaTuple{Rational(1, 2), a, b, Rational(1, 2)};
    out.label = "quad-half " + label;
    return out;
}

ParamSolution kitaev_a(const ParamSolution& sol, RootResolver* roots) {
    return build_chain_a(sol, roots).Y0();
}

ParamSolution kitaev_a_b_plus_one(const ParamSolution& sol, RootResolver* roots) {
    return build_chain_a(sol, roots).Y0_b_plus_one();
}

ParamSolution kitaev_a_half(const ParamSolution& sol, RootResolver* roots) {
    return build_chain_a(sol, roots).Y0_half();
}

// --- symmetric form, (a, a, b, b) route --------------------------------------

ChainB build_chain_b(const ParamSolution& sol, RootResolver* roots) {
    const ThetaTuple& th = sol.theta;
    Rational a = th.t0, b = th.tt;
    if (th.t1 != a || th.ti != b)
        throw ShapeError("chain needs theta = (a, a, b, b), got " + th.str());
    check_nondegenerate(sol);

    ParamSolution g1sol = okamoto(sol, NuTuple{-a, -a, -b, b});
    TowerPtr tower = g1sol.tower;
    const Rational one(1);
    TowerElement t2 = sol.t.lifted(tower);
    TowerElement g1 = g1sol.y.tower()->same_as(*tower) ? g1sol.y : g1sol.y.lifted(tower);
    TowerElement rt = resolve_root(roots, tower, t2 * t2 - t2, "rt");
    t2 = t2.lifted(tower);
    g1 = g1.tower()->same_as(*tower) ? g1 : g1.lifted(tower);
    TowerElement rg = resolve_root(roots, tower, g1 * g1 - g1, "rg");

    ChainB chain;
    chain.a = a;
    chain.b = b;
    chain.tower = tower;
    chain.t2 = t2.lifted(tower);
    chain.g0 = sol.y.lifted(tower);
    chain.g1 = g1.tower()->same_as(*tower) ? g1 : g1.lifted(tower);
    chain.rt = rt.tower()->same_as(*tower) ? rt : rt.lifted(tower);
    chain.rg = rg;
    chain.label = sol.label;
    return chain;
}

TowerElement ChainB::T2() const {
    const Rational half(1, 2);
    return half + (t2 - half) / (Rational(2) * rt);
}

TowerElement ChainB::G1() const {
    const Rational half(1, 2);
    return half + (t2 - g1 + rg) / (Rational(2) * rt);
}

TowerElement ChainB::G0() const {
    const Rational half(1, 2);
    TowerElement denom = a * rg - (b - 1) * (g0 - g1);
    if (denom.is_zero()) throw DegenerateSolution("transformation denominator vanishes");
    return half + (t2 - g1 + rg) / (Rational(2) * rt) +
           (a - b + 1) * ((g0 - g1) * (g1 - half - rg)) / (Rational(2) * (denom * rt));
}

TowerElement ChainB::G0_alt_notation() const {
    // theta-bar = 2 t2 - 1, psi = 2 g1 - 1, phi = 2 g0 - 1,
    // sqrt(theta-bar^2 - 1) = 2 rt, sqrt(psi^2 - 1) = 2 rg
    const Rational one(1), half(1, 2);
    TowerElement tb = Rational(2) * t2 - one;
    TowerElement psi = Rational(2) * g1 - one;
    TowerElement phi = Rational(2) * g0 - one;
    TowerElement sq_tb = Rational(2) * rt;
    TowerElement sq_psi = Rational(2) * rg;
    TowerElement denom = a * sq_psi - (b - 1) * (phi - psi);
    if (denom.is_zero()) throw DegenerateSolution("alternative-notation denominator vanishes");
    return half + tb / (Rational(2) * sq_tb) +
           a * (psi * phi - one - phi * sq_psi) / (Rational(2) * (denom * sq_tb));
}

ParamSolution ChainB::solution() const {
    ParamSolution out;
    out.tower = tower;
    out.t = T2();
    out.y = G0();
    out.theta = ThetaTuple{Rational(1, 2), Rational(1, 2), a, b};
    out.label = "quadB " + label;
    return out;
}

ParamSolution ChainB::g1_solution() const {
    ParamSolution out;
    out.tower = tower;
    out.t = t2;
    out.y = g1;
    Rational theta_shift = -a;  // (sum nu)/2 with nu = (-a,-a,-b,b)
    out.theta = ThetaTuple{-a - theta_shift, -a - theta_shift, -b - theta_shift,
                           b - theta_shift};
    out.label = "g1 " + label;
    return out;
}

ParamSolution kitaev_b(const ParamSolution& sol, RootResolver* roots) {
    return build_chain_b(sol, roots).solution();
}

bool alt_notation_crosscheck(const ParamSolution& sol, RootResolver* roots) {
    ChainB chain = build_chain_b(sol, roots);
    return chain.G0() == chain.G0_alt_notation();
}

}  // namespace pvi
