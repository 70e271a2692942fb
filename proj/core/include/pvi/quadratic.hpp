#pragma once

#include "pvi/okamoto.hpp"
#include "pvi/solution.hpp"
#include "pvi/sqrt_adjoin.hpp"

namespace pvi {

// Lemma-level quadratic transformation: theta = (0, A, B, 1) exactly,
// tau^2 = t, eta^2 = y, T = (tau+1)^2/(tau-1)^2,
// Y = (tau+1)(eta+1)/((tau-1)(eta-1)), new theta (A/2, B/2, B/2, A/2+1).
ParamSolution manin_quadratic(const ParamSolution& sol, RootResolver* roots = nullptr);

// Simple-quadratic table: solve a top row (1..6) for tau, eta and emit a
// bottom row (7..9).  swap_ab replaces eta by tau/eta and interchanges A,B.
ParamSolution table_quadratic(const ParamSolution& sol, int top_row, int bottom_row,
                              bool swap_ab = false, RootResolver* roots = nullptr);

// Context for the direct quadratic transformation with theta=(a,b-1,b,a+1):
// y1 = K[-a,b-1,-b,1-a] y0, tau = sqrt(t1), eta = sqrt(y1).
struct ChainA {
    Rational a, b;
    TowerPtr tower;
    TowerElement y0, y1, tau, eta;
    TowerElement t_new;  // T1 = (tau+1)^2/(tau-1)^2
    std::string label;

    ParamSolution companion_y2_solution() const;  // y2 = K[a,b-1,-b,a+1] y0
    ParamSolution Y1() const;  // (tau+1)(eta+1)/((tau-1)(eta-1))
    ParamSolution Y2() const;  // (tau+1)(y0+eta)/((tau-1)(y0-eta))
    ParamSolution Y0() const;  // target (a,1/2,1/2,b)
    ParamSolution Y0_b_plus_one() const;  // target (a,1/2,1/2,b+1)
    ParamSolution Y0_half() const;        // target (1/2,a,b,1/2)
};

ChainA build_chain_a(const ParamSolution& sol, RootResolver* roots = nullptr);

ParamSolution kitaev_a(const ParamSolution& sol, RootResolver* roots = nullptr);
ParamSolution kitaev_a_b_plus_one(const ParamSolution& sol, RootResolver* roots = nullptr);
ParamSolution kitaev_a_half(const ParamSolution& sol, RootResolver* roots = nullptr);

// Context for the symmetric form with theta=(a,a,b,b):
// g1 = K[-a,-a,-b,b] g0, rt^2 = t2^2-t2, rg^2 = g1^2-g1.
struct ChainB {
    Rational a, b;
    TowerPtr tower;
    TowerElement t2, g0, g1, rt, rg;
    std::string label;

    TowerElement T2() const;  // 1/2 + (t2-1/2)/(2 rt)
    TowerElement G0() const;
    TowerElement G1() const;  // 1/2 + (t2-g1+rg)/(2 rt)
    ParamSolution solution() const;  // (T2, G0), theta (1/2,1/2,a,b)
    ParamSolution g1_solution() const;

    // Appendix recomputation in the (theta-bar, psi, phi) variables,
    // identifying sqrt(theta^2-1) = 2 rt and sqrt(psi^2-1) = 2 rg.
    TowerElement G0_alt_notation() const;
};

ChainB build_chain_b(const ParamSolution& sol, RootResolver* roots = nullptr);

ParamSolution kitaev_b(const ParamSolution& sol, RootResolver* roots = nullptr);

// Exact Appendix cross-check (eq. of the alternative notation equals the
// theorem's output).
bool alt_notation_crosscheck(const ParamSolution& sol, RootResolver* roots = nullptr);

}  // namespace pvi
