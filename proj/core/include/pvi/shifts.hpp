#pragma once

#include "pvi/solution.hpp"

namespace pvi {

// Expressions in terms of tau, eta, y0 on which the parameter-shift
// substitutions act.
struct ShiftContext {
    Rational a, b;
    TowerElement tau, eta, y0;
};

enum class ShiftKind { BPlusOne, BMinusOne, SwapAB, BToOneMinusB };

ShiftKind shift_kind_from_name(const std::string& name);

// Applies the published substitution to (eta, y0) and updates (a, b).
// a -> a +- 1 is the composition swap, b+-1, swap.
ShiftContext param_shift(const ShiftContext& ctx, ShiftKind kind);
ShiftContext shift_a_by(const ShiftContext& ctx, int delta);  // +1 or -1

// Contiguous Y3/Y4 route to the (1/2, a, b, -1/2) level.
struct Y4Chain {
    ParamSolution Y3;  // K[(1-a-b)/2,(a-b)/2,(b-a)/2,(a+b+1)/2] Y1
    ParamSolution Y4;  // theta (1/2, a, b, -1/2)
    ParamSolution Y4_conjugate;  // T1(Y4-1)/((T1-1)Y4), theta (a,b,3/2,1/2), t -> T1/(T1-1)
};

Y4Chain y4_chain(const ParamSolution& Y1, const ParamSolution& Y2, const Rational& a,
                 const Rational& b);

// y0 = (Y1+sqrtT)(Y2+sqrtT) / ((Y1-sqrtT)(Y2-sqrtT)) with sqrtT=(tau+1)/(tau-1);
// the inverse of the quadratic pipeline, back to the (a,a,b,b)-equivalent level.
ParamSolution inverse_quadratic(const ParamSolution& Y1, const ParamSolution& Y2,
                                const TowerElement& tau, const Rational& a, const Rational& b);

}  // namespace pvi
