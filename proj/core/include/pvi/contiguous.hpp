#pragma once

#include "pvi/solution.hpp"

namespace pvi {

// Y0 = 2a Y1 Y2 / ((a-b+1) Y1 + (a+b-1) Y2), the derivative-free route to
// the (a,1/2,1/2,b) solution.
ParamSolution contiguous_y0(const ParamSolution& Y1, const ParamSolution& Y2,
                            const Rational& a, const Rational& b);

// y1*y2 == y0^2 exactly.
bool contiguous_y1y2(const TowerElement& y1, const TowerElement& y2, const TowerElement& y0);

// d(eta)/d(tau) == eta (A(eta^2-tau^2)(y0-1) + (1-B)(eta^2-1)(y0-tau^2))
//                  / (tau (tau^2-1)(y0-eta^2))
bool deta_dtau_identity(const TowerElement& y0, const TowerElement& eta,
                        const TowerElement& tau, const Rational& A, const Rational& B);

}  // namespace pvi
