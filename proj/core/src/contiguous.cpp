#include "pvi/contiguous.hpp"

#include "pvi/calculus.hpp"
#include "pvi/errors.hpp"

namespace pvi {

ParamSolution contiguous_y0(const ParamSolution& Y1, const ParamSolution& Y2,
                            const Rational& a, const Rational& b) {
    if (!(Y1.t == Y2.t))
        throw TowerError("contiguous relation requires a shared argument t");
    TowerElement den = (a - b + 1) * Y1.y + (a + b - 1) * Y2.y;
    if (den.is_zero()) throw DegenerateSolution("contiguous denominator vanishes");
    ParamSolution out;
    out.tower = join(Y1.tower, Y2.tower);
    out.t = Y1.t;
    out.y = (Rational(2) * a) * (Y1.y * Y2.y) / den;
    out.theta = ThetaTuple{a, Rational(1, 2), Rational(1, 2), b};
    out.label = "contiguous(" + Y1.label + ", " + Y2.label + ")";
    return out;
}

bool contiguous_y1y2(const TowerElement& y1, const TowerElement& y2, const TowerElement& y0) {
    return (y1 * y2 - y0 * y0).is_zero();
}

bool deta_dtau_identity(const TowerElement& y0, const TowerElement& eta,
                        const TowerElement& tau, const Rational& A, const Rational& B) {
    const Rational one(1);
    TowerElement eta_sq = eta * eta;
    TowerElement tau_sq = tau * tau;
    TowerElement den = tau * (tau_sq - one) * (y0 - eta_sq);
    if (den.is_zero()) throw DegenerateSolution("identity denominator vanishes");
    TowerElement rhs = eta *
                       (A * ((eta_sq - tau_sq) * (y0 - one)) +
                        (one - B) * ((eta_sq - one) * (y0 - tau_sq))) /
                       den;
    TowerElement lhs = derivative_along(eta, tau);
    return lhs == rhs;
}

}  // namespace pvi
