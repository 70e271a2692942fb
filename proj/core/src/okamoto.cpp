#include "pvi/okamoto.hpp"

#include "pvi/calculus.hpp"
#include "pvi/errors.hpp"
#include "pvi/residual.hpp"

namespace pvi {

std::string NuTuple::str() const {
    return "[" + to_string(n0) + ", " + to_string(n1) + ", " + to_string(nt) + ", " +
           to_string(ni) + "]";
}

bool nu_compatible(const NuTuple& nu, const ThetaTuple& th) {
    auto pm = [](const Rational& n, const Rational& t) { return n == t || n == -t; };
    return pm(nu.n0, th.t0) && pm(nu.n1, th.t1) && pm(nu.nt, th.tt) &&
           (nu.ni == th.ti || nu.ni == Rational(2) - th.ti);
}

TowerElement okamoto_z(const ParamSolution& sol, const NuTuple& nu) {
    check_nondegenerate(sol);
    const TowerElement& t = sol.t;
    const TowerElement& y = sol.y;
    TowerElement yp = derivative_along(y, t);
    return ((t - Rational(1)) * yp - nu.n0) / y - (t * yp + nu.n1) / (y - Rational(1)) +
           (yp - Rational(1) - nu.nt) / (y - t);
}

ParamSolution okamoto(const ParamSolution& sol, const NuTuple& nu) {
    if (!nu_compatible(nu, sol.theta))
        throw ShapeError("nu " + nu.str() + " incompatible with theta " + sol.theta.str());
    Rational sum = nu.sum();
    Rational theta_shift = sum / 2;
    ThetaTuple new_theta{nu.n0 - theta_shift, nu.n1 - theta_shift, nu.nt - theta_shift,
                         nu.ni - theta_shift};
    ParamSolution out;
    out.tower = sol.tower;
    out.t = sol.t;
    out.theta = new_theta;
    out.label = "K" + nu.str() + " " + sol.label;
    if (sum == 0) {
        out.y = sol.y;
        return out;
    }
    TowerElement z = okamoto_z(sol, nu);
    if (z.is_zero())
        throw FixedSolution("Z == 0: the solution is fixed by (degenerate for) K" + nu.str());
    out.y = sol.y + TowerElement::constant(sol.tower, sum) / z;
    out.tower = out.y.tower();
    return out;
}

bool okamoto_compose_identity_check(const ParamSolution& sol, const NuTuple& nu) {
    Rational theta_shift = nu.sum() / 2;
    ParamSolution once = okamoto(sol, nu);

    // first identity: flip nu_t after the shift
    NuTuple shifted{nu.n0 - theta_shift, nu.n1 - theta_shift, theta_shift - nu.nt,
                    nu.ni - theta_shift};
    ParamSolution lhs = okamoto(once, shifted);
    NuTuple flipped{nu.n0, nu.n1, -nu.nt, nu.ni};
    ParamSolution rhs = okamoto(sol, flipped);
    if (!(lhs.y == rhs.y)) return false;

    // second identity: the shifted double application is the identity on y
    NuTuple inverse{nu.n0 - theta_shift, nu.n1 - theta_shift, nu.nt - theta_shift,
                    nu.ni - theta_shift};
    ParamSolution back = okamoto(once, inverse);
    return back.y == sol.y;
}

}  // namespace pvi
