#include "pvi/shifts.hpp"

#include "pvi/errors.hpp"
#include "pvi/fractional_linear.hpp"

namespace pvi {

ShiftKind shift_kind_from_name(const std::string& name) {
    if (name == "b+1") return ShiftKind::BPlusOne;
    if (name == "b-1") return ShiftKind::BMinusOne;
    if (name == "a<->b" || name == "swap") return ShiftKind::SwapAB;
    if (name == "b->1-b") return ShiftKind::BToOneMinusB;
    throw ShapeError("unknown parameter shift: " + name);
}

ShiftContext param_shift(const ShiftContext& ctx, ShiftKind kind) {
    const Rational one(1);
    const Rational& a = ctx.a;
    const Rational& b = ctx.b;
    const TowerElement& tau = ctx.tau;
    const TowerElement& eta = ctx.eta;
    const TowerElement& y0 = ctx.y0;
    TowerElement tau_sq = tau * tau;
    TowerElement eta_sq = eta * eta;
    ShiftContext out = ctx;
    switch (kind) {
        case ShiftKind::BPlusOne: {
            TowerElement u = a * (y0 - tau_sq) - b * (y0 - eta_sq);
            TowerElement v = a * (eta_sq * (y0 - tau_sq)) - b * (tau_sq * (y0 - eta_sq));
            TowerElement w = a * (eta_sq * (y0 - tau_sq)) - b * (y0 * (y0 - eta_sq));
            TowerElement x = a * (y0 * (y0 - tau_sq)) - b * (tau_sq * (y0 - eta_sq));
            if (v.is_zero() || x.is_zero())
                throw DegenerateSolution("shift substitution denominator vanishes");
            out.eta = tau * eta * u / v;
            out.y0 = tau_sq * (u * w) / (v * x);
            out.b = b + 1;
            break;
        }
        case ShiftKind::BMinusOne: {
            Rational bm = b - 1;
            TowerElement u = a * (y0 - one) + bm * (y0 - eta_sq);
            TowerElement v = a * (eta_sq * (y0 - one)) + bm * (y0 - eta_sq);
            TowerElement w = a * (eta_sq * (y0 - one)) + bm * (y0 * (y0 - eta_sq));
            TowerElement x = a * (y0 * (y0 - one)) + bm * (y0 - eta_sq);
            if (v.is_zero() || x.is_zero())
                throw DegenerateSolution("shift substitution denominator vanishes");
            out.eta = tau * eta * u / v;
            out.y0 = tau_sq * (u * w) / (x * v);
            out.b = b - 1;
            break;
        }
        case ShiftKind::SwapAB: {
            TowerElement den = a * (y0 - tau_sq) - b * (y0 - eta_sq);
            if (den.is_zero())
                throw DegenerateSolution("shift substitution denominator vanishes");
            out.y0 = (a * (eta_sq * (y0 - tau_sq)) - b * (tau_sq * (y0 - eta_sq))) / den;
            out.a = b;
            out.b = a;
            break;
        }
        case ShiftKind::BToOneMinusB: {
            if (eta.is_zero() || y0.is_zero())
                throw DegenerateSolution("shift substitution denominator vanishes");
            out.eta = tau / eta;
            out.y0 = tau_sq / y0;
            out.b = 1 - b;
            break;
        }
    }
    return out;
}

ShiftContext shift_a_by(const ShiftContext& ctx, int delta) {
    if (delta != 1 && delta != -1) throw ShapeError("a-shift must be +1 or -1");
    ShiftContext out = param_shift(ctx, ShiftKind::SwapAB);
    out = param_shift(out, delta > 0 ? ShiftKind::BPlusOne : ShiftKind::BMinusOne);
    return param_shift(out, ShiftKind::SwapAB);
}

Y4Chain y4_chain(const ParamSolution& Y1s, const ParamSolution& Y2s, const Rational& a,
                 const Rational& b) {
    if (!(Y1s.t == Y2s.t))
        throw TowerError("Y3/Y4 chain requires a shared argument t");
    const Rational one(1), two(2);
    if (a + b == 0) throw DegenerateSolution("a + b == 0 degenerates the chain denominators");
    const TowerElement& T1 = Y1s.t;
    const TowerElement& Y1 = Y1s.y;
    const TowerElement& Y2 = Y2s.y;

    TowerElement num3 =
        (two * a * (Y1 * Y2) + (b - a) * (T1 * Y1) - (a + b) * (T1 * Y2)) * Y1;
    TowerElement den3 = Y1 * Y1 + (two * a - 1) * (Y1 * Y2) + (b - a - 1) * (T1 * Y1) -
                        (a + b - 1) * (T1 * Y2);
    if (den3.is_zero()) throw DegenerateSolution("Y3 denominator vanishes");
    TowerElement Y3 = num3 / den3;

    TowerElement num4 = ((a - b) * ((T1 - one) * ((Y3 - Y1) * Y3)) - Y1 * (Y3 * Y3) +
                         (T1 + one) * (Y3 * Y3) - two * (T1 * Y3) + T1 * Y1) *
                        Y3;
    TowerElement den4 = (Y3 - Y1) * ((a + b) * (Y3 * Y3 + T1) - two * (b * T1 + a) * Y3 +
                                     Y3 * Y3) -
                        Y1 * (Y3 * Y3) + (T1 + one) * (Y1 * Y3) - T1 * Y3;
    if (den4.is_zero()) throw DegenerateSolution("Y4 denominator vanishes");
    TowerElement Y4 = num4 / den4;

    Y4Chain out;
    out.Y3.tower = Y3.tower();
    out.Y3.t = T1;
    out.Y3.y = Y3;
    out.Y3.theta = ThetaTuple{-(a + b) / 2, (a - b - 1) / 2, (b - a - 1) / 2, (a + b) / 2};
    out.Y3.label = "Y3(" + Y1s.label + ")";

    out.Y4.tower = Y4.tower();
    out.Y4.t = T1;
    out.Y4.y = Y4;
    out.Y4.theta = ThetaTuple{Rational(1, 2), a, b, Rational(-1, 2)};
    out.Y4.label = "Y4(" + Y1s.label + ")";

    out.Y4_conjugate = fl_apply(out.Y4, fl_row_by_name("sigma3 pi1"));
    return out;
}

ParamSolution inverse_quadratic(const ParamSolution& Y1s, const ParamSolution& Y2s,
                                const TowerElement& tau, const Rational& a, const Rational& b) {
    const Rational one(1);
    TowerElement sqrtT = (tau + one) / (tau - one);
    TowerElement den = (Y1s.y - sqrtT) * (Y2s.y - sqrtT);
    if (den.is_zero()) throw DegenerateSolution("inverse transformation hits a pole");
    ParamSolution out;
    out.tower = join(join(Y1s.tower, Y2s.tower), tau.tower());
    out.t = tau * tau;
    out.y = (Y1s.y + sqrtT) * (Y2s.y + sqrtT) / den;
    out.theta = ThetaTuple{a, a, b, b};
    out.label = "inverse_quadratic(" + Y1s.label + ", " + Y2s.label + ")";
    return out;
}

}  // namespace pvi
