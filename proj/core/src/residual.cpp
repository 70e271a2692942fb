#include "pvi/residual.hpp"

#include <chrono>

#include "pvi/calculus.hpp"
#include "pvi/errors.hpp"

namespace pvi {

void check_nondegenerate(const ParamSolution& sol) {
    Rational c;
    if (sol.t.is_rational(c)) {
        if (c == 0 || c == 1) throw DegenerateSolution("t is identically " + to_string(c));
        throw DegenerateSolution("t is constant along the curve");
    }
    if (sol.y.is_rational(c) && (c == 0 || c == 1))
        throw DegenerateSolution("y is identically " + to_string(c) +
                                 " (singular locus of the equation)");
    if (sol.y == sol.t)
        throw DegenerateSolution("y == t identically (singular locus of the equation)");
}

namespace {

void guard_budget(const TowerElement& x, std::size_t budget) {
    if (x.term_count() > budget)
        throw BudgetExceeded("exact residual outgrew the monomial budget (" +
                             std::to_string(x.term_count()) + " > " + std::to_string(budget) +
                             ")");
}

}  // namespace

TowerElement residual(const ParamSolution& sol, std::size_t term_budget) {
    check_nondegenerate(sol);
    PviParams par = theta_to_params(sol.theta);
    const TowerElement& t = sol.t;
    const TowerElement& y = sol.y;
    TowerPtr tw = join(sol.tower, join(t.tower(), y.tower()));
    TowerElement one = TowerElement::one(tw);

    TowerElement yp = derivative_along(y, t);
    guard_budget(yp, term_budget);
    TowerElement ypp = derivative_along(yp, t);
    guard_budget(ypp, term_budget);

    TowerElement ym1 = y - Rational(1);
    TowerElement ymt = y - t;
    if (ymt.is_zero()) throw DegenerateSolution("y == t identically");
    TowerElement tm1 = t - Rational(1);

    TowerElement half_sum =
        (one / y + one / ym1 + one / ymt) * Rational(1, 2);
    guard_budget(half_sum, term_budget);
    TowerElement lin = one / t + one / tm1 + one / ymt;
    TowerElement rational_part =
        y * ym1 * ymt / (t * t * tm1 * tm1);
    guard_budget(rational_part, term_budget);

    TowerElement theta_part = TowerElement::constant(tw, par.alpha);
    if (par.beta != 0) theta_part += TowerElement::constant(tw, par.beta) * t / (y * y);
    if (par.gamma != 0) theta_part += TowerElement::constant(tw, par.gamma) * tm1 / (ym1 * ym1);
    if (par.delta != 0)
        theta_part += TowerElement::constant(tw, par.delta) * t * tm1 / (ymt * ymt);
    guard_budget(theta_part, term_budget);

    TowerElement R = ypp - half_sum * yp * yp + lin * yp - rational_part * theta_part;
    guard_budget(R, term_budget);
    return R;
}

mpf_class residual_numeric(const ParamSolution& sol, unsigned samples, unsigned digits) {
    check_nondegenerate(sol);
    set_working_digits(digits);
    PviParams par = theta_to_params(sol.theta);
    const TowerElement& t = sol.t;
    const TowerElement& y = sol.y;
    TowerPtr tw = join(sol.tower, join(t.tower(), y.tower()));

    TowerElement ts = derivative(t);
    if (ts.is_zero()) throw DegenerateSolution("t is constant along the curve");
    TowerElement ys = derivative(y);
    TowerElement tss = derivative(ts);
    TowerElement yss = derivative(ys);

    AComplex al(to_float(par.alpha)), be(to_float(par.beta)), ga(to_float(par.gamma)),
        de(to_float(par.delta));

    SamplePlan plan(0x9e3779b97f4a7c15ULL);
    std::vector<const TowerElement*> avoid{&t, &y, &ts, &ys, &tss, &yss};
    mpf_class worst(0);
    mpf_class tiny = pow10(-static_cast<long>(digits) / 2);
    unsigned done = 0;
    unsigned attempts = 0;
    while (done < samples) {
        if (++attempts > samples + 64) throw NumericError("cannot find enough sample points");
        CurvePoint pt = plan.next(tw, avoid);
        AComplex tv = eval(t, pt), yv = eval(y, pt);
        AComplex tsv = eval(ts, pt), ysv = eval(ys, pt);
        // stay away from the singular loci and branch collisions
        if (abs(tv) < tiny || abs(tv - AComplex(1)) < tiny || abs(yv) < tiny ||
            abs(yv - AComplex(1)) < tiny || abs(yv - tv) < tiny || abs(tsv) < tiny)
            continue;
        AComplex tssv = eval(tss, pt), yssv = eval(yss, pt);
        AComplex yp = ysv / tsv;
        AComplex ypp = (yssv * tsv - ysv * tssv) / (tsv * tsv * tsv);
        AComplex one(1);
        AComplex half(mpf_class(0.5));
        AComplex R = ypp -
                     half * (one / yv + one / (yv - one) + one / (yv - tv)) * yp * yp +
                     (one / tv + one / (tv - one) + one / (yv - tv)) * yp -
                     yv * (yv - one) * (yv - tv) / (tv * tv * (tv - one) * (tv - one)) *
                         (al + be * tv / (yv * yv) + ga * (tv - one) / ((yv - one) * (yv - one)) +
                          de * tv * (tv - one) / ((yv - tv) * (yv - tv)));
        mpf_class mag = abs(R);
        if (mag > worst) worst = mag;
        ++done;
    }
    return worst;
}

VerifyReport verify_solution(const ParamSolution& sol, std::size_t term_budget, unsigned samples,
                             unsigned digits) {
    VerifyReport rep;
    rep.label = sol.label;
    rep.theta = sol.theta;
    auto start = std::chrono::steady_clock::now();
    try {
        TowerElement R = residual(sol, term_budget);
        rep.path = VerifyPath::Exact;
        rep.passed = R.is_zero();
        rep.max_residual = rep.passed ? "0" : "nonzero";
        rep.samples = 0;
    } catch (const BudgetExceeded&) {
        rep.path = VerifyPath::Numeric;
        mpf_class worst = residual_numeric(sol, samples, digits);
        mp_exp_t exp10;
        std::string digits_str = worst.get_str(exp10, 10, 12);
        rep.max_residual =
            worst == 0 ? "0"
                       : ("0." + digits_str + "e" + std::to_string(static_cast<long>(exp10)));
        rep.passed = worst < pow10(-static_cast<long>(digits) / 2);
        rep.samples = samples;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace pvi
