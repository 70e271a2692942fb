#include "pvi/fractional_linear.hpp"

#include "pvi/errors.hpp"
#include "pvi/residual.hpp"

namespace pvi {

namespace {

// a=theta0, b=theta1, c=thetaT, d=1-thetaInf; perm lists positions in
// (a,b,c,d) for the transformed tuple.
constexpr int A = 0, B = 1, C = 2, D = 3;

const std::array<FLRow, 24> kRows = {{
    {0, "id", {A, B, C, D}},
    {1, "sigma1 pi2", {A, B, D, C}},
    {2, "sigma2 pi1", {A, C, B, D}},
    {3, "sigma1 sigma2 pi2", {A, C, D, B}},
    {4, "sigma2 sigma1 pi1", {A, D, B, C}},
    {5, "sigma1 sigma2 sigma1", {A, D, C, B}},
    {6, "sigma1", {B, A, C, D}},
    {7, "pi2", {B, A, D, C}},
    {8, "sigma1 sigma3", {B, C, A, D}},
    {9, "sigma3 pi1", {B, C, D, A}},
    {10, "pi2 sigma2", {B, D, A, C}},
    {11, "sigma1 sigma2", {B, D, C, A}},
    {12, "sigma3 sigma1", {C, A, B, D}},
    {13, "sigma2 pi2", {C, A, D, B}},
    {14, "sigma3", {C, B, A, D}},
    {15, "sigma3 sigma2", {C, B, D, A}},
    {16, "pi1 pi2", {C, D, A, B}},
    {17, "sigma1 pi1", {C, D, B, A}},
    {18, "sigma3 pi2", {D, A, B, C}},
    {19, "sigma2 sigma1", {D, A, C, B}},
    {20, "sigma2 sigma3", {D, B, A, C}},
    {21, "sigma2", {D, B, C, A}},
    {22, "pi1 sigma1", {D, C, A, B}},
    {23, "pi1", {D, C, B, A}},
}};

}  // namespace

const std::array<FLRow, 24>& fl_rows() { return kRows; }

const FLRow& fl_row(int index) {
    if (index < 0 || index >= 24) throw ShapeError("fractional-linear row index out of range");
    return kRows[index];
}

const FLRow& fl_row_by_name(const std::string& name) {
    for (const auto& r : kRows)
        if (r.tos_name == name) return r;
    throw ShapeError("unknown fractional-linear row: " + name);
}

TowerElement fl_t(const FLRow& row, const TowerElement& t) {
    const Rational one(1);
    switch (row.index) {
        case 0: case 7: case 16: case 23:
            return t;                                   // t
        case 1: case 6: case 17: case 22:
            return one - t;                             // 1-t
        case 2: case 10: case 13: case 21:
            return t.inverse();                         // 1/t
        case 3: case 11: case 12: case 20:
            return (t - one) / t;                       // (t-1)/t
        case 4: case 8: case 15: case 19:
            return (one - t).inverse();                 // 1/(1-t)
        default:
            return t / (t - one);                       // t/(t-1)
    }
}

TowerElement fl_y(const FLRow& row, const TowerElement& y, const TowerElement& t) {
    const Rational one(1);
    switch (row.index) {
        case 0: return y;
        case 1: return (one - t) * y / (y - t);
        case 2: return y / t;
        case 3: return (t - one) * y / (t * (y - one));
        case 4: return y / (y - t);
        case 5: return y / (y - one);
        case 6: return one - y;
        case 7: return t * (y - one) / (y - t);
        case 8: return (y - one) / (t - one);
        case 9: return t * (y - one) / ((t - one) * y);
        case 10: return (y - one) / (y - t);
        case 11: return (y - one) / y;
        case 12: return (t - y) / t;
        case 13: return (y - t) / (t * (y - one));
        case 14: return (y - t) / (one - t);
        case 15: return (y - t) / ((one - t) * y);
        case 16: return (y - t) / (y - one);
        case 17: return (y - t) / y;
        case 18: return t / (t - y);
        case 19: return (one - y).inverse();
        case 20: return (one - t) / (y - t);
        case 21: return y.inverse();
        case 22: return (t - one) / (y - one);
        default: return t / y;
    }
}

ThetaTuple fl_theta(const FLRow& row, const ThetaTuple& th) {
    std::array<Rational, 4> x{th.t0, th.t1, th.tt, Rational(1) - th.ti};
    std::array<Rational, 4> nx;
    for (int i = 0; i < 4; ++i) nx[i] = x[row.perm[i]];
    return ThetaTuple{nx[0], nx[1], nx[2], Rational(1) - nx[3]};
}

ParamSolution fl_apply(const ParamSolution& sol, const FLRow& row) {
    check_nondegenerate(sol);
    ParamSolution out;
    out.tower = sol.tower;
    try {
        out.y = fl_y(row, sol.y, sol.t);
        out.t = fl_t(row, sol.t);
    } catch (const DivisionByZero&) {
        throw DegenerateSolution("fractional-linear row '" + row.tos_name +
                                 "' degenerates on " + sol.label);
    }
    out.theta = fl_theta(row, sol.theta);
    out.label = row.tos_name == "id" ? sol.label : (row.tos_name + " " + sol.label);
    return out;
}

const FLRow& fl_compose(const FLRow& a, const FLRow& b) {
    std::array<int, 4> net;
    for (int i = 0; i < 4; ++i) net[i] = a.perm[b.perm[i]];
    for (const auto& r : kRows)
        if (r.perm == net) return r;
    throw Error("fractional-linear composition escaped the table");
}

}  // namespace pvi
