#pragma once

#include <array>
#include <string>

#include "pvi/solution.hpp"

namespace pvi {

// One of the 24 fractional-linear symmetries.  Rows act on the tuple
// x = (theta0, theta1, thetaT, 1-thetaInf) by permutation and on (y, t) by
// the listed substitutions; substitutions compose from left to right.
struct FLRow {
    int index;                  // 0..23
    std::string tos_name;       // e.g. "pi2", "sigma1 sigma2"
    std::array<int, 4> perm;    // new x_i = x[perm[i]]
};

const std::array<FLRow, 24>& fl_rows();
const FLRow& fl_row(int index);
// Lookup by TOS-style name ("id", "pi1", "sigma2 pi1", ...); throws ShapeError.
const FLRow& fl_row_by_name(const std::string& name);

// Substitutions applied to values (usable on any field elements).
TowerElement fl_y(const FLRow& row, const TowerElement& y, const TowerElement& t);
TowerElement fl_t(const FLRow& row, const TowerElement& t);
ThetaTuple fl_theta(const FLRow& row, const ThetaTuple& theta);

ParamSolution fl_apply(const ParamSolution& sol, const FLRow& row);

// Row equal to "apply a, then apply b".
const FLRow& fl_compose(const FLRow& a, const FLRow& b);

}  // namespace pvi
