#pragma once

#include <string>

#include "pvi/element.hpp"
#include "pvi/theta.hpp"

namespace pvi {

// One parametrized solution: t(s), y(s) on a shared tower, with the
// equation it claims to solve.
struct ParamSolution {
    TowerPtr tower;
    TowerElement t;
    TowerElement y;
    ThetaTuple theta;
    std::string label;
};

}  // namespace pvi
