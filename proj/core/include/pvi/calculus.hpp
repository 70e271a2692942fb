#pragma once

#include "pvi/element.hpp"

namespace pvi {

// d/ds of a tower element; generators differentiate implicitly through
// u_i^2 = p_i, i.e. u_i' = p_i' u_i / (2 p_i).
TowerElement derivative(const TowerElement& x);

// dy/dt for two functions of the same curve parameter: (dy/ds)/(dt/ds).
// Throws DegenerateSolution if dt/ds vanishes identically.
TowerElement derivative_along(const TowerElement& y, const TowerElement& t);

}  // namespace pvi
