#pragma once

#include <string>

#include "pvi/rational.hpp"

namespace pvi {

// The four local monodromy differences (theta_0, theta_1, theta_t, theta_inf).
struct ThetaTuple {
    Rational t0, t1, tt, ti;

    friend bool operator==(const ThetaTuple&, const ThetaTuple&) = default;
    std::string str() const;
};

// Coefficients of the equation itself.
struct PviParams {
    Rational alpha, beta, gamma, delta;

    friend bool operator==(const PviParams&, const PviParams&) = default;
};

// alpha=(ti-1)^2/2, beta=-t0^2/2, gamma=t1^2/2, delta=(1-tt^2)/2
PviParams theta_to_params(const ThetaTuple& theta);

// True iff b arises from a by flipping signs of theta_0, theta_1, theta_t
// and/or replacing theta_inf by 2 - theta_inf; such tuples give the same
// equation.
bool theta_equivalent(const ThetaTuple& a, const ThetaTuple& b);

}  // namespace pvi
