#include "pvi/theta.hpp"

namespace pvi {

std::string ThetaTuple::str() const {
    return "(" + to_string(t0) + ", " + to_string(t1) + ", " + to_string(tt) + ", " +
           to_string(ti) + ")";
}

PviParams theta_to_params(const ThetaTuple& theta) {
    Rational half(1, 2);
    return PviParams{
        (theta.ti - 1) * (theta.ti - 1) * half,
        -theta.t0 * theta.t0 * half,
        theta.t1 * theta.t1 * half,
        (1 - theta.tt * theta.tt) * half,
    };
}

bool theta_equivalent(const ThetaTuple& a, const ThetaTuple& b) {
    auto pm = [](const Rational& x, const Rational& y) { return x == y || x == -y; };
    return pm(a.t0, b.t0) && pm(a.t1, b.t1) && pm(a.tt, b.tt) &&
           (a.ti == b.ti || b.ti == Rational(2) - a.ti);
}

}  // namespace pvi
