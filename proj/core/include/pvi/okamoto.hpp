#pragma once

#include "pvi/solution.hpp"

namespace pvi {

// Sign choice for the Okamoto operator: nu0 in {t0,-t0}, nu1 in {t1,-t1},
// nuT in {tt,-tt}, nuInf in {ti, 2-ti} relative to the solution's theta.
struct NuTuple {
    Rational n0, n1, nt, ni;

    Rational sum() const { return n0 + n1 + nt + ni; }
    std::string str() const;
};

bool nu_compatible(const NuTuple& nu, const ThetaTuple& theta);

// Z(t) = ((t-1)y' - nu0)/y - (t y' + nu1)/(y-1) + (y' - 1 - nuT)/(y-t)
TowerElement okamoto_z(const ParamSolution& sol, const NuTuple& nu);

// y -> y + (sum nu)/Z, theta -> nu - Theta with Theta = (sum nu)/2.
// Throws ShapeError for incompatible nu, FixedSolution when Z == 0 (and the
// correction is nonzero), DegenerateSolution for singular y.
ParamSolution okamoto(const ParamSolution& sol, const NuTuple& nu);

// Both identities of the composition lemma, checked exactly:
//   K[n0-T, n1-T, T-nt, ni-T] K[nu] y == K[n0, n1, -nt, ni] y
//   K[nu - Theta] K[nu] y == y
bool okamoto_compose_identity_check(const ParamSolution& sol, const NuTuple& nu);

}  // namespace pvi
