#pragma once

#include <cstddef>
#include <string>

#include "pvi/numeric.hpp"
#include "pvi/solution.hpp"

namespace pvi {

inline constexpr std::size_t kDefaultTermBudget = 200000;
inline constexpr unsigned kDefaultDigits = 60;
inline constexpr unsigned kDefaultSamples = 20;

// Rejects y == 0, 1, t and t == 0, 1 (the equation's singular loci) and
// t constant; throws DegenerateSolution.
void check_nondegenerate(const ParamSolution& sol);

// The equation brought to one side and evaluated exactly; the zero element
// iff sol solves its equation on its curve.  Throws BudgetExceeded when an
// intermediate expression outgrows `term_budget` monomials.
TowerElement residual(const ParamSolution& sol, std::size_t term_budget = kDefaultTermBudget);

// Max |residual| over `samples` admissible points at `digits` precision.
// The differential quantities are exact; only the final combination is
// floating point.
mpf_class residual_numeric(const ParamSolution& sol, unsigned samples = kDefaultSamples,
                           unsigned digits = kDefaultDigits);

enum class VerifyPath { Exact, Numeric };

struct VerifyReport {
    std::string label;
    ThetaTuple theta;
    VerifyPath path = VerifyPath::Exact;
    bool passed = false;
    std::string max_residual;  // decimal string, "0" for the exact path
    unsigned samples = 0;
    double wall_seconds = 0.0;
};

// Tries the exact path within the budget, falling back to numeric
// automatically; tolerance for the numeric path is 10^-(digits/2).
VerifyReport verify_solution(const ParamSolution& sol,
                             std::size_t term_budget = kDefaultTermBudget,
                             unsigned samples = kDefaultSamples,
                             unsigned digits = kDefaultDigits);

}  // namespace pvi
