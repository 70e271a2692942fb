#pragma once

#include <optional>
#include <vector>

#include "pvi/residual.hpp"
#include "pvi/solution.hpp"

namespace pvi {

// A named algebraic solution: its curve, maps, equation, and the claimed
// degree/genus of the curve.
struct CatalogEntry {
    std::string id;
    std::string source;  // where the parametrization comes from
    ParamSolution solution;
    int claimed_degree = 0;
    int claimed_genus = 0;
    // ids of entries reachable by the recorded quadratic pipeline
    std::vector<std::string> links;

    const TowerPtr& tower() const { return solution.tower; }
    const TowerElement& t() const { return solution.t; }
    const TowerElement& y() const { return solution.y; }
    const ThetaTuple& theta() const { return solution.theta; }
};

// All entries, built from the embedded sources; deterministic id order.
const std::vector<CatalogEntry>& load_catalog();
const CatalogEntry& catalog_entry(const std::string& id);  // throws Error
bool catalog_has(const std::string& id);

// Residual verification (exact within the budget, else numeric).
VerifyReport verify_entry(const CatalogEntry& entry,
                          std::size_t term_budget = kDefaultTermBudget,
                          unsigned samples = kDefaultSamples,
                          unsigned digits = kDefaultDigits);

// Canonical fixture file (text form, UTF-8, LF): tower, theta, maps.
std::string entry_to_fixture(const CatalogEntry& entry);
CatalogEntry entry_from_fixture(const std::string& text);

}  // namespace pvi
