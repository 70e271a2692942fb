#pragma once

#include <vector>

#include "pvi/catalog.hpp"

namespace pvi {

// Ramification data of the t-map over t = 0, 1, infinity.  Multiplicities
// are listed per geometric point (descending); each fiber sums to the
// degree of the map.
struct BranchPattern {
    std::vector<long> zeros;
    std::vector<long> ones;
    std::vector<long> poles;
    long degree = 0;
};

// Exact order-of-vanishing computation on towers whose relations involve the
// base variable only (at most two extensions).  Points at infinity are
// handled by the substitution s -> 1/s with generator rescaling.  Throws
// Error("unsupported tower shape") or "failed to separate points" when the
// bookkeeping cannot attribute orders uniquely.
BranchPattern branching(const CatalogEntry& entry);
BranchPattern branching(const TowerPtr& tower, const TowerElement& t);

}  // namespace pvi
