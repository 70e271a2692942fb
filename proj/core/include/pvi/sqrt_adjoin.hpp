#pragma once

#include <functional>
#include <string>

#include "pvi/element.hpp"

namespace pvi {

struct SqrtResult {
    TowerPtr tower;      // tower carrying the (possibly reused) generator
    TowerElement root;   // element with root^2 == radicand, on `tower`
    bool reused = false; // an existing generator (or known root) was used
};

// Adjoins a square root of `radicand` (nonzero).  The radicand is cleared to
// polynomial form; rational square content, monomial squares and -- for
// radicands univariate in the base variable (or univariate over constant
// generators) -- polynomial square factors are pulled out first, so the
// stored relation is squarefree in the cases that occur here.  An extension
// whose relation matches exactly is reused instead of duplicated.
SqrtResult sqrt_adjoin(const TowerPtr& tower, const TowerElement& radicand,
                       const std::string& name_hint);

// Root resolver used by the transformation pipelines: consult a table of
// known roots (each verified by squaring) before extending the tower.
class RootResolver {
  public:
    RootResolver() = default;

    // Registers root with root^2 == radicand; throws TowerError otherwise.
    void add_known_root(const TowerElement& radicand, const TowerElement& root);

    // Returns a root of `radicand`, preferring known roots; otherwise
    // adjoins a generator via sqrt_adjoin.  Updates `tower` in place when an
    // extension happens (known roots may live on larger towers too).
    TowerElement resolve(TowerPtr& tower, const TowerElement& radicand,
                         const std::string& name_hint);

  private:
    std::vector<std::pair<TowerElement, TowerElement>> known_;
};

}  // namespace pvi
