#pragma once

#include <iosfwd>
#include <string>

#include "pvi/element.hpp"

namespace pvi {

// Canonical text form.  Polynomials are sparse term lists
// ("coeff*s^a*u1" with terms in descending monomial order), rationals are
// "p/q", towers are ordered "gen u^2 = <poly>" lines.  The format is stable:
// serializing a parsed value reproduces the text byte for byte.

std::string poly_to_text(const Poly& p, const Tower& tower);
std::string element_to_text(const TowerElement& x);  // "(num) / (den)"
std::string tower_to_text(const Tower& t);           // "base s\n" + gen lines

Poly poly_from_text(const std::string& text, const Tower& tower);
TowerElement element_from_text(const std::string& text, const TowerPtr& tower);
TowerPtr tower_from_text(std::istream& lines);  // consumes base/gen lines

}  // namespace pvi
