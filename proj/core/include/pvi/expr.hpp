#pragma once

#include <map>
#include <string>
#include <string_view>

#include "pvi/element.hpp"

namespace pvi {

// Recursive-descent parser for written-out formulas over a tower:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | primary ('^' integer)?
//   primary:= rational | symbol | '(' expr ')'
// Symbols are the base variable, the generators, and any registered
// aliases (e.g. "p" for P/(q^2-2q+5)).
class ExprContext {
  public:
    explicit ExprContext(TowerPtr tower);

    void define(const std::string& name, TowerElement value);
    bool has(const std::string& name) const { return symbols_.count(name) != 0; }
    const TowerPtr& tower() const { return tower_; }

    TowerElement parse(std::string_view text) const;

  private:
    TowerPtr tower_;
    std::map<std::string, TowerElement, std::less<>> symbols_;
};

}  // namespace pvi
