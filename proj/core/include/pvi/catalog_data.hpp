#pragma once

#include <vector>

namespace pvi::detail {

struct NamedExpr {
    const char* name;
    const char* expr;
};

// Transcribed parametrization of one catalog solution.
struct EntrySource {
    const char* id;
    const char* source;
    const char* theta;  // four space-separated rationals
    int degree;
    int genus;
    const char* base;
    std::vector<NamedExpr> gens;  // name, radicand expression (polynomial)
    std::vector<NamedExpr> lets;  // abbreviations usable in t/y
    const char* t_expr;
    const char* y_expr;
    std::vector<const char*> links;
};

const std::vector<EntrySource>& entry_sources();

}  // namespace pvi::detail
