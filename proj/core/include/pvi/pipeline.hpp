#pragma once

#include <optional>
#include <vector>

#include "pvi/quadratic.hpp"
#include "pvi/shifts.hpp"

namespace pvi {

// One step of a transformation pipeline.  Inline syntax (comma separated):
//   fl[pi2]  fl[sigma1_sigma2]        fractional-linear rows by name
//   okamoto[-1/3,-1/3,-4/5,4/5]       Okamoto operator with that nu
//   manin                             the (0,A,B,1) quadratic transformation
//   table[1,8]  table[1,7,swap]       simple-quadratic table rows
//   kitaevA  kitaevA+  kitaevAhalf    direct quadratic transformation family
//   kitaevB                           symmetric (a,a,b,b) form
//   shift[b+1] shift[b-1] shift[a<->b] shift[b->1-b]   parameter shifts
//   contiguousY0                      derivative-free Y0 from the last chain
//   inverse                           inverse quadratic from the last chain
struct TransformStep {
    enum class Kind {
        FL,
        Okamoto,
        ManinQuadratic,
        TableQuadratic,
        KitaevA,
        KitaevA_b1,
        KitaevA_half,
        KitaevB,
        ParamShift,
        ContiguousY0,
        InverseQuadratic,
    };
    Kind kind;
    int fl_index = 0;
    NuTuple nu{};
    int top_row = 1, bottom_row = 7;
    bool swap_ab = false;
    ShiftKind shift = ShiftKind::BPlusOne;

    std::string str() const;
};

std::vector<TransformStep> parse_pipeline(const std::string& text);

// Applies the steps in order.  Chain-context steps (shift, contiguousY0,
// inverse) require a preceding kitaevA-family step.
ParamSolution apply_pipeline(const ParamSolution& start,
                             const std::vector<TransformStep>& steps,
                             RootResolver* roots = nullptr);

}  // namespace pvi
