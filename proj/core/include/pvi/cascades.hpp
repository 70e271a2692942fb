#pragma once

#include <string>
#include <vector>

#include "pvi/catalog.hpp"
#include "pvi/pipeline.hpp"

namespace pvi {

// Recorded regeneration data for one quadratic link of the catalog: apply
// `pipeline` to `source` and compare against `target` after the recorded
// change of curve coordinates.
struct CascadeFixture {
    std::string source;
    std::string target;
    std::string pipeline;
    bool exact = true;
    // exact mode: embedding of the target tower into the pipeline-output
    // tower (expressions over the output tower's variables); empty strings
    // are not allowed when exact
    std::string base_image;
    std::vector<std::string> gen_images;
    // numeric mode: towers share the base variable; compare branch sets
    unsigned samples = 20;
};

const std::vector<CascadeFixture>& cascade_fixtures();

struct CascadeReport {
    std::string source, target;
    bool passed = false;
    bool exact = true;
    std::string detail;
};

CascadeReport check_cascade(const CascadeFixture& fixture);

// Convenience: all fixtures, in order.
std::vector<CascadeReport> check_all_cascades();

}  // namespace pvi
