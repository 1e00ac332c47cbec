#pragma once

#include <vector>

#include "quandlink/gauss_code.hpp"

namespace quandlink {

// under_out = under_in ▷ over at a positive crossing,
// under_out = under_in ▷⁻¹ over at a negative one.
struct CrossingRelation {
    int under_in = 0;
    int over = 0;
    int under_out = 0;
    int sign = +1;

    bool operator==(const CrossingRelation&) const = default;
};

// One generator per arc, one relation per crossing.
struct KnotQuandlePresentation {
    int generator_count = 0;
    std::vector<int> generator_component;    // [0] unused; 1-based component per generator
    std::vector<CrossingRelation> relations; // ordered by crossing id

    int component_count() const;
};

KnotQuandlePresentation presentation(const SignedGaussCode& code);

} // namespace quandlink
