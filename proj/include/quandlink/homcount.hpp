#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlink/quandle.hpp"
#include "quandlink/wirtinger.hpp"

namespace quandlink {

// Arc coloring: color[arc] in 1..|T|, [0] unused.
struct Coloring {
    std::vector<int> color;

    bool operator==(const Coloring&) const = default;
};

enum class CountMethod { Oracle, Propagate, ClosedForm };

std::string to_string(CountMethod m);

struct CountOptions {
    bool list_colorings = false;
    double assignment_budget = 1e8; // oracle refusal threshold, in assignments
};

struct ColoringReport {
    std::uint64_t count = 0;
    CountMethod method = CountMethod::Oracle;
    int target_order = 0;
    int arc_count = 0;
    std::optional<std::vector<Coloring>> colorings; // present iff requested
};

// Ground truth by complete enumeration of all |T|^arcs assignments.
// Throws OracleBudgetExceeded when that exceeds options.assignment_budget.
ColoringReport count_oracle(const KnotQuandlePresentation& p, const Quandle& target,
                            const CountOptions& options = {});

// Complete backtracking search: seed one arc per component, push forced
// colors through relations in both directions, branch on the uncolored arc
// with fewest remaining candidates when stalled. Same count as the oracle.
ColoringReport count_propagate(const KnotQuandlePresentation& p, const Quandle& target,
                               const CountOptions& options = {});

// For a 1-component presentation: does the count into target equal the sum
// of counts into its orbit subquandles? Throws std::invalid_argument for
// multi-component presentations.
bool count_decomposition_check(const KnotQuandlePresentation& p, const Quandle& target);

} // namespace quandlink
