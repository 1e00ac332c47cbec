#include "quandlink/wirtinger.hpp"

#include <algorithm>

namespace quandlink {

int KnotQuandlePresentation::component_count() const {
    int max_comp = 0;
    for (int g = 1; g <= generator_count; ++g)
        max_comp = std::max(max_comp, generator_component[g]);
    return max_comp;
}

KnotQuandlePresentation presentation(const SignedGaussCode& code) {
    ArcTable table = arcs(code);
    KnotQuandlePresentation p;
    p.generator_count = table.arc_count();
    p.generator_component.assign(table.arc_count() + 1, 0);
    for (int arc = 1; arc <= table.arc_count(); ++arc)
        p.generator_component[arc] = table.component_of_arc(arc);
    p.relations.reserve(table.crossings().size());
    for (const CrossingRecord& rec : table.crossings())
        p.relations.push_back({rec.under_in_arc, rec.over_arc, rec.under_out_arc, rec.sign});
    return p;
}

} // namespace quandlink
