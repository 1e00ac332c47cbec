#include "quandlink/homcount.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "quandlink/errors.hpp"

namespace quandlink {

std::string to_string(CountMethod m) {
    switch (m) {
    case CountMethod::Oracle: return "oracle";
    case CountMethod::Propagate: return "propagate";
    case CountMethod::ClosedForm: return "closed";
    }
    return "?";
}

ColoringReport count_oracle(const KnotQuandlePresentation& p, const Quandle& target,
                            const CountOptions& options) {
    const int arc_count = p.generator_count;
    const int t = target.order();

    long double required = std::pow(static_cast<long double>(t), static_cast<long double>(arc_count));
    if (required > static_cast<long double>(options.assignment_budget))
        throw OracleBudgetExceeded(static_cast<double>(required), options.assignment_budget);

    ColoringReport report;
    report.method = CountMethod::Oracle;
    report.target_order = t;
    report.arc_count = arc_count;
    if (options.list_colorings) report.colorings.emplace();

    std::vector<int> color(arc_count + 1, 1);
    color[0] = 0;
    for (;;) {
        bool ok = true;
        for (const CrossingRelation& r : p.relations)
            if (color[r.under_out] != target.apply(color[r.under_in], color[r.over], r.sign)) {
                ok = false;
                break;
            }
        if (ok) {
            ++report.count;
            if (report.colorings) report.colorings->push_back({color});
        }
        int i = arc_count;
        while (i >= 1 && color[i] == t) color[i--] = 1;
        if (i == 0) break;
        ++color[i];
    }
    return report;
}

namespace {

class PropagateSearch {
public:
    PropagateSearch(const KnotQuandlePresentation& p, const Quandle& target, bool listing)
        : p_(p), t_(target), order_(target.order()), listing_(listing),
          color_(p.generator_count + 1, 0) {
        rels_of_.resize(p.generator_count + 1);
        for (int r = 0; r < static_cast<int>(p_.relations.size()); ++r) {
            const CrossingRelation& rel = p_.relations[r];
            rels_of_[rel.under_in].push_back(r);
            if (rel.over != rel.under_in) rels_of_[rel.over].push_back(r);
            if (rel.under_out != rel.under_in && rel.under_out != rel.over)
                rels_of_[rel.under_out].push_back(r);
        }
        seeds_.assign(p.component_count() + 1, 0);
        for (int arc = 1; arc <= p.generator_count; ++arc) {
            int c = p_.generator_component[arc];
            if (seeds_[c] == 0) seeds_[c] = arc;
        }
    }

    void run() { search(); }

    std::uint64_t count = 0;
    std::vector<Coloring> found;

private:
    void assign(int arc, int value, std::vector<int>& queue) {
        color_[arc] = value;
        trail_.push_back(arc);
        for (int r : rels_of_[arc]) queue.push_back(r);
    }

    bool propagate(std::vector<int>& queue) {
        while (!queue.empty()) {
            const CrossingRelation& rel = p_.relations[queue.back()];
            queue.pop_back();
            int cin = color_[rel.under_in];
            int cov = color_[rel.over];
            int cout = color_[rel.under_out];
            if (cin && cov) {
                int forced = t_.apply(cin, cov, rel.sign);
                if (!cout) {
                    assign(rel.under_out, forced, queue);
                    cout = forced;
                } else if (cout != forced)
                    return false;
            }
            if (cout && cov) {
                int forced = t_.apply(cout, cov, -rel.sign);
                if (!cin)
                    assign(rel.under_in, forced, queue);
                else if (cin != forced)
                    return false;
            }
        }
        return true;
    }

    // Would coloring arc with value immediately falsify a fully determined
    // relation? Used both as branch filter and as the candidate count for
    // the stall heuristic.
    bool consistent(int arc, int value) {
        color_[arc] = value;
        bool ok = true;
        for (int ri : rels_of_[arc]) {
            const CrossingRelation& rel = p_.relations[ri];
            int cin = color_[rel.under_in];
            int cov = color_[rel.over];
            int cout = color_[rel.under_out];
            if (cin && cov && cout && t_.apply(cin, cov, rel.sign) != cout) {
                ok = false;
                break;
            }
        }
        color_[arc] = 0;
        return ok;
    }

    // Uncolored component seeds first (in component order), then minimum
    // remaining candidates with ties to the lowest arc id. 0 = all colored.
    int pick_arc() {
        for (std::size_t c = 1; c < seeds_.size(); ++c)
            if (color_[seeds_[c]] == 0) return seeds_[c];
        int best = 0;
        int best_cands = std::numeric_limits<int>::max();
        for (int arc = 1; arc <= p_.generator_count; ++arc) {
            if (color_[arc]) continue;
            int cands = 0;
            for (int v = 1; v <= order_; ++v)
                if (consistent(arc, v)) ++cands;
            if (cands < best_cands) {
                best = arc;
                best_cands = cands;
            }
        }
        return best;
    }

    void search() {
        int arc = pick_arc();
        if (arc == 0) {
            ++count;
            if (listing_) found.push_back({color_});
            return;
        }
        for (int v = 1; v <= order_; ++v) {
            if (!consistent(arc, v)) continue;
            std::size_t mark = trail_.size();
            std::vector<int> queue;
            assign(arc, v, queue);
            if (propagate(queue)) search();
            while (trail_.size() > mark) {
                color_[trail_.back()] = 0;
                trail_.pop_back();
            }
        }
    }

    const KnotQuandlePresentation& p_;
    const Quandle& t_;
    const int order_;
    const bool listing_;
    std::vector<int> color_;
    std::vector<int> trail_;
    std::vector<std::vector<int>> rels_of_;
    std::vector<int> seeds_;
};

} // namespace

ColoringReport count_propagate(const KnotQuandlePresentation& p, const Quandle& target,
                               const CountOptions& options) {
    PropagateSearch search(p, target, options.list_colorings);
    search.run();

    ColoringReport report;
    report.method = CountMethod::Propagate;
    report.target_order = target.order();
    report.arc_count = p.generator_count;
    report.count = search.count;
    if (options.list_colorings) report.colorings = std::move(search.found);
    return report;
}

bool count_decomposition_check(const KnotQuandlePresentation& p, const Quandle& target) {
    if (p.component_count() != 1)
        throw std::invalid_argument(
            "decomposition identity is stated for knots; presentation has " +
            std::to_string(p.component_count()) + " components");

    std::uint64_t whole = count_propagate(p, target).count;
    std::uint64_t sum = 0;
    for (const auto& orbit : orbits(target).orbits)
        sum += count_propagate(p, subquandle(target, orbit)).count;
    return whole == sum;
}

} // namespace quandlink
