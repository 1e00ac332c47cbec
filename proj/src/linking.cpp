#include "quandlink/linking.hpp"

#include <algorithm>
#include <stdexcept>

namespace quandlink {

std::string LinkingProfile::classical_to_string() const {
    long long twice = classical_times2();
    if (twice % 2 == 0) return std::to_string(twice / 2);
    // exact half-integer, rendered as a decimal
    std::string s = twice < 0 ? "-" : "";
    long long mag = twice < 0 ? -twice : twice;
    return s + std::to_string(mag / 2) + ".5";
}

LinkingProfile virtual_linking_numbers(const SignedGaussCode& code, int i, int j) {
    const int m = code.component_count();
    if (m < 2) throw std::invalid_argument("virtual linking numbers need at least 2 components");
    if (i < 1 || i > m || j < 1 || j > m)
        throw std::out_of_range("component index out of range (have " + std::to_string(m) +
                                " components)");
    if (i == j) throw std::invalid_argument("component indices must be distinct");

    LinkingProfile profile;
    profile.over_component = i;
    profile.under_component = j;
    const ArcTable table = arcs(code);
    for (const CrossingRecord& rec : table.crossings()) {
        if (rec.over_component == i && rec.under_component == j) profile.lk_over += rec.sign;
        if (rec.over_component == j && rec.under_component == i) profile.lk_under += rec.sign;
    }
    return profile;
}

LinkingProfile two_component_profile(const SignedGaussCode& code) {
    if (code.component_count() != 2)
        throw std::invalid_argument("operation is defined for 2-component links; diagram has " +
                                    std::to_string(code.component_count()));
    return virtual_linking_numbers(code, 1, 2);
}

std::string to_string(SplitnessEvidence e) {
    switch (e) {
    case SplitnessEvidence::BothZero: return "both_zero";
    case SplitnessEvidence::NonclassicalEvidence: return "nonclassical_evidence";
    case SplitnessEvidence::None: return "none";
    }
    return "?";
}

SplitnessEvidence classify_splitness_evidence(const LinkingProfile& profile) {
    if (profile.lk_over != profile.lk_under) return SplitnessEvidence::NonclassicalEvidence;
    if (profile.lk_over == 0) return SplitnessEvidence::BothZero;
    return SplitnessEvidence::None;
}

std::uint64_t xn_count_closed_form(long long lk12, long long lk21, int n) {
    if (n < 2) throw std::invalid_argument("closed form is defined for n >= 2");
    auto divides = [n](long long v) {
        if (v < 0) v = -v;
        return v % n == 0; // 0 is divisible by every n
    };
    std::uint64_t count = static_cast<std::uint64_t>(n) * n + 1;
    if (divides(lk12)) count += n;
    if (divides(lk21)) count += n;
    return count;
}

std::string to_string(RecoveryBranch b) {
    switch (b) {
    case RecoveryBranch::FullRange: return "full_range";
    case RecoveryBranch::EmptyS: return "empty_s";
    case RecoveryBranch::MaxS: return "max_s";
    }
    return "?";
}

RecoveryResult recover_abs_linking(const std::map<int, std::uint64_t>& counts, int bound) {
    if (bound < 2) throw std::invalid_argument("recovery bound must be >= 2");

    RecoveryResult result;
    result.bound = bound;
    for (int n = 2; n <= bound; ++n) {
        auto it = counts.find(n);
        if (it == counts.end())
            throw std::invalid_argument("missing count for n = " + std::to_string(n));
        std::uint64_t full = static_cast<std::uint64_t>(n + 1) * (n + 1);
        std::uint64_t count = it->second;
        if (count == full)
            result.s.push_back(n);
        else if (count == full - static_cast<std::uint64_t>(n))
            result.s_prime.push_back(n);
        else if (count != static_cast<std::uint64_t>(n) * n + 1)
            throw std::invalid_argument("count " + std::to_string(count) + " for n = " +
                                        std::to_string(n) +
                                        " is outside {(n+1)^2, (n+1)^2-n, n^2+1}");
    }

    if (result.s.empty()) {
        result.branch = RecoveryBranch::EmptyS;
        result.abs_lk = 1;
    } else if (static_cast<int>(result.s.size()) == bound - 1) {
        result.branch = RecoveryBranch::FullRange;
        result.abs_lk = 0;
    } else {
        result.branch = RecoveryBranch::MaxS;
        result.abs_lk = result.s.back();
        result.gcd_interpretation = result.abs_lk;
    }
    result.consistent_with_classical = result.s_prime.empty();
    if (!result.s_prime.empty()) result.max_s_prime = result.s_prime.back();
    return result;
}

std::map<int, std::uint64_t> xn_count_sweep(const SignedGaussCode& code, int min_n, int max_n,
                                            CountMethod method, double assignment_budget) {
    if (min_n < 2 || max_n < min_n)
        throw std::invalid_argument("need 2 <= min_n <= max_n for an X_n sweep");

    std::map<int, std::uint64_t> counts;
    if (method == CountMethod::ClosedForm) {
        LinkingProfile profile = two_component_profile(code);
        for (int n = min_n; n <= max_n; ++n)
            counts[n] = xn_count_closed_form(profile.lk_over, profile.lk_under, n);
        return counts;
    }

    KnotQuandlePresentation p = presentation(code);
    CountOptions options;
    options.assignment_budget = assignment_budget;
    for (int n = min_n; n <= max_n; ++n) {
        Quandle target = make_xn(n);
        counts[n] = (method == CountMethod::Oracle ? count_oracle(p, target, options)
                                                   : count_propagate(p, target, options))
                        .count;
    }
    return counts;
}

} // namespace quandlink
