#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandlink/gauss_code.hpp"
#include "quandlink/homcount.hpp"

namespace quandlink {

// lk_over = lk_{i/j}: sum of signs of crossings where component i passes
// over component j; lk_under = lk_{j/i}. The classical linking number is
// their average, an exact half-integer.
struct LinkingProfile {
    int over_component = 1;
    int under_component = 2;
    long long lk_over = 0;
    long long lk_under = 0;

    long long classical_times2() const { return lk_over + lk_under; }
    bool classical_is_integer() const { return classical_times2() % 2 == 0; }
    std::string classical_to_string() const;
};

LinkingProfile virtual_linking_numbers(const SignedGaussCode& code, int i, int j);

// Convenience for the theorems, which are stated for two-component links.
// Throws std::invalid_argument unless the code has exactly 2 components.
LinkingProfile two_component_profile(const SignedGaussCode& code);

enum class SplitnessEvidence { BothZero, NonclassicalEvidence, None };

std::string to_string(SplitnessEvidence e);

// nonclassical_evidence iff the two virtual linking numbers differ;
// both_zero iff both vanish.
SplitnessEvidence classify_splitness_evidence(const LinkingProfile& profile);

// Exact count of colorings of a two-component diagram by X_n:
//   n^2 + 1 + n·[n divides |lk12|] + n·[n divides |lk21|],
// where 0 counts as divisible by every n. Requires n >= 2.
std::uint64_t xn_count_closed_form(long long lk12, long long lk21, int n);

enum class RecoveryBranch {
    FullRange, // S = {2..N}  -> |lk| = 0
    EmptyS,    // S = {}      -> |lk| = 1
    MaxS,      // otherwise   -> |lk| = max(S)
};

std::string to_string(RecoveryBranch b);

struct RecoveryResult {
    std::vector<int> s;       // n with count (n+1)^2
    std::vector<int> s_prime; // n with count (n+1)^2 - n
    int bound = 0;            // N: counts were supplied for 2..N
    RecoveryBranch branch = RecoveryBranch::FullRange;
    long long abs_lk = 0;
    bool consistent_with_classical = true;          // false when s_prime is nonempty
    std::optional<int> max_s_prime;                 // present when s_prime nonempty
    std::optional<long long> gcd_interpretation;    // = max(S) on the MaxS branch
};

// counts must hold a value for every n in 2..bound, each within the
// three-valued set {(n+1)^2, (n+1)^2-n, n^2+1}; anything else throws
// std::invalid_argument. Soundness of the FullRange -> 0 classification
// needs bound >= the diagram's interlinked crossing count; that is the
// caller's duty.
RecoveryResult recover_abs_linking(const std::map<int, std::uint64_t>& counts, int bound);

// Per-n coloring counts of a diagram by X_n for n in min_n..max_n using the
// given engine. ClosedForm requires exactly two components.
std::map<int, std::uint64_t> xn_count_sweep(const SignedGaussCode& code, int min_n, int max_n,
                                            CountMethod method, double assignment_budget = 1e8);

} // namespace quandlink
