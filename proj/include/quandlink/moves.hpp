#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "quandlink/gauss_code.hpp"

namespace quandlink {

// Insert an adjacent O/U pair with a fresh crossing id at one point of a
// component (a kink).
struct R1Insertion {
    int component = 1; // 1-based
    int position = 0;  // insertion index, 0..len
    int sign = +1;
    bool over_first = true;
};

// Insert U_k U_l at (component_a, position_a) and O_l O_k at
// (component_b, position_b), fresh ids k and l with signs +sign and -sign:
// the strand at a slides under the strand at b.
struct R2Insertion {
    int component_a = 1;
    int position_a = 0;
    int component_b = 1;
    int position_b = 0;
    int sign = +1;
};

using MoveRecord = std::variant<R1Insertion, R2Insertion>;

struct MoveScript {
    std::vector<MoveRecord> moves;
};

SignedGaussCode apply_r1(const SignedGaussCode& code, const R1Insertion& move);
SignedGaussCode apply_r2(const SignedGaussCode& code, const R2Insertion& move);
SignedGaussCode apply_script(const SignedGaussCode& code, const MoveScript& script);

// Applies move_budget uniformly chosen R1/R2 insertions; deterministic for
// a fixed seed.
std::pair<SignedGaussCode, MoveScript> random_perturb(const SignedGaussCode& code,
                                                      std::uint64_t seed, int move_budget);

} // namespace quandlink
