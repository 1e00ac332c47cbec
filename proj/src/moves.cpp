#include "quandlink/moves.hpp"

#include <random>
#include <stdexcept>

namespace quandlink {

namespace {

void check_insertion_point(const std::vector<std::vector<Passage>>& comps, int component,
                           int position) {
    if (component < 1 || component > static_cast<int>(comps.size()))
        throw std::out_of_range("move component index out of range");
    if (position < 0 || position > static_cast<int>(comps[component - 1].size()))
        throw std::out_of_range("move insertion position out of range");
}

} // namespace

SignedGaussCode apply_r1(const SignedGaussCode& code, const R1Insertion& move) {
    auto comps = code.components();
    check_insertion_point(comps, move.component, move.position);
    if (move.sign != 1 && move.sign != -1) throw std::invalid_argument("sign must be +1 or -1");

    const int id = code.max_crossing_id() + 1;
    Passage over{id, Role::Over, move.sign};
    Passage under{id, Role::Under, move.sign};
    auto& comp = comps[move.component - 1];
    auto at = comp.begin() + move.position;
    if (move.over_first)
        comp.insert(at, {over, under});
    else
        comp.insert(at, {under, over});
    return SignedGaussCode(std::move(comps));
}

SignedGaussCode apply_r2(const SignedGaussCode& code, const R2Insertion& move) {
    auto comps = code.components();
    check_insertion_point(comps, move.component_a, move.position_a);
    check_insertion_point(comps, move.component_b, move.position_b);
    if (move.sign != 1 && move.sign != -1) throw std::invalid_argument("sign must be +1 or -1");

    const int k = code.max_crossing_id() + 1;
    const int l = k + 1;
    std::vector<Passage> under_pair{{k, Role::Under, move.sign}, {l, Role::Under, -move.sign}};
    std::vector<Passage> over_pair{{l, Role::Over, -move.sign}, {k, Role::Over, move.sign}};

    auto insert_pair = [&comps](int component, int position, const std::vector<Passage>& pair) {
        auto& comp = comps[component - 1];
        comp.insert(comp.begin() + position, pair.begin(), pair.end());
    };

    if (move.component_a != move.component_b) {
        insert_pair(move.component_a, move.position_a, under_pair);
        insert_pair(move.component_b, move.position_b, over_pair);
    } else if (move.position_a > move.position_b) {
        // same component: insert at the larger index first so the other
        // index stays valid
        insert_pair(move.component_a, move.position_a, under_pair);
        insert_pair(move.component_b, move.position_b, over_pair);
    } else {
        insert_pair(move.component_b, move.position_b, over_pair);
        insert_pair(move.component_a, move.position_a, under_pair);
    }
    return SignedGaussCode(std::move(comps));
}

SignedGaussCode apply_script(const SignedGaussCode& code, const MoveScript& script) {
    SignedGaussCode current = code;
    for (const MoveRecord& record : script.moves) {
        if (const auto* r1 = std::get_if<R1Insertion>(&record))
            current = apply_r1(current, *r1);
        else
            current = apply_r2(current, std::get<R2Insertion>(record));
    }
    return current;
}

std::pair<SignedGaussCode, MoveScript> random_perturb(const SignedGaussCode& code,
                                                      std::uint64_t seed, int move_budget) {
    if (move_budget < 0) throw std::invalid_argument("move budget must be >= 0");

    std::mt19937_64 rng(seed);
    auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    SignedGaussCode current = code;
    MoveScript script;
    if (code.component_count() == 0) return {current, script};

    for (int step = 0; step < move_budget; ++step) {
        const auto& comps = current.components();
        const int m = static_cast<int>(comps.size());
        if (pick(2) == 0) {
            R1Insertion mv;
            mv.component = 1 + pick(m);
            mv.position = pick(static_cast<int>(comps[mv.component - 1].size()) + 1);
            mv.sign = pick(2) == 0 ? +1 : -1;
            mv.over_first = pick(2) == 0;
            current = apply_r1(current, mv);
            script.moves.push_back(mv);
        } else {
            R2Insertion mv;
            mv.component_a = 1 + pick(m);
            mv.position_a = pick(static_cast<int>(comps[mv.component_a - 1].size()) + 1);
            mv.component_b = 1 + pick(m);
            mv.position_b = pick(static_cast<int>(comps[mv.component_b - 1].size()) + 1);
            mv.sign = pick(2) == 0 ? +1 : -1;
            current = apply_r2(current, mv);
            script.moves.push_back(mv);
        }
    }
    return {current, script};
}

} // namespace quandlink
