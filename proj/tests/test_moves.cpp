#include <doctest.h>

#include "quandlink/homcount.hpp"
#include "quandlink/linking.hpp"
#include "quandlink/moves.hpp"
#include "test_support.hpp"

using namespace quandlink;
using quandlink::testing::corpus;

namespace {

std::uint64_t hom(const SignedGaussCode& code, const Quandle& target) {
    return count_propagate(presentation(code), target).count;
}

} // namespace

TEST_CASE("R1 on the bare unknot") {
    auto code = SignedGaussCode::parse("\n");
    auto kinked = apply_r1(code, {1, 0, +1, true});
    CHECK(kinked.serialize() == "O1+ U1+\n");
    CHECK(hom(kinked, make_xn(2)) == 3);
    CHECK(count_oracle(presentation(kinked), make_xn(2)).count == 3);
}

TEST_CASE("R1 keeps Hopf counts") {
    auto hopf = SignedGaussCode::parse("O1+ U2+\nU1+ O2+");
    for (int n : {2, 3}) {
        const Quandle x = make_xn(n);
        std::uint64_t base = count_oracle(presentation(hopf), x).count;
        for (bool over_first : {true, false})
            for (int sign : {+1, -1})
                for (int pos = 0; pos <= 2; ++pos) {
                    auto moved = apply_r1(hopf, {1, pos, sign, over_first});
                    CHECK(count_oracle(presentation(moved), x).count == base);
                }
    }
}

TEST_CASE("R1 insertion ids are fresh and the result validates") {
    auto trefoil = SignedGaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+");
    auto moved = apply_r1(trefoil, {1, 3, -1, false});
    CHECK(moved.crossing_count() == 4);
    CHECK(moved.max_crossing_id() == 4);
    CHECK_THROWS_AS(apply_r1(trefoil, {2, 0, +1, true}), std::out_of_range);
    CHECK_THROWS_AS(apply_r1(trefoil, {1, 7, +1, true}), std::out_of_range);
}

TEST_CASE("cross-component R2 cancels in the linking numbers") {
    auto unlink = SignedGaussCode::parse("\n\n");
    for (int sign : {+1, -1}) {
        auto moved = apply_r2(unlink, {1, 0, 2, 0, sign});
        auto profile = two_component_profile(moved);
        CHECK(profile.lk_over == 0);
        CHECK(profile.lk_under == 0);
        for (int n = 2; n <= 4; ++n)
            CHECK(hom(moved, make_xn(n)) == static_cast<std::uint64_t>(n + 1) * (n + 1));
    }
}

TEST_CASE("same-strand R2 keeps Hopf counts") {
    auto hopf = SignedGaussCode::parse("O1+ U2+\nU1+ O2+");
    const Quandle x2 = make_xn(2);
    std::uint64_t base = count_oracle(presentation(hopf), x2).count;
    for (int pa = 0; pa <= 2; ++pa)
        for (int pb = 0; pb <= 2; ++pb)
            for (int sign : {+1, -1}) {
                auto moved = apply_r2(hopf, {1, pa, 1, pb, sign});
                CHECK(count_oracle(presentation(moved), x2).count == base);
            }
}

TEST_CASE("R2 across components keeps counts for both sign orders") {
    auto hopf = SignedGaussCode::parse("O1+ U2+\nU1+ O2+");
    const Quandle x3 = make_xn(3);
    std::uint64_t base = count_oracle(presentation(hopf), x3).count;
    for (int sign : {+1, -1}) {
        auto moved = apply_r2(hopf, {1, 1, 2, 1, sign});
        CHECK(count_oracle(presentation(moved), x3).count == base);
        auto profile = two_component_profile(moved);
        CHECK(profile.lk_over == 1);
        CHECK(profile.lk_under == 1);
    }
}

TEST_CASE("apply_script replays a move list") {
    auto hopf = SignedGaussCode::parse("O1+ U2+\nU1+ O2+");
    MoveScript script;
    script.moves.push_back(R1Insertion{1, 0, -1, false});
    script.moves.push_back(R2Insertion{1, 2, 2, 0, +1});
    auto direct = apply_r2(apply_r1(hopf, {1, 0, -1, false}), {1, 2, 2, 0, +1});
    CHECK(apply_script(hopf, script) == direct);
}

TEST_CASE("random perturbation") {
    auto hopf = SignedGaussCode::parse("O1+ U2+\nU1+ O2+");

    SUBCASE("budget 0 is the identity") {
        auto [code, script] = random_perturb(hopf, 99, 0);
        CHECK(code == hopf);
        CHECK(script.moves.empty());
    }
    SUBCASE("deterministic under a fixed seed") {
        auto a = random_perturb(hopf, 7, 3);
        auto b = random_perturb(hopf, 7, 3);
        CHECK(a.first == b.first);
        CHECK(apply_script(hopf, a.second) == a.first);
    }
    SUBCASE("seed 7 budget 3 enlarges the code but keeps Hopf counts") {
        auto [code, script] = random_perturb(hopf, 7, 3);
        CHECK(script.moves.size() == 3);
        CHECK(code.crossing_count() == 8); // mt19937_64 is pinned by the standard
        CHECK(code.crossing_count() >= 2 + 3);
        CHECK(code.crossing_count() <= 2 + 6);
        for (int n : {2, 3})
            CHECK(hom(code, make_xn(n)) == hom(hopf, make_xn(n)));
    }
    SUBCASE("zero-component code is returned unchanged") {
        auto [code, script] = random_perturb(SignedGaussCode::parse(""), 3, 5);
        CHECK(code.component_count() == 0);
        CHECK(script.moves.empty());
    }
}

TEST_CASE("perturbations preserve counts and linking numbers across the corpus") {
    const std::vector<Quandle> targets{make_trivial(2), make_xn(2), make_xn(3)};
    for (const auto& link : corpus()) {
        auto code = SignedGaussCode::parse(link.text);
        std::vector<std::uint64_t> base;
        for (const auto& t : targets) base.push_back(hom(code, t));

        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto [moved, script] = random_perturb(code, seed, 1 + static_cast<int>(seed) % 4);
            for (std::size_t k = 0; k < targets.size(); ++k)
                CHECK(hom(moved, targets[k]) == base[k]);
            for (int i = 1; i <= code.component_count(); ++i)
                for (int j = 1; j <= code.component_count(); ++j) {
                    if (i == j) continue;
                    auto before = virtual_linking_numbers(code, i, j);
                    auto after = virtual_linking_numbers(moved, i, j);
                    CHECK(before.lk_over == after.lk_over);
                    CHECK(before.lk_under == after.lk_under);
                }
        }
    }
}
