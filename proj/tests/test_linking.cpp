#include <doctest.h>

#include <random>

#include "quandlink/homcount.hpp"
#include "quandlink/linking.hpp"
#include "test_support.hpp"

using namespace quandlink;
using quandlink::testing::random_two_component_code;
using quandlink::testing::torus_code;

TEST_CASE("virtual linking numbers of the named examples") {
    SUBCASE("positive Hopf link") {
        auto profile = two_component_profile(SignedGaussCode::parse("O1+ U2+\nU1+ O2+"));
        CHECK(profile.lk_over == 1);
        CHECK(profile.lk_under == 1);
        CHECK(profile.classical_to_string() == "1");
        CHECK(classify_splitness_evidence(profile) == SplitnessEvidence::None);
    }
    SUBCASE("2-component unlink") {
        auto profile = two_component_profile(SignedGaussCode::parse("\n\n"));
        CHECK(profile.lk_over == 0);
        CHECK(profile.lk_under == 0);
        CHECK(classify_splitness_evidence(profile) == SplitnessEvidence::BothZero);
    }
    SUBCASE("8-crossing example with lk12 = 6, lk21 = -2") {
        auto profile = two_component_profile(SignedGaussCode::parse(
            "O1+ O2+ O3+ O4+ O5+ O6+ U7- U8-\nU1+ U2+ U3+ U4+ U5+ U6+ O7- O8-"));
        CHECK(profile.lk_over == 6);
        CHECK(profile.lk_under == -2);
        CHECK(profile.classical_times2() == 4);
        CHECK(profile.classical_to_string() == "2");
        CHECK(classify_splitness_evidence(profile) == SplitnessEvidence::NonclassicalEvidence);
    }
    SUBCASE("cancelling virtual linking numbers") {
        auto profile = two_component_profile(SignedGaussCode::parse("O1+ U2-\nU1+ O2-"));
        CHECK(profile.lk_over == 1);
        CHECK(profile.lk_under == -1);
        CHECK(profile.classical_times2() == 0);
        CHECK(classify_splitness_evidence(profile) == SplitnessEvidence::NonclassicalEvidence);
    }
    SUBCASE("half-integer classical linking number") {
        // single positive crossing between components
        auto profile = two_component_profile(SignedGaussCode::parse("O1+\nU1+"));
        CHECK(profile.lk_over == 1);
        CHECK(profile.lk_under == 0);
        CHECK_FALSE(profile.classical_is_integer());
        CHECK(profile.classical_to_string() == "0.5");
    }
}

TEST_CASE("component selection and errors") {
    auto chain = SignedGaussCode::parse("O1+\nU1+ O2+\nU2+");
    auto p12 = virtual_linking_numbers(chain, 1, 2);
    CHECK(p12.lk_over == 1);
    CHECK(p12.lk_under == 0);
    auto p32 = virtual_linking_numbers(chain, 3, 2);
    CHECK(p32.lk_over == 0);
    CHECK(p32.lk_under == 1);

    CHECK_THROWS_AS(virtual_linking_numbers(chain, 1, 4), std::out_of_range);
    CHECK_THROWS_AS(virtual_linking_numbers(chain, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(virtual_linking_numbers(SignedGaussCode::parse("\n"), 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(two_component_profile(chain), std::invalid_argument);
}

TEST_CASE("closed form reproduces the n = 2..7 count table for (6, -2)") {
    const std::uint64_t expected[] = {9, 13, 17, 26, 43, 50};
    for (int n = 2; n <= 7; ++n) CHECK(xn_count_closed_form(6, -2, n) == expected[n - 2]);
}

TEST_CASE("closed form basics") {
    for (int n = 2; n <= 8; ++n)
        CHECK(xn_count_closed_form(0, 0, n) == static_cast<std::uint64_t>(n + 1) * (n + 1));
    CHECK(xn_count_closed_form(1, 1, 2) == 5);
    CHECK(xn_count_closed_form(-4, 2, 2) == 9); // sign-insensitive
    CHECK_THROWS_AS(xn_count_closed_form(1, 1, 1), std::invalid_argument);
}

TEST_CASE("closed form equals the oracle on random 2-component codes") {
    std::mt19937_64 rng(987654321);
    CountOptions options;
    options.assignment_budget = 1e10;
    for (int i = 0; i < 40; ++i) {
        auto code = random_two_component_code(rng, 8);
        auto profile = two_component_profile(code);
        auto p = presentation(code);
        for (int n = 2; n <= 5; ++n)
            CHECK(xn_count_closed_form(profile.lk_over, profile.lk_under, n) ==
                  count_oracle(p, make_xn(n), options).count);
    }
    // n = 6 on smaller codes (7^arcs assignments)
    for (int i = 0; i < 10; ++i) {
        auto code = random_two_component_code(rng, 6);
        auto profile = two_component_profile(code);
        CHECK(xn_count_closed_form(profile.lk_over, profile.lk_under, 6) ==
              count_oracle(presentation(code), make_xn(6), options).count);
    }
}

TEST_CASE("recovery classification branches") {
    SUBCASE("torus (2,4): S = {2}, |lk| = 2") {
        auto counts = xn_count_sweep(torus_code(2), 2, 4, CountMethod::Propagate);
        auto rec = recover_abs_linking(counts, 4);
        CHECK(rec.s == std::vector<int>{2});
        CHECK(rec.s_prime.empty());
        CHECK(rec.branch == RecoveryBranch::MaxS);
        CHECK(rec.abs_lk == 2);
        CHECK(rec.gcd_interpretation == 2);
        CHECK(rec.consistent_with_classical);
    }
    SUBCASE("Hopf: S empty, |lk| = 1") {
        auto counts = xn_count_sweep(torus_code(1), 2, 2, CountMethod::Propagate);
        auto rec = recover_abs_linking(counts, 2);
        CHECK(rec.s.empty());
        CHECK(rec.branch == RecoveryBranch::EmptyS);
        CHECK(rec.abs_lk == 1);
    }
    SUBCASE("unlink: full range, |lk| = 0") {
        auto counts = xn_count_sweep(torus_code(0), 2, 2, CountMethod::Propagate);
        auto rec = recover_abs_linking(counts, 2);
        CHECK(rec.s == std::vector<int>{2});
        CHECK(rec.branch == RecoveryBranch::FullRange);
        CHECK(rec.abs_lk == 0);
    }
    SUBCASE("S' is reported with its maximum") {
        // counts for lk12=6, lk21=-2 over 2..7: S={2}, S'={3,6}
        std::map<int, std::uint64_t> counts;
        for (int n = 2; n <= 7; ++n) counts[n] = xn_count_closed_form(6, -2, n);
        auto rec = recover_abs_linking(counts, 7);
        CHECK(rec.s == std::vector<int>{2});
        CHECK(rec.s_prime == std::vector<int>{3, 6});
        CHECK(rec.max_s_prime == 6);
        CHECK_FALSE(rec.consistent_with_classical);
        CHECK(rec.abs_lk == 2); // gcd(6,2)
    }
}

TEST_CASE("recovery rejects malformed input") {
    std::map<int, std::uint64_t> missing{{2, 9}};
    CHECK_THROWS_AS(recover_abs_linking(missing, 3), std::invalid_argument);
    std::map<int, std::uint64_t> bogus{{2, 6}}; // {9, 7, 5} are the only legal values at n=2
    CHECK_THROWS_AS(recover_abs_linking(bogus, 2), std::invalid_argument);
    CHECK_THROWS_AS(recover_abs_linking({}, 1), std::invalid_argument);
}

TEST_CASE("torus-style links recover |lk| = m for m in 0..5") {
    for (int m = 0; m <= 5; ++m) {
        auto code = torus_code(m);
        int bound = std::max(2, code.interlinked_crossing_count());
        auto counts = xn_count_sweep(code, 2, bound, CountMethod::Propagate);
        auto rec = recover_abs_linking(counts, bound);
        CHECK(rec.abs_lk == m);
    }
}

TEST_CASE("recovery is stable when the bound grows past the sound minimum") {
    for (int m : {0, 2, 3}) {
        auto code = torus_code(m);
        int bound = std::max(2, code.interlinked_crossing_count());
        auto small = recover_abs_linking(xn_count_sweep(code, 2, bound, CountMethod::Propagate),
                                         bound);
        auto large = recover_abs_linking(
            xn_count_sweep(code, 2, bound + 5, CountMethod::Propagate), bound + 5);
        CHECK(small.abs_lk == large.abs_lk);
        CHECK(small.branch == large.branch);
    }
}

TEST_CASE("sweep methods agree") {
    auto code = torus_code(2);
    auto closed = xn_count_sweep(code, 2, 5, CountMethod::ClosedForm);
    auto oracle = xn_count_sweep(code, 2, 5, CountMethod::Oracle);
    auto propagate = xn_count_sweep(code, 2, 5, CountMethod::Propagate);
    CHECK(closed == oracle);
    CHECK(closed == propagate);
    CHECK_THROWS_AS(xn_count_sweep(SignedGaussCode::parse("\n"), 2, 3, CountMethod::ClosedForm),
                    std::invalid_argument);
}

TEST_CASE("splitness evidence enum covers the three cases") {
    LinkingProfile p;
    p.lk_over = 3;
    p.lk_under = 3;
    CHECK(classify_splitness_evidence(p) == SplitnessEvidence::None);
    p.lk_under = -3;
    CHECK(classify_splitness_evidence(p) == SplitnessEvidence::NonclassicalEvidence);
    CHECK(to_string(SplitnessEvidence::NonclassicalEvidence) == "nonclassical_evidence");
    p.lk_over = p.lk_under = 0;
    CHECK(classify_splitness_evidence(p) == SplitnessEvidence::BothZero);
}
