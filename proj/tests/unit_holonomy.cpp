#include <doctest.h>

#include "oracles.hpp"
#include "rht/holonomy.hpp"

using namespace rht;

namespace {

BettiInput betti8(long b2, long b3, long b4p, long b4m) {
    BettiInput in;
    in.b = BettiVector{{1, 0, b2, b3, b4p + b4m, b3, b2, 0, 1}};
    in.b4_plus = b4p;
    in.b4_minus = b4m;
    return in;
}

} // namespace

TEST_CASE("the middle-degree Betti relation") {
    CHECK(spin7_feasible(betti8(0, 0, 25, 0)));
    CHECK(!spin7_feasible(betti8(1, 4, 22, 1)));
    CHECK_THROWS_AS(spin7_feasible(betti8(0, 25, 0, 0)), validation_error);
    BettiInput missing;
    missing.b = BettiVector{{1, 0, 0, 0, 25, 0, 0, 0, 1}};
    CHECK_THROWS_AS(spin7_feasible(missing), validation_error);
}

TEST_CASE("elliptic obstruction certificates") {
    auto spin7 = spin7_elliptic_obstruction();
    CHECK(spin7.bound == 23);
    CHECK(spin7.threshold == 8);
    CHECK(spin7.obstructed);
    std::vector<long> bounds;
    for (const auto& s : spin7.trail)
        if (s.statement.rfind("b2 = ", 0) == 0) bounds.push_back(s.value);
    CHECK(bounds == std::vector<long>{25, 26, 26, 25, 23});

    auto su4 = su4_elliptic_obstruction();
    CHECK(su4.bound == 17);
    CHECK(su4.threshold == 50);
    CHECK(su4.obstructed);
    bool saw_cap = false;
    for (const auto& s : su4.trail)
        if (s.value == 12) saw_cap = true;
    CHECK(saw_cap);
}

TEST_CASE("candidate types for the exceptional holonomy") {
    auto report = g2_candidate_types();
    std::vector<RealType7> expected = {RealType7::S4xS3, RealType7::CP2xS3,
                                       RealType7::S3xCP2_connected_sum_CP2};
    CHECK(report.candidates == expected);
    CHECK(report.excluded == RealType7::S2xS2xS3);
    CHECK(report.exclusion_witness.find("= 0") != std::string::npos);
}

TEST_CASE("cup-form definiteness witnesses") {
    auto product_witness = lefschetz_degenerate_witness(standard_model7(RealType7::S2xS2xS3));
    REQUIRE(product_witness.has_value());
    CHECK(product_witness->kind == "null");

    CHECK(!lefschetz_degenerate_witness(standard_model7(RealType7::S4xS3)).has_value());
    CHECK(!lefschetz_degenerate_witness(standard_model7(RealType7::CP2xS3)).has_value());
    CHECK(!lefschetz_degenerate_witness(standard_model7(RealType7::S3xCP2_connected_sum_CP2))
               .has_value());

    // b3 = 0: precondition fails.
    CHECK_THROWS_AS(lefschetz_degenerate_witness(standard_model7(RealType7::S2xS5)),
                    validation_error);
}

TEST_CASE("quaternionic Betti triples in dimension 16") {
    auto rep = pqk16_triples();
    std::vector<PQKTriple> displayed = {{1, 0, 1}, {2, 1, 2}, {3, 0, 4},
                                        {3, 2, 3}, {4, 1, 5}, {4, 3, 4},
                                        {5, 0, 7}, {5, 2, 6}, {5, 4, 5}};
    std::sort(displayed.begin(), displayed.end());
    CHECK(rep.displayed == displayed);
    CHECK(rep.final_ == std::vector<PQKTriple>{{1, 0, 1}, {2, 1, 2}, {3, 0, 4}});
    for (const auto& t : rep.displayed) {
        CHECK(2 * t.b8 == 3 * t.b4 - t.b6 - 1);
        CHECK(t.b4 >= 1);
        CHECK(t.b4 <= t.b8);
    }
    // Parity: (2, 0, *) is impossible.
    for (const auto& t : rep.displayed) CHECK(!(t.b4 == 2 && t.b6 == 0));
}

TEST_CASE("homotopy vectors of the admissible triples balance the dimension") {
    auto h1 = pqk16_homotopy_vector({1, 0, 1});
    CHECK(h1.vector == HomotopyVector{{4, 1}, {19, 1}});
    CHECK(h1.balanced);

    auto h2 = pqk16_homotopy_vector({2, 1, 2});
    CHECK(h2.vector == HomotopyVector{{4, 2}, {6, 1}, {7, 1}, {9, 1}, {11, 1}});
    CHECK(h2.balanced);

    auto h3 = pqk16_homotopy_vector({3, 0, 4});
    CHECK(h3.vector == HomotopyVector{{4, 3}, {7, 2}, {11, 1}});
    CHECK(h3.balanced);
    CHECK(h3.dimension_formula == 16);

    CHECK_THROWS_AS(pqk16_homotopy_vector({3, 2, 3}), validation_error);
}

TEST_CASE("dimension-12 quaternionic analysis") {
    auto cases = pqk12_analysis();
    REQUIRE(cases.size() == 3);

    CHECK(cases[0].c4 == 1);
    CHECK(cases[0].printed == HomotopyVector{{4, 1}, {15, 1}});
    CHECK(cases[0].printed_balanced);

    CHECK(cases[1].c4 == 2);
    CHECK(cases[1].printed == HomotopyVector{{4, 2}, {7, 1}, {15, 1}});
    CHECK(!cases[1].printed_balanced); // the published degree overshoots by 4
    CHECK(cases[1].printed_balance == 16);
    CHECK(cases[1].consistent == HomotopyVector{{4, 2}, {7, 1}, {11, 1}});

    CHECK(cases[2].c4 == 3);
    CHECK(cases[2].printed == HomotopyVector{{4, 3}, {7, 3}});
    CHECK(cases[2].printed_balanced);

    for (const auto& c : cases) {
        long balance = 0;
        for (const auto& [deg, count] : c.consistent)
            balance += deg % 2 == 1 ? deg * count : -(deg - 1) * count;
        CHECK(balance == 12);
    }
}

TEST_CASE("formality bounds reproduce the verified table cells") {
    BoundQuery q;
    q.manifold_class = ManifoldClass::pqk;
    q.dim = 16;

    q.k = 3;
    q.estimate = EstimateKind::first;
    CHECK(formality_bound(q) == 5005);

    q.k = 2;
    q.estimate = EstimateKind::special_bp;
    CHECK(formality_bound(q) == 455);

    q.k = 4;
    q.estimate = EstimateKind::special_bp;
    CHECK(formality_bound(q) == 6435);
    q.estimate = EstimateKind::first;
    CHECK(formality_bound(q) == 6435);

    BoundQuery k;
    k.manifold_class = ManifoldClass::kaehler_trivial_hodge;
    k.dim = 4;
    k.k = 1;
    k.estimate = EstimateKind::second;
    CHECK(formality_bound(k) == 3);
    k.estimate = EstimateKind::special_b2;
    CHECK(formality_bound(k) == 1);

    // Divisibility hypothesis violations are rejected.
    BoundQuery bad;
    bad.manifold_class = ManifoldClass::pqk;
    bad.dim = 12;
    bad.k = 2;
    bad.estimate = EstimateKind::special_bp; // 2n = 6 not divisible by p = 4
    CHECK_THROWS_AS(formality_bound(bad), validation_error);

    bad.manifold_class = ManifoldClass::kaehler_trivial_hodge;
    bad.dim = 16;
    bad.k = 3; // n = 8 not divisible by p = 6
    CHECK_THROWS_AS(formality_bound(bad), validation_error);

    bad.k = 7; // beyond the middle dimension
    CHECK_THROWS_AS(formality_bound(bad), validation_error);
}

TEST_CASE("table comparison flags exactly the unmatched cells") {
    auto cells = bound_table_comparison();
    std::vector<std::pair<int, int>> flagged_kaehler, flagged_pqk;
    for (const auto& c : cells) {
        if (c.matched) continue;
        if (c.manifold_class == ManifoldClass::kaehler_trivial_hodge)
            flagged_kaehler.emplace_back(c.dim, c.betti_index);
        else
            flagged_pqk.emplace_back(c.dim, c.betti_index);
    }
    std::vector<std::pair<int, int>> expected_kaehler = {
        {6, 2}, {8, 2}, {10, 2}, {12, 2}, {14, 2}, {16, 2}, {16, 4}};
    std::vector<std::pair<int, int>> expected_pqk = {{12, 4}};
    CHECK(flagged_kaehler == expected_kaehler);
    CHECK(flagged_pqk == expected_pqk);

    // The verified cells and the matching estimates.
    auto find = [&](ManifoldClass cls, int dim, int idx) -> const BoundComparisonCell& {
        for (const auto& c : cells)
            if (c.manifold_class == cls && c.dim == dim && c.betti_index == idx) return c;
        throw std::runtime_error("cell not found");
    };
    CHECK(find(ManifoldClass::pqk, 16, 4).matching_estimates ==
          std::vector<std::string>{"special_bp"});
    CHECK(find(ManifoldClass::pqk, 16, 6).matching_estimates ==
          std::vector<std::string>{"main"});
    CHECK(find(ManifoldClass::kaehler_trivial_hodge, 4, 2).matching_estimates ==
          std::vector<std::string>{"second"});
    CHECK(find(ManifoldClass::pqk, 12, 4).estimates.at("main") == 330);

    // Every estimate respects the torus bound.
    for (const auto& c : cells)
        for (const auto& [name, value] : c.estimates) CHECK(value <= c.torus_value);
}

TEST_CASE("complement dimensions match the brute-force wedge count") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int s = 2; s <= 4 && s + k <= n + 1; ++s)
                CHECK(oracle::kaehler_first_bruteforce(n, k, s) ==
                      kaehler_complement_dim_first(n, k, s));

    for (int four_n = 4; four_n <= 20; four_n += 4)
        for (int k = 1; k <= 2; ++k)
            for (int s = 2; s <= 4; ++s)
                CHECK(oracle::pqk_bruteforce(four_n, k, s) ==
                      pqk_complement_dim(four_n, k, s));
}

TEST_CASE("formal-metric Betti caps") {
    auto g2 = formal_metric_constants(SpecialHolonomy::G2);
    CHECK(g2.caps.at("b2") == 14);
    CHECK(g2.caps.at("b3") == 28);

    auto spin7 = formal_metric_constants(SpecialHolonomy::Spin7);
    CHECK(spin7.caps.at("b2") == 21);
    CHECK(spin7.caps.at("b3") == 48);
    CHECK(spin7.caps.at("b4") == 63);

    // The exceptional cap undercuts the torus bound.
    CHECK(g2.caps.at("b2") < binomial(7, 2));
}
