#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "rht/liegroups.hpp"

using namespace rht;

TEST_CASE("top degrees follow the closed formulas") {
    CHECK(top_degree(group(Family::SU, 4)) == 7);
    CHECK(top_degree(group(Family::SO, 8)) == 11);
    CHECK(top_degree(group(Family::Sp, 2)) == 7);
    CHECK(top_degree(group(Family::G2)) == 11);
    CHECK(top_degree(group(Family::E8)) == 59);
    CHECK(top_degree(group(Family::Circle)) == 1);
    CHECK_THROWS_AS(group(Family::SO, 1), validation_error);

    for (int n = 3; n <= 12; ++n)
        CHECK(top_degree({Family::SU, n}) == 2 * n - 1);
    for (int n = 1; n <= 12; ++n)
        CHECK(top_degree({Family::Sp, n}) == 4 * n - 1);
    for (int n = 7; n <= 12; ++n)
        CHECK(top_degree({Family::SO, n}) == (n % 2 == 0 ? 2 * n - 5 : 2 * n - 3));
}

TEST_CASE("degree lists are internally consistent") {
    std::vector<LieGroupDescriptor> all;
    for (int n = 3; n <= 12; ++n) all.push_back({Family::SU, n});
    for (int n = 1; n <= 12; ++n) all.push_back({Family::Sp, n});
    for (int n = 7; n <= 12; ++n) all.push_back({Family::SO, n});
    for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
        all.push_back({f, 0});

    for (const auto& g : all) {
        auto degs = homotopy_degrees(g);
        CHECK(top_degree(g) == *std::max_element(degs.begin(), degs.end()));
        CHECK(static_cast<int>(degs.size()) == rank(g));
        long dim = 0;
        for (int d : degs) dim += d; // dim G = sum (2 e_i - 1) over exponents
        CHECK(dim == dimension(g));
        auto bs = classifying_space_degrees(g);
        for (std::size_t i = 0; i < degs.size(); ++i) CHECK(bs[i] == degs[i] + 1);
    }
}

TEST_CASE("finite coverings are canonicalised") {
    CHECK(canonicalize(Family::SU, 2) == LieGroupDescriptor{Family::Sp, 1});
    CHECK(canonicalize(Family::SO, 3) == LieGroupDescriptor{Family::Sp, 1});
    CHECK(canonicalize(Family::SO, 5) == LieGroupDescriptor{Family::Sp, 2});
    CHECK(canonicalize(Family::SO, 6) == LieGroupDescriptor{Family::SU, 4});
    CHECK(canonicalize(Family::SO, 2) == LieGroupDescriptor{Family::Circle, 0});
    CHECK_THROWS_AS(canonicalize(Family::SO, 4), unsupported_error);
}

TEST_CASE("equality cases list the rank-one-drop quotients") {
    auto q1 = equality_cases(group(Family::G2), group(Family::SO, 7));
    REQUIRE(q1.has_value());
    CHECK(q1->tag == "S^7");

    auto q2 = equality_cases(group(Family::Sp, 2), group(Family::SU, 4));
    REQUIRE(q2.has_value());
    CHECK(q2->tag == "SU(2n)/Sp(n)");

    CHECK(!equality_cases(group(Family::Sp, 1), group(Family::Sp, 2)).has_value());
    // Directional: the subgroup comes first.
    CHECK(!equality_cases(group(Family::SO, 7), group(Family::G2)).has_value());
    CHECK(equality_cases(group(Family::SO, 7), group(Family::SO, 8)).has_value());
    CHECK(equality_cases(group(Family::F4), group(Family::E6)).has_value());
    CHECK(equality_cases(group(Family::G2), group(Family::SO, 8))->tag == "S^7 x S^7");
}

TEST_CASE("arithmetic enumeration satisfies the rank and dimension relations") {
    auto e = enumerate_pairs(EnumerationStage::arithmetic);
    CHECK(!e.arithmetic.empty());
    for (const auto& p : e.arithmetic) {
        long gd = 0, hd = 0;
        int gr = 0, hr = 0;
        for (const auto& g : p.g_factors) {
            gd += dimension(g);
            gr += rank(g);
        }
        for (const auto& h : p.h_factors) {
            hd += dimension(h);
            hr += rank(h);
        }
        CHECK(gd - hd == 7);
        CHECK(gr == hr + 1);
        CHECK(!p.g_factors.empty());
    }
}

TEST_CASE("arithmetic enumeration contains the known candidate rows") {
    auto e = enumerate_pairs(EnumerationStage::arithmetic);
    auto has = [&](TypeBucket b, const std::string& display, bool case1) {
        for (const auto& p : e.arithmetic)
            if (p.bucket == b && p.display() == display)
                return !case1 || p.case1_possible;
        return false;
    };
    // Sphere bucket, strict-inequality candidates.
    CHECK(has(TypeBucket::S7, "SU(4)//SU(3)", true));
    CHECK(has(TypeBucket::S7, "Sp(2)//Sp(1)", true));
    CHECK(has(TypeBucket::S7, "SU(3)//S^1", true));
    // Sphere bucket, equality candidates.
    CHECK(has(TypeBucket::S7, "SO(7)//G2", false));
    CHECK(has(TypeBucket::S7, "SO(8)//SO(7)", false));
    // The double-equality candidate appears with both flags.
    CHECK(has(TypeBucket::S2xS5, "(SU(4) x Sp(1))//(Sp(2) x S^1)", false));
    CHECK(has(TypeBucket::Remaining, "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)", true));

    // No pair with a dimension gap different from 7 is ever emitted.
    for (const auto& p : e.arithmetic) CHECK(p.display() != "SU(3)//(S^1 x S^1)");
}

TEST_CASE("refined enumeration reproduces the classification table") {
    auto e = enumerate_pairs(EnumerationStage::refined);

    std::set<std::pair<RealType7, std::string>> got;
    for (const auto& r : e.refined) got.insert({r.type, r.display});

    std::set<std::pair<RealType7, std::string>> expected = {
        {RealType7::S7, "SU(4)//SU(3)"},
        {RealType7::S7, "Sp(2)//Sp(1)"},
        {RealType7::S7, "Spin(7)/G2"},
        {RealType7::S7, "SO(8)/SO(7)"},
        {RealType7::S4xS3, "(Sp(2)/Sp(1)) x Sp(1)"},
        {RealType7::S2xS5, "SU(3)//S^1"},
        {RealType7::S2xS5, "(SU(3) x Sp(1))//(S^1 x Sp(1))"},
        {RealType7::S2xS5, "(SU(4) x Sp(1))//(Sp(2) x S^1)"},
        {RealType7::CP2xS3, "(SU(3) x Sp(1))//(S^1 x Sp(1))"},
        {RealType7::S2xS2xS3, "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)"},
        {RealType7::S3xCP2_connected_sum_CP2, "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)"},
        {RealType7::S3twisted, "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)"},
    };
    CHECK(got == expected);

    std::set<std::string> distinct;
    for (const auto& r : e.refined) distinct.insert(r.display);
    CHECK(distinct.size() == 9);
}

TEST_CASE("refined output is a subset of the arithmetic stage") {
    auto e = enumerate_pairs(EnumerationStage::refined);
    std::set<std::pair<std::vector<LieGroupDescriptor>, std::vector<LieGroupDescriptor>>>
        arith_pairs;
    for (const auto& p : e.arithmetic) arith_pairs.insert({p.g_factors, p.h_factors});
    for (const auto& r : e.refined)
        CHECK(arith_pairs.count({r.g_factors, r.h_factors}) == 1);

    // Every elimination carries a citable rule.
    CHECK(!e.eliminated.empty());
    for (const auto& r : e.eliminated) {
        CHECK(!r.rule.rule.empty());
        CHECK(!r.rule.detail.empty());
        CHECK(!r.rule.provenance.empty());
    }

    // The named rules fire.
    auto fired = [&](const std::string& rule) {
        for (const auto& r : e.eliminated)
            if (r.rule.rule == rule) return true;
        return false;
    };
    CHECK(fired("sym2-degree4-generator"));
    CHECK(fired("signature-bookkeeping"));
    CHECK(fired("no-g2xsp2-in-spin8"));
    CHECK(fired("su3-circle"));
}

TEST_CASE("enumeration output is deterministic") {
    auto a = enumerate_pairs(EnumerationStage::refined);
    auto b = enumerate_pairs(EnumerationStage::refined);
    REQUIRE(a.arithmetic.size() == b.arithmetic.size());
    for (std::size_t i = 0; i < a.arithmetic.size(); ++i)
        CHECK(a.arithmetic[i] == b.arithmetic[i]);
    REQUIRE(a.refined.size() == b.refined.size());
    for (std::size_t i = 0; i < a.refined.size(); ++i) {
        CHECK(a.refined[i].type == b.refined[i].type);
        CHECK(a.refined[i].display == b.refined[i].display);
    }
}

TEST_CASE("the shipped data file matches the embedded tables") {
    std::ifstream in("share/liegroups.json");
    if (!in.is_open()) in.open("../share/liegroups.json");
    REQUIRE_MESSAGE(in.is_open(), "share/liegroups.json not found (run from the repo root)");
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == liegroups_data_json());
}
