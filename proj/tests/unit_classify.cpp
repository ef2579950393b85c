#include <doctest.h>

#include <random>

#include "rht/classify.hpp"
#include "rht/polytext.hpp"

using namespace rht;

namespace {

QuadraticPair pair31(const Rational& s) { return {{1, 0, s}, {0, 1, 0}}; }

QuadraticPair random_basis_change(const QuadraticPair& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    while (true) {
        Rational k1 = entry(rng), k2 = entry(rng), k3 = entry(rng), k4 = entry(rng);
        if (k1 * k4 - k2 * k3 == 0) continue;
        return {p.q1.change_basis(k1, k2, k3, k4), p.q2.change_basis(k1, k2, k3, k4)};
    }
}

} // namespace

TEST_CASE("resultant detects regular sequences") {
    CHECK(regular_sequence_check(pair31(1)));
    CHECK(!regular_sequence_check({{1, 1, 0}, {0, 1, 1}})); // common root (1, -1)
    CHECK(regular_sequence_check({{1, 0, 0}, {0, 0, 1}}));
    CHECK(resultant({1, 0, 1}, {0, 1, 0}) == 1);
}

TEST_CASE("regular pairs have the four-dimensional quotient profile") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    int regular_seen = 0, singular_seen = 0;
    for (int trial = 0; trial < 200 && (regular_seen < 25 || singular_seen < 5); ++trial) {
        QuadraticPair p{{entry(rng), entry(rng), entry(rng)},
                        {entry(rng), entry(rng), entry(rng)}};
        if (p.q1.is_zero() || p.q2.is_zero()) continue;
        BettiVector betti = cohomology_dims(pair_model(p), 6);
        if (regular_sequence_check(p)) {
            ++regular_seen;
            CHECK(betti.dims == std::vector<long>{1, 0, 2, 0, 1, 0, 0});
        } else {
            ++singular_seen;
            CHECK((betti[4] > 1 || betti[6] != 0));
        }
    }
    CHECK(regular_seen >= 25);
    CHECK(singular_seen >= 5);
}

TEST_CASE("intersection-form classification of quadratic pairs") {
    // Coordinate squares: the hyperbolic plane.
    CHECK(classify_pair_real({{1, 0, 0}, {0, 0, 1}}) == RealType4::S2xS2);

    // Relations (ab, a^2 - b^2) force a definite form: the connected sum.
    CHECK(classify_pair_real(pair31(-1)) == RealType4::CP2_connected_sum_CP2);
    // Relations (ab, a^2 + b^2) give b^2 = -a^2: indefinite.
    CHECK(classify_pair_real(pair31(1)) == RealType4::S2xS2);

    // The mixed-term family: st > 1 definite, st < 1 indefinite.
    CHECK(classify_pair_real({{1, 2, 0}, {0, 2, 1}}) == RealType4::CP2_connected_sum_CP2);
    CHECK(classify_pair_real({{1, 1, 0}, {0, -1, 1}}) == RealType4::S2xS2);
    // st = 1 is not a regular sequence.
    CHECK(!regular_sequence_check({{1, 1, 0}, {0, 1, 1}}));
    CHECK_THROWS_AS(classify_pair_real({{1, 1, 0}, {0, 1, 1}}), validation_error);

    auto full = classify_pair_real_full(pair31(-2));
    CHECK(full.signature.definite(2));
    CHECK(!full.signature.degenerate());
}

TEST_CASE("classification is invariant under rational basis changes") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> sval(-6, 6);
    int checked = 0;
    while (checked < 120) {
        int s = sval(rng);
        if (s == 0) continue;
        QuadraticPair p = pair31(s);
        RealType4 expected = classify_pair_real(p);
        QuadraticPair q = random_basis_change(p, rng);
        CHECK(classify_pair_real(q) == expected);
        ++checked;
    }
}

TEST_CASE("rational isomorphism criterion for the split family") {
    CHECK(!iso_case31(2, 3, FieldMode::Q).isomorphic);
    auto r = iso_case31(2, 8, FieldMode::Q);
    CHECK(r.isomorphic);
    CHECK(r.witness_k3 == Rational(1, 4));
    CHECK(iso_case31(2, 3, FieldMode::R).isomorphic);
    CHECK(!iso_case31(2, -3, FieldMode::R).isomorphic);
    CHECK_THROWS_AS(iso_case31(0, 3, FieldMode::Q), validation_error);
    CHECK_THROWS_AS(iso_case31(2, 0, FieldMode::R), validation_error);
}

TEST_CASE("iso_case31 is reflexive, symmetric and Q implies R") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(-20, 20);
    int checked = 0;
    while (checked < 150) {
        int s = val(rng), t = val(rng);
        if (s == 0 || t == 0) continue;
        ++checked;
        CHECK(iso_case31(s, s, FieldMode::Q).isomorphic);
        CHECK(iso_case31(s, t, FieldMode::Q).isomorphic ==
              iso_case31(t, s, FieldMode::Q).isomorphic);
        if (iso_case31(s, t, FieldMode::Q).isomorphic)
            CHECK(iso_case31(s, t, FieldMode::R).isomorphic);
    }
}

TEST_CASE("the grading automorphism commutes with every pair differential") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-4, 4);
    int checked = 0;
    while (checked < 120) {
        QuadraticPair p{{entry(rng), entry(rng), entry(rng)},
                        {entry(rng), entry(rng), entry(rng)}};
        int m = entry(rng);
        if (m == 0) continue;
        ++checked;
        CHECK(scaling_commutes_with_differential(p, m));
        CHECK(scaling_commutes_with_differential(p, Rational(m, 3)));
    }
}

TEST_CASE("prime-parameter family is rationally distinct inside one real type") {
    auto family = generate_rational_family(4);
    REQUIRE(family.size() == 4);
    CHECK(family[0].q1.b2 == 2);
    CHECK(family[1].q1.b2 == 3);
    CHECK(family[2].q1.b2 == 5);
    CHECK(family[3].q1.b2 == 7);

    RealType4 common = classify_pair_real(family[0]);
    for (const auto& p : family) CHECK(classify_pair_real(p) == common);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            CHECK(!iso_case31(family[i].q1.b2, family[j].q1.b2, FieldMode::Q).isomorphic);

    CHECK(generate_rational_family(1).size() == 1);
    CHECK_THROWS_AS(generate_rational_family(0), validation_error);
}

TEST_CASE("normal-form reduction and the bounded search") {
    CHECK(reduce_to_split_normal_form(pair31(5)).has_value());

    // (a^2 + 2ab, b^2 + 3ab) reduces; its parameter matches s = -5 up to
    // squares, so it is equivalent to the split pair with s = -5.
    QuadraticPair mixed{{1, 2, 0}, {0, 3, 1}};
    auto s = reduce_to_split_normal_form(mixed);
    REQUIRE(s.has_value());
    CHECK(iso_case31(*s, -5, FieldMode::Q).isomorphic);

    auto found = iso_general(pair31(2), pair31(8), 6);
    CHECK(found.decided);
    CHECK(found.isomorphic);

    auto not_iso = iso_general(pair31(2), pair31(3), 6);
    CHECK(not_iso.decided);
    CHECK(!not_iso.isomorphic);

    auto cross = iso_general(mixed, pair31(-5), 6);
    CHECK(cross.decided);
    CHECK(cross.isomorphic);
}

TEST_CASE("classify7 dispatches the admissible signatures") {
    SullivanAlgebra twisted = SullivanAlgebra::make(
        {{"u", 2}, {"v", 2}, {"x1", 3}, {"x2", 3}, {"x3", 3}},
        {{"x1", "u^2"}, {"x2", "v^2"}, {"x3", "u^2 + 2*u*v + v^2"}});
    CHECK(classify7(twisted) == RealType7::S3twisted);

    SullivanAlgebra split = SullivanAlgebra::make(
        {{"u", 2}, {"v", 2}, {"x1", 3}, {"x2", 3}, {"x3", 3}},
        {{"x1", "u^2"}, {"x2", "v^2"}});
    auto full = classify7_full(split);
    CHECK(full.type == RealType7::S2xS2xS3);
    CHECK(full.degree3_kernel_rank == 1);
    CHECK(full.residual == RealType4::S2xS2);

    SullivanAlgebra sum_side = SullivanAlgebra::make(
        {{"u", 2}, {"v", 2}, {"x1", 3}, {"x2", 3}, {"x3", 3}},
        {{"x1", "u^2 - v^2"}, {"x2", "u*v"}});
    CHECK(classify7(sum_side) == RealType7::S3xCP2_connected_sum_CP2);

    SullivanAlgebra s2s5 =
        SullivanAlgebra::make({{"u", 2}, {"x3", 3}, {"x5", 5}}, {{"x3", "u^2"}});
    CHECK(classify7(s2s5) == RealType7::S2xS5);

    SullivanAlgebra cp2s3 =
        SullivanAlgebra::make({{"u", 2}, {"x3", 3}, {"x5", 5}}, {{"x5", "u^3"}});
    auto cp2full = classify7_full(cp2s3);
    CHECK(cp2full.type == RealType7::CP2xS3);
    CHECK(cp2full.b4 == 1);

    CHECK(classify7(SullivanAlgebra::make({{"x", 7}}, {})) == RealType7::S7);
    CHECK(classify7(SullivanAlgebra::make({{"y", 4}, {"x3", 3}, {"x7", 7}},
                                          {{"x7", "y^2"}})) == RealType7::S4xS3);

    CHECK_THROWS_AS(classify7(SullivanAlgebra::make({{"x", 5}}, {})), validation_error);
    // Not elliptic: the degree-3 images do not form a regular-type system.
    CHECK_THROWS_AS(classify7(SullivanAlgebra::make(
                        {{"u", 2}, {"v", 2}, {"x1", 3}, {"x2", 3}, {"x3", 3}},
                        {{"x1", "u^2"}})),
                    validation_error);
}

TEST_CASE("classify7 is invariant under generator basis changes") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> entry(-2, 2);
    int checked = 0;
    while (checked < 100) {
        // Random invertible change on the degree-2 generators.
        Rational p = entry(rng), q = entry(rng), r = entry(rng), s = entry(rng);
        if (p * s - q * r == 0) continue;

        for (RealType7 t : {RealType7::S2xS2xS3, RealType7::S3xCP2_connected_sum_CP2,
                            RealType7::S3twisted}) {
            SullivanAlgebra model = standard_model7(t);
            const auto& gens = model.generators();
            Element a = Element::generator(gens, 0), b = Element::generator(gens, 1);
            Element na = p * a + q * b, nb = r * a + s * b;

            // Transform the differential by the simultaneous change of basis.
            std::vector<Element> hom_images;
            for (std::size_t i = 0; i < gens->count(); ++i) {
                if (i == 0) hom_images.push_back(na);
                else if (i == 1) hom_images.push_back(nb);
                else hom_images.push_back(Element::generator(gens, i));
            }
            AlgebraHom phi(gens, gens, hom_images);
            std::map<std::string, Element> images2;
            for (std::size_t i = 0; i < gens->count(); ++i) {
                Element img = phi.apply(model.differential().image(i));
                if (!img.is_zero()) images2[gens->name(i)] = img;
            }
            SullivanAlgebra changed(gens, Derivation::make(gens, std::move(images2)), true);
            CHECK(classify7(changed) == t);
        }
        checked += 3;
    }
}

TEST_CASE("standard models classify to their own types") {
    for (RealType7 t : all_real_types7()) CHECK(classify7(standard_model7(t)) == t);
}
