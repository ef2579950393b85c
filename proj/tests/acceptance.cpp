// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Every tolerance here is exact; no floating point is involved.

#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rht/cli.hpp"
#include "rht/holonomy.hpp"
#include "rht/json_io.hpp"
#include "rht/polytext.hpp"

using namespace rht;

namespace {

int failures = 0;
int current_checks = 0;
int current_failed = 0;
std::ostringstream current_notes;

void expect(bool ok, const std::string& what) {
    ++current_checks;
    if (!ok) {
        ++current_failed;
        current_notes << "      failed: " << what << "\n";
    }
}

void criterion(int number, const std::string& title, void (*body)()) {
    current_checks = 0;
    current_failed = 0;
    current_notes.str("");
    try {
        body();
    } catch (const std::exception& e) {
        ++current_failed;
        current_notes << "      exception: " << e.what() << "\n";
    }
    bool ok = current_failed == 0 && current_checks > 0;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title
              << " (" << current_checks << " checks)\n";
    if (!ok) {
        std::cout << current_notes.str();
        ++failures;
    }
}

Json run_cli_json(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (code != 0) throw std::runtime_error("cli failed: " + err.str());
    return Json::parse(out.str());
}

// ---- criterion 1 ----------------------------------------------------------

void c1_dimension_classification() {
    Json seven = run_cli_json({"classify", "elliptic", "--dim", "7"});
    std::set<std::string> got7;
    for (const auto& rec : seven["types"]) got7.insert(rec["type"].get<std::string>());
    std::set<std::string> want7 = {"S7",       "S4xS3",      "S2xS5",    "CP2xS3",
                                   "S2xS2xS3", "S3xCP2#CP2", "S3twisted"};
    expect(got7 == want7, "dimension-7 type list");
    expect(seven["types"].size() == 7, "exactly 7 records");

    Json four = run_cli_json({"classify", "elliptic", "--dim", "4"});
    std::set<std::string> got4;
    for (const auto& rec : four["types"]) got4.insert(rec["type"].get<std::string>());
    std::set<std::string> want4 = {"S4", "CP2", "S2xS2", "CP2#CP2"};
    expect(got4 == want4, "dimension-4 type list");
    expect(four["types"].size() == 4, "exactly 4 records");
}

// ---- criterion 2 ----------------------------------------------------------

void c2_signature_enumeration() {
    auto e = enumerate_elliptic_signatures(7);
    std::vector<HomotopySignature> expected = {
        {{}, {7}}, {{2}, {3, 5}}, {{2, 2}, {3, 3, 3}}, {{4}, {3, 7}}};
    std::sort(expected.begin(), expected.end());
    expect(e.signatures == expected, "exactly the four admissible signatures");
    for (const auto& sig : e.signatures) {
        auto report = check_elliptic_constraints(sig, 7);
        expect(report.all_ok(), "all five relations hold for " + sig.to_string());
        expect(report.dimension_formula == 7,
               "dimension formula equals 7 for " + sig.to_string());
    }
}

// ---- criterion 3 ----------------------------------------------------------

void c3_isomorphism_criterion() {
    std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    int pairs = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            ++pairs;
            expect(!iso_case31(primes[i], primes[j], FieldMode::Q).isomorphic,
                   "rational distinctness of " + std::to_string(primes[i]) + "," +
                       std::to_string(primes[j]));
            expect(iso_case31(primes[i], primes[j], FieldMode::R).isomorphic,
                   "real equivalence of " + std::to_string(primes[i]) + "," +
                       std::to_string(primes[j]));
        }
    }
    expect(pairs == 45, "45 prime pairs checked");

    auto r = iso_case31(2, 8, FieldMode::Q);
    expect(r.isomorphic, "(2, 8) rationally isomorphic");
    expect(r.witness_k3.has_value() && *r.witness_k3 == Rational(1, 4),
           "verified substitution witness 1/4");
}

// ---- criterion 4 ----------------------------------------------------------

void c4_cohomology_oracle() {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        SullivanAlgebra model = oracle::random_model(rng);
        BettiVector lib = cohomology_dims(model, 14);
        std::vector<long> ref = oracle::cohomology_by_rank(model, 14);
        expect(lib.dims == ref, "model " + std::to_string(trial) + " degree-by-degree match");
    }
}

// ---- criterion 5 ----------------------------------------------------------

void c5_biquotient_enumeration() {
    auto e = enumerate_pairs(EnumerationStage::refined);

    std::set<std::pair<std::string, std::string>> got;
    for (const auto& r : e.refined) got.insert({to_string(r.type), r.display});
    std::set<std::pair<std::string, std::string>> expected = {
        {"S7", "SU(4)//SU(3)"},
        {"S7", "Sp(2)//Sp(1)"},
        {"S7", "Spin(7)/G2"},
        {"S7", "SO(8)/SO(7)"},
        {"S4xS3", "(Sp(2)/Sp(1)) x Sp(1)"},
        {"S2xS5", "SU(3)//S^1"},
        {"S2xS5", "(SU(3) x Sp(1))//(S^1 x Sp(1))"},
        {"S2xS5", "(SU(4) x Sp(1))//(Sp(2) x S^1)"},
        {"CP2xS3", "(SU(3) x Sp(1))//(S^1 x Sp(1))"},
        {"S2xS2xS3", "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)"},
        {"S3xCP2#CP2", "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)"},
        {"S3twisted", "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)"},
    };
    expect(got == expected, "refined rows match the classification table");

    std::set<std::string> descriptions;
    for (const auto& r : e.refined) descriptions.insert(r.display);
    expect(descriptions.size() == 9, "nine distinct quotient descriptions");

    std::set<std::pair<std::vector<LieGroupDescriptor>, std::vector<LieGroupDescriptor>>>
        arith;
    for (const auto& p : e.arithmetic) arith.insert({p.g_factors, p.h_factors});
    for (const auto& r : e.refined)
        expect(arith.count({r.g_factors, r.h_factors}) == 1,
               "refined row " + r.display + " present in the arithmetic superset");
    expect(e.arithmetic.size() > e.refined.size(), "arithmetic stage is a strict superset");

    for (const auto& r : e.eliminated)
        expect(!r.rule.rule.empty() && !r.rule.provenance.empty(),
               "elimination of " + r.pair.display() + " carries a cited rule");
}

// ---- criterion 6 ----------------------------------------------------------

void c6_biquotient_models() {
    // (i) circle quotients of SU(3) with trivial right action.
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            BiquotientSpec spec;
            spec.g_factors = {{Family::SU, 3}};
            spec.h_factors = {CircleFactor{{{a, b, -a - b}}, {{0, 0, 0}}}};
            auto built = build_model(spec);
            long sigma2 = a * b + a * (-a - b) + b * (-a - b);
            const auto& gens = built.model.generators();
            Element u = Element::generator(gens, 0);
            Element expected = Rational(sigma2) * (u * u);
            expect(built.model.differential().image(gens->require_index("x3")) == expected,
                   "d(x3) = e2(weights) u^2 for (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
        }
    }
    {
        BiquotientSpec spec;
        spec.g_factors = {{Family::SU, 3}};
        spec.h_factors = {CircleFactor{{{1, 2, -3}}, {{0, 0, 0}}}};
        auto built = build_model(spec);
        expect(format_element(built.model.differential().image(
                   built.model.generators()->require_index("x3"))) == "-7*u^2",
               "weights (1,2,-3) give -7 u^2");
    }

    // (ii) the symbolic two-sided differential.
    {
        auto ambient = make_generators({{"a1", 2}, {"b1", 2}, {"a2", 2}, {"b2", 2}});
        std::vector<std::vector<long>> weights = {
            {1, 0, -1}, {0, 1, -1}, {-1, 0, 1}, {0, -1, 1}};
        Element e2 = weight_symmetric_polynomial(ambient, {0, 1, 2, 3}, weights, 2);
        Element printed = parse_element("-a1^2 + 2*a1*a2 - a2^2 - a1*b1 + a2*b1 - b1^2 + "
                                        "a1*b2 - a2*b2 + 2*b1*b2 - b2^2",
                                        ambient);
        expect(e2 == printed, "symbolic ten-term differential");
    }

    // (iii) the two torus quotients of the triple product.
    {
        BiquotientSpec tw;
        tw.g_factors = {{Family::Sp, 1}, {Family::Sp, 1}, {Family::Sp, 1}};
        tw.h_factors = {CircleFactor{{{1}, {0}, {1}}, {{0}, {0}, {0}}},
                        CircleFactor{{{0}, {1}, {1}}, {{0}, {0}, {0}}}};
        expect(detect_type(tw) == RealType7::S3twisted, "(a,b,ab) weights: twisted bundle");

        BiquotientSpec pr = tw;
        pr.h_factors = {CircleFactor{{{1}, {0}, {0}}, {{0}, {0}, {0}}},
                        CircleFactor{{{0}, {1}, {0}}, {{0}, {0}, {0}}}};
        expect(detect_type(pr) == RealType7::S2xS2xS3, "(a,b,1) weights: product type");
    }
}

// ---- criterion 7 ----------------------------------------------------------

void c7_holonomy_obstructions() {
    auto spin7 = spin7_elliptic_obstruction();
    expect(spin7.bound == 23, "minimum homotopy bound 23");
    expect(spin7.threshold == 8 && spin7.obstructed, "23 exceeds the rank cap 8");

    auto su4 = su4_elliptic_obstruction();
    expect(su4.bound == 17 && su4.threshold == 50 && su4.obstructed, "17 < 50");

    auto g2 = g2_candidate_types();
    expect(g2.candidates == std::vector<RealType7>{RealType7::S4xS3, RealType7::CP2xS3,
                                                   RealType7::S3xCP2_connected_sum_CP2},
           "exactly three candidate types");
    expect(g2.excluded == RealType7::S2xS2xS3, "the product of two spheres is excluded");
    expect(g2.exclusion_witness.find("= 0") != std::string::npos,
           "vanishing cup-product witness reported");
}

// ---- criterion 8 ----------------------------------------------------------

void c8_pqk_enumerations() {
    auto rep = pqk16_triples();
    expect(rep.final_ == std::vector<PQKTriple>{{1, 0, 1}, {2, 1, 2}, {3, 0, 4}},
           "final triple list");

    auto h = pqk16_homotopy_vector({3, 0, 4});
    expect(h.vector == HomotopyVector{{4, 3}, {7, 2}, {11, 1}}, "homotopy vector of (3,0,4)");
    expect(h.balanced && h.dimension_formula == 16, "dimension formula balances to 16");

    auto cases = pqk12_analysis();
    expect(cases[1].c4 == 2 && cases[1].printed == HomotopyVector{{4, 2}, {7, 1}, {15, 1}},
           "published c4 = 2 configuration");
    expect(cases[2].c4 == 3 && cases[2].printed == HomotopyVector{{4, 3}, {7, 3}},
           "published c4 = 3 configuration");
}

// ---- criterion 9 ----------------------------------------------------------

void c9_formality_bounds() {
    BoundQuery q{ManifoldClass::pqk, 16, 2, EstimateKind::special_bp};
    expect(formality_bound(q) == 455, "b4 cap 455 via the divisibility estimate");
    q = {ManifoldClass::pqk, 16, 3, EstimateKind::first};
    expect(formality_bound(q) == 5005, "b6 cap 5005 via the main estimate");
    q = {ManifoldClass::pqk, 16, 4, EstimateKind::special_bp};
    expect(formality_bound(q) == 6435, "b8 cap 6435");
    q = {ManifoldClass::kaehler_trivial_hodge, 4, 1, EstimateKind::second};
    expect(formality_bound(q) == 3, "dimension-4 b2 cap 3");

    auto cells = bound_table_comparison();
    std::set<std::tuple<std::string, int, int>> flagged;
    for (const auto& c : cells)
        if (!c.matched)
            flagged.insert({c.manifold_class == ManifoldClass::pqk ? "pqk" : "kaehler",
                            c.dim, c.betti_index});
    std::set<std::tuple<std::string, int, int>> expected_flagged = {
        {"kaehler", 6, 2},  {"kaehler", 8, 2},  {"kaehler", 10, 2}, {"kaehler", 12, 2},
        {"kaehler", 14, 2}, {"kaehler", 16, 2}, {"kaehler", 16, 4}, {"pqk", 12, 4}};
    expect(flagged == expected_flagged, "flagged cells enumerated exactly");

    bool oracle_ok = true;
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int s = 2; s <= 4 && s + k <= n + 1; ++s)
                oracle_ok &= oracle::kaehler_first_bruteforce(n, k, s) ==
                             kaehler_complement_dim_first(n, k, s);
    for (int four_n = 4; four_n <= 20; four_n += 4)
        for (int k = 1; k <= 2; ++k)
            for (int s = 2; s <= 4; ++s)
                oracle_ok &= oracle::pqk_bruteforce(four_n, k, s) ==
                             pqk_complement_dim(four_n, k, s);
    expect(oracle_ok, "complement dimensions match the brute-force count");
}

// ---- criterion 10 ---------------------------------------------------------

void c10_property_suites() {
    std::mt19937 rng(1000003);
    std::uniform_int_distribution<int> coeff(-3, 3), small(-4, 4);

    // Graded commutativity.
    {
        auto g = make_generators({{"a", 2}, {"b", 4}, {"x", 3}, {"y", 5}, {"z", 7}});
        std::uniform_int_distribution<int> deg(2, 12);
        int checked = 0, ok = 0;
        while (checked < 100) {
            int d1 = deg(rng), d2 = deg(rng);
            Element e1 = Element::zero(g), e2 = Element::zero(g);
            for (const auto& m : basis_in_degree(g, d1)) e1.add_term(m, coeff(rng));
            for (const auto& m : basis_in_degree(g, d2)) e2.add_term(m, coeff(rng));
            if (e1.is_zero() || e2.is_zero()) continue;
            ++checked;
            int sign = (d1 % 2 == 1 && d2 % 2 == 1) ? -1 : 1;
            if (e1 * e2 == Rational(sign) * (e2 * e1)) ++ok;
        }
        expect(ok == 100, "graded commutativity on 100 random pairs");
    }

    // d compose d vanishes on random elements of random models.
    {
        int ok = 0;
        for (int i = 0; i < 100; ++i) {
            SullivanAlgebra model = oracle::random_model(rng);
            Element e = Element::zero(model.generators());
            std::uniform_int_distribution<int> deg(2, 10);
            for (const auto& m : basis_in_degree(model.generators(), deg(rng)))
                e.add_term(m, coeff(rng));
            if (model.d(model.d(e)).is_zero()) ++ok;
        }
        expect(ok == 100, "d(d(e)) = 0 on 100 random elements");
    }

    // Leibniz signs.
    {
        auto g = make_generators({{"u", 2}, {"v", 2}, {"x", 3}, {"y", 3}, {"z", 5}});
        Element u = Element::generator(g, 0), v = Element::generator(g, 1);
        Derivation d =
            Derivation::make(g, {{"x", u * u}, {"y", u * v}, {"z", u * v * v}});
        std::uniform_int_distribution<int> deg(2, 9);
        int checked = 0, ok = 0;
        while (checked < 100) {
            int d1 = deg(rng), d2 = deg(rng);
            Element e1 = Element::zero(g), e2 = Element::zero(g);
            for (const auto& m : basis_in_degree(g, d1)) e1.add_term(m, coeff(rng));
            for (const auto& m : basis_in_degree(g, d2)) e2.add_term(m, coeff(rng));
            if (e1.is_zero() || e2.is_zero()) continue;
            ++checked;
            int sign = d1 % 2 == 1 ? -1 : 1;
            if (d.apply(e1 * e2) == d.apply(e1) * e2 + Rational(sign) * (e1 * d.apply(e2)))
                ++ok;
        }
        expect(ok == 100, "Leibniz rule on 100 random products");
    }

    // Poincare duality of elliptic examples.
    {
        int ok = 0, checked = 0;
        while (checked < 100) {
            int s = small(rng);
            if (s == 0) continue;
            ++checked;
            QuadraticPair p{{1, 0, s}, {0, 1, 0}};
            SullivanAlgebra model = pair_model(p);
            if (cohomology_dims(model, 8).poincare_duality(4)) ++ok;
        }
        expect(ok == 100, "duality for 100 elliptic quadratic models");
    }

    // Scaling automorphism equivariance.
    {
        int ok = 0, checked = 0;
        while (checked < 100) {
            QuadraticPair p{{coeff(rng), coeff(rng), coeff(rng)},
                            {coeff(rng), coeff(rng), coeff(rng)}};
            int m = small(rng);
            if (m == 0) continue;
            ++checked;
            if (scaling_commutes_with_differential(p, Rational(m, 2))) ++ok;
        }
        expect(ok == 100, "grading automorphism commutes on 100 random models");
    }

    // Classification invariance under basis change.
    {
        int ok = 0, checked = 0;
        while (checked < 100) {
            int s = small(rng);
            if (s == 0) continue;
            QuadraticPair p{{1, 0, s}, {0, 1, 0}};
            Rational k1 = coeff(rng), k2 = coeff(rng), k3 = coeff(rng), k4 = coeff(rng);
            if (k1 * k4 - k2 * k3 == 0) continue;
            ++checked;
            QuadraticPair q{p.q1.change_basis(k1, k2, k3, k4),
                            p.q2.change_basis(k1, k2, k3, k4)};
            if (classify_pair_real(q) == classify_pair_real(p)) ++ok;
        }
        expect(ok == 100, "intersection-form type invariant under 100 basis changes");
    }
}

} // namespace

int main() {
    std::cout << "acceptance suite: exact checks, no tolerances\n";
    criterion(1, "dimension 4 and 7 real-type classification", c1_dimension_classification);
    criterion(2, "dimension-7 signature enumeration", c2_signature_enumeration);
    criterion(3, "rational/real isomorphism criterion", c3_isomorphism_criterion);
    criterion(4, "cohomology engine against the rank oracle", c4_cohomology_oracle);
    criterion(5, "biquotient enumeration reproduces the table", c5_biquotient_enumeration);
    criterion(6, "biquotient Sullivan models", c6_biquotient_models);
    criterion(7, "holonomy obstructions", c7_holonomy_obstructions);
    criterion(8, "quaternionic Betti and homotopy enumerations", c8_pqk_enumerations);
    criterion(9, "geometric-formality bounds", c9_formality_bounds);
    criterion(10, "randomised property suites", c10_property_suites);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
