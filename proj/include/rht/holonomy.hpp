#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rht/classify.hpp"
#include "rht/sullivan.hpp"

namespace rht {

// Betti data of an 8-manifold with the middle degree split into self-dual
// and anti-self-dual parts.
struct BettiInput {
    BettiVector b;
    std::optional<long> b4_plus;
    std::optional<long> b4_minus;
};

// b3 + b4+ = b2 + 2 b4- + 25, with b4+ >= 1.
bool spin7_feasible(const BettiInput& input);

struct ObstructionStep {
    std::string statement;
    long value = 0;
};

struct ObstructionCertificate {
    std::string conclusion;
    std::vector<ObstructionStep> trail;
    long bound = 0;     // the derived extremal value
    long threshold = 0; // the cap / requirement it violates
    bool obstructed = false;
};

// Minimum over b2 <= 4 of the lower bound 25 + b2(3-b2)/2 on the total
// rational homotopy exceeds the rank cap 8 of an elliptic 8-manifold.
ObstructionCertificate spin7_elliptic_obstruction();

// b3 + b4 <= 17 for an elliptic 8-manifold, against the requirement
// b3 + b4+ >= 50.
ObstructionCertificate su4_elliptic_obstruction();

struct G2CandidateReport {
    std::vector<RealType7> candidates;
    RealType7 excluded = RealType7::S2xS2xS3;
    std::string exclusion_witness;
};

// The real types compatible with a 7-manifold of exceptional holonomy:
// b3 != 0 keeps four types, and the degenerate cup product a^2 w = 0 on
// S2xS2xS3 removes the fourth.
G2CandidateReport g2_candidate_types();

struct LefschetzWitness {
    std::string omega;          // degree-3 class used
    std::vector<Rational> vec;  // class in H^2 violating definiteness
    std::optional<std::vector<Rational>> vec_negative; // for indefinite forms
    std::string kind;           // "degenerate" or "indefinite"
};

// Searches the cup-product form a -> a^2 w on H^2 for a definiteness
// violation for every degree-3 class; nullopt when some class gives a
// definite form.
std::optional<LefschetzWitness> lefschetz_degenerate_witness(const SullivanAlgebra& model);

struct PQKTriple {
    long b4 = 0, b6 = 0, b8 = 0;
    auto operator<=>(const PQKTriple&) const = default;
};

struct PQK16Report {
    std::vector<PQKTriple> displayed; // linear relation + duality constraints, b4 <= 5
    std::vector<PQKTriple> final_;    // after the cup-length cap b4 + b6 <= 4
};

PQK16Report pqk16_triples();

// Homotopy Betti numbers c_i (dimensions of the rational homotopy) keyed
// by degree.
using HomotopyVector = std::map<int, long>;

struct PQKHomotopy {
    HomotopyVector vector;
    long dimension_formula = 0; // sum deg x - sum (deg y - 1)
    bool balanced = false;      // equals the manifold dimension
};

PQKHomotopy pqk16_homotopy_vector(const PQKTriple& t);

struct PQK12Case {
    long c4 = 0;
    HomotopyVector printed;    // the published configuration
    HomotopyVector consistent; // solution of the dimension formula
    long printed_balance = 0;
    bool printed_balanced = false;
};

std::vector<PQK12Case> pqk12_analysis();

enum class ManifoldClass { kaehler_trivial_hodge, pqk };
enum class EstimateKind { first, second, special_b2, special_bp, structural_b2 };

struct BoundQuery {
    ManifoldClass manifold_class = ManifoldClass::kaehler_trivial_hodge;
    int dim = 0; // real dimension (2n for Kaehler, 4n for PQK)
    int k = 0;   // Betti index 2k
    EstimateKind estimate = EstimateKind::first;
};

Integer formality_bound(const BoundQuery& q);

struct BoundComparisonCell {
    int dim = 0;
    int betti_index = 0; // the bound concerns b_{betti_index}
    ManifoldClass manifold_class = ManifoldClass::kaehler_trivial_hodge;
    Integer table_value;
    std::map<std::string, Integer> estimates;
    Integer torus_value;
    bool matched = false;
    std::vector<std::string> matching_estimates;
};

// Recomputes every cell of the published example table from the closed
// formulas and flags the cells no stated estimate reproduces.
std::vector<BoundComparisonCell> bound_table_comparison();

struct FormalMetricCaps {
    std::map<std::string, long> caps; // "b2" -> 14, ...
};

enum class SpecialHolonomy { G2, Spin7 };
FormalMetricCaps formal_metric_constants(SpecialHolonomy h);

// Closed-form dimensions of the vanishing-power complements used by the
// formality bounds; exposed for oracle verification.
Integer kaehler_complement_dim_first(int n, int k, int s);
Integer kaehler_complement_dim_second(int n, int k, int s);
Integer pqk_complement_dim(int four_n, int k, int s);

} // namespace rht
