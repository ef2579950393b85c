#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rht/classify.hpp"

namespace rht {

enum class Family { SU, SO, Sp, G2, F4, E6, E7, E8, Circle };

// Compact connected group, canonicalised up to isomorphism and finite
// covering: SU(2), SO(3) -> Sp(1); SO(5) -> Sp(2); SO(6) -> SU(4);
// SO(2) -> Circle. SO(n) with n >= 7 stands for its simply-connected cover.
struct LieGroupDescriptor {
    Family family = Family::Circle;
    int parameter = 0; // n for SU(n), SO(n), Sp(n); unused otherwise

    auto operator<=>(const LieGroupDescriptor&) const = default;
};

LieGroupDescriptor group(Family f, int parameter = 0);
LieGroupDescriptor canonicalize(Family f, int parameter = 0);

long dimension(const LieGroupDescriptor& g);
int rank(const LieGroupDescriptor& g);
// Degrees of the non-vanishing rational homotopy, ascending (with
// multiplicity; SO(4k) has two classes in degree 4k-1... the even
// orthogonal family carries the extra degree n-1).
std::vector<int> homotopy_degrees(const LieGroupDescriptor& g);
int top_degree(const LieGroupDescriptor& g);
// Second largest entry of the degree list; 0 when there is only one.
int second_degree(const LieGroupDescriptor& g);
// Generator degrees of the rational cohomology of the classifying space.
std::vector<int> classifying_space_degrees(const LieGroupDescriptor& g);
bool is_simple(const LieGroupDescriptor& g);
std::string display(const LieGroupDescriptor& g);

struct EqualityQuotient {
    std::string tag; // "S^7", "SU(2n)/Sp(n)", ...
    std::string via; // the homogeneous space realising the equality
};

// Non-bijective homomorphisms h -> g with d(h) = d(g) exist only for the
// classical list of rank-one-drop quotients; returns the quotient tag.
std::optional<EqualityQuotient> equality_cases(const LieGroupDescriptor& h,
                                               const LieGroupDescriptor& g);

enum class TypeBucket { S7, S4xS3, S2xS5, CP2xS3, Remaining };
std::string to_string(TypeBucket b);
std::vector<TypeBucket> all_buckets();
// Generator degrees of the minimal model of each real type.
std::vector<int> bucket_odd_degrees(TypeBucket b);
std::vector<int> bucket_even_degrees(TypeBucket b);
std::vector<RealType7> bucket_types(TypeBucket b);

struct TrailEntry {
    std::string rule;
    std::string detail;
    std::string provenance; // "arithmetic", "rational-homotopy-argument",
                            // "embedding-fact", "external-literature"
};

struct CandidatePair {
    TypeBucket bucket = TypeBucket::S7;
    std::vector<LieGroupDescriptor> g_factors; // sorted
    std::vector<LieGroupDescriptor> h_factors; // sorted
    bool case1_possible = false;               // all strict degree drops
    bool case2_possible = false;               // uses a degree equality

    auto operator<=>(const CandidatePair&) const = default;
    std::string display() const;
};

struct RefinedRow {
    RealType7 type = RealType7::S7;
    std::vector<LieGroupDescriptor> g_factors;
    std::vector<LieGroupDescriptor> h_factors;
    std::string display;
    std::vector<TrailEntry> trail;
};

struct EliminationRecord {
    CandidatePair pair;
    TrailEntry rule;
};

struct BiquotientEnumeration {
    EnumerationStage stage = EnumerationStage::arithmetic;
    std::vector<CandidatePair> arithmetic;
    std::vector<RefinedRow> refined;            // populated for the refined stage
    std::vector<EliminationRecord> eliminated;  // populated for the refined stage
};

// Candidate pairs (G, H) for simply-connected 7-dimensional biquotients.
// The arithmetic stage is a certified superset search (rank, dimension and
// degree constraints); the refined stage applies the named elimination and
// cancellation rules and yields the final classification rows.
BiquotientEnumeration enumerate_pairs(EnumerationStage stage);

// The group data, equality quotients and refinement rules as a versioned
// human-readable JSON document (also shipped in share/liegroups.json).
std::string liegroups_data_json();

} // namespace rht
