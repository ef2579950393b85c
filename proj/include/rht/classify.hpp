#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rht/linalg.hpp"
#include "rht/sullivan.hpp"

namespace rht {

// Binary quadratic form q(a, b) = A a^2 + B ab + C b^2 over the rationals.
struct QuadraticForm {
    Rational a2, ab, b2;

    bool is_zero() const { return a2 == 0 && ab == 0 && b2 == 0; }
    bool operator==(const QuadraticForm&) const = default;

    // q composed with the basis change (a, b) -> (p a + q b, r a + s b).
    QuadraticForm change_basis(const Rational& p, const Rational& q, const Rational& r,
                               const Rational& s) const;
};

// The two degree-4 relations of a two-generator model in dimension 4.
struct QuadraticPair {
    QuadraticForm q1, q2;
};

enum class RealType4 { S4, CP2, S2xS2, CP2_connected_sum_CP2 };
enum class RealType7 {
    S7,
    S4xS3,
    S2xS5,
    CP2xS3,
    S2xS2xS3,
    S3xCP2_connected_sum_CP2,
    S3twisted
};
enum class FieldMode { Q, R };

std::string to_string(RealType4 t);
std::string to_string(RealType7 t);
std::vector<RealType4> all_real_types4();
std::vector<RealType7> all_real_types7();

Rational resultant(const QuadraticForm& q1, const QuadraticForm& q2);

// True iff the two forms have no common projective root, equivalently the
// quotient by the ideal they generate is 4-dimensional Poincare algebra.
bool regular_sequence_check(const QuadraticPair& p);

struct PairClassification {
    RealType4 type;
    // Gram matrix of the cup product on H^2 with values in H^4 = Q.
    std::array<std::array<Rational, 2>, 2> gram;
    FormSignature signature;
};

// Real classification of the two-generator dimension-4 models by the
// signature of the intersection form: definite -> connected sum of two
// projective planes, indefinite -> S2xS2.
PairClassification classify_pair_real_full(const QuadraticPair& p);
RealType4 classify_pair_real(const QuadraticPair& p);

struct IsoResult {
    bool isomorphic = false;
    std::string criterion;
    // For a positive rational answer on the (a^2 + s b^2, ab) family: the
    // verified substitution a -> b, b -> k3 a.
    std::optional<Rational> witness_k3;
};

// Rational / real isomorphism inside the family (a^2 + s b^2, ab).
IsoResult iso_case31(const Rational& s, const Rational& t, FieldMode field);

std::vector<QuadraticPair> generate_rational_family(int count);

// Attempts a basis change to (a^2 + s b^2, ab); the parameter s is returned
// up to rational squares. Works whenever some small pencil combination of
// the two relations splits into distinct rational linear factors.
std::optional<Rational> reduce_to_split_normal_form(const QuadraticPair& p);

struct GeneralIsoResult {
    bool decided = false;
    bool isomorphic = false;
    std::string method;
    std::optional<std::array<Rational, 4>> matrix; // (k1, k2, k3, k4) row-major
};

// Semi-decision for rational equivalence of two regular pairs: normal-form
// reduction when possible, otherwise a bounded-height search over rational
// 2x2 matrices.
GeneralIsoResult iso_general(const QuadraticPair& lhs, const QuadraticPair& rhs, int height_bound);

struct Classification7 {
    RealType7 type;
    HomotopySignature signature;
    long b4 = -1;                  // computed for the ({2},{3,5}) branch
    long degree3_kernel_rank = -1; // computed for the ({2,2},{3,3,3}) branch
    std::optional<RealType4> residual; // split-off 4-dimensional type
};

// Real homotopy type of a minimal 7-dimensional elliptic algebra.
Classification7 classify7_full(const SullivanAlgebra& model);
RealType7 classify7(const SullivanAlgebra& model);

// Verifies that the grading automorphism a,b -> m a, m b; x,y -> m^2 x,
// m^2 y commutes with the differential of a two-generator quadratic model.
bool scaling_commutes_with_differential(const QuadraticPair& p, const Rational& m);

// The quadratic model Lambda(a,b,x,y) with dx = q1, dy = q2.
SullivanAlgebra pair_model(const QuadraticPair& p);

// Reference minimal models of the classified real types.
SullivanAlgebra standard_model7(RealType7 t);
SullivanAlgebra standard_model4(RealType4 t);

} // namespace rht
