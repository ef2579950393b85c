#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rht/liegroups.hpp"
#include "rht/sullivan.hpp"

namespace rht {

// Circle factor of H with one integer weight vector per G-factor and side.
// For an SU(n) target the weights must sum to zero.
struct CircleFactor {
    std::vector<std::vector<long>> left;  // one vector per G-factor
    std::vector<std::vector<long>> right;
};

// Simple factor of H embedded by a named catalogue entry per G-factor and
// side ("" = trivial).
struct SimpleFactor {
    LieGroupDescriptor grp;
    std::vector<std::string> left;
    std::vector<std::string> right;
};

using HFactor = std::variant<CircleFactor, SimpleFactor>;

enum class ModelConvention {
    pullback_difference, // d(odd) = left pullback minus right pullback
    paper_su3            // symmetric polynomials of the difference weights
};

struct BiquotientSpec {
    std::vector<LieGroupDescriptor> g_factors; // families SU, Sp
    std::vector<HFactor> h_factors;
    ModelConvention convention = ModelConvention::pullback_difference;
};

void validate(const BiquotientSpec& spec);

struct BuiltModel {
    SullivanAlgebra model;
    // |e2(left) - e2(right)| for a circle in SU(3): the order of the
    // degree-4 torsion of the corresponding quotient, reported as external
    // evidence for the convention.
    std::optional<Integer> su3_circle_torsion_order;
};

// Sullivan model of the biquotient: one even generator per polynomial
// generator of H^*(BH), one odd generator per universal class of each
// G-factor, with d(odd) given by the pullback data and convention.
BuiltModel build_model(const BiquotientSpec& spec);

// Classification of the built model after contracting non-minimal pairs.
RealType7 detect_type(const BiquotientSpec& spec);
Classification7 detect_type_full(const BiquotientSpec& spec);

struct TrivialityLocus {
    std::string locus;    // description of the weight locus where d(x3) = 0
    bool on_locus;        // whether the supplied weights lie on it
    std::string annotation;
};

// For a circle in SU(3) under the difference-weight convention: the exact
// rational solution set of d(x3) = 0 together with the freeness caveat.
TrivialityLocus circle_triviality_locus(const BiquotientSpec& spec);

// e_k of the weight linear forms, in the polynomial ring on `torus_gens`.
Element weight_symmetric_polynomial(const GeneratorSetPtr& ambient,
                                    const std::vector<std::size_t>& torus_gens,
                                    const std::vector<std::vector<long>>& weights,
                                    std::size_t k);

} // namespace rht
