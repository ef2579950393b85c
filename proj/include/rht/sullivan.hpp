#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rht/algebra.hpp"

namespace rht {

// Betti numbers b_0..b_n indexed by degree.
struct BettiVector {
    std::vector<long> dims;

    long operator[](std::size_t i) const {
        return i < dims.size() ? dims[i] : 0;
    }
    bool operator==(const BettiVector&) const = default;

    long euler_characteristic() const;
    // b_i == b_{n-i} for 0 <= i <= n.
    bool poincare_duality(int n) const;
    // Largest degree with a non-zero entry, or -1 for the zero vector.
    int top_degree() const;
};

// Free graded-commutative algebra with a differential. `minimal` asserts
// that every generator image lies in word length >= 2.
class SullivanAlgebra {
public:
    SullivanAlgebra(GeneratorSetPtr generators, Derivation differential, bool minimal);

    static SullivanAlgebra make(std::vector<Generator> gens,
                                std::map<std::string, std::string> differential_text);

    const GeneratorSetPtr& generators() const { return gens_; }
    const Derivation& differential() const { return d_; }
    bool minimal() const { return minimal_; }

    Element d(const Element& e) const { return d_.apply(e); }

private:
    GeneratorSetPtr gens_;
    Derivation d_;
    bool minimal_;
};

// True when no generator image has a linear term.
bool has_no_linear_part(const GeneratorSetPtr& gens, const Derivation& d);

// Multisets of generator degrees split by parity; for a minimal algebra
// these are the dimensions of the rationalised homotopy groups.
struct HomotopySignature {
    std::vector<int> even_degrees; // sorted ascending
    std::vector<int> odd_degrees;  // sorted ascending

    auto operator<=>(const HomotopySignature&) const = default;

    int chi_pi() const {
        return static_cast<int>(odd_degrees.size()) - static_cast<int>(even_degrees.size());
    }
    std::string to_string() const;
};

HomotopySignature signature_of(const SullivanAlgebra& algebra);

// Per-relation report of the rational-ellipticity constraints for a
// candidate signature in dimension n.
struct ConstraintReport {
    int dimension = 0;
    int odd_degree_sum = 0;
    int even_degree_sum = 0;
    int total_rank = 0;
    int dimension_formula = 0; // sum deg x_i - sum (deg y_j - 1)
    int chi_pi = 0;

    bool odd_sum_ok = false;        // sum deg x_i <= 2n - 1
    bool even_sum_ok = false;       // sum deg y_j <= n
    bool total_rank_ok = false;     // #x + #y <= n
    bool dimension_formula_ok = false;
    bool euler_ok = false;          // chi_pi >= 0 (+ Betti coupling when supplied)

    bool all_ok() const {
        return odd_sum_ok && even_sum_ok && total_rank_ok && dimension_formula_ok && euler_ok;
    }
};

ConstraintReport check_elliptic_constraints(const HomotopySignature& sig, int n,
                                            const std::optional<BettiVector>& betti = std::nullopt);

int formal_dimension(const HomotopySignature& sig);

// One elimination step of the dimension <= 7 refinement, with the rule that
// fired and its justification.
struct SignatureElimination {
    HomotopySignature signature;
    std::string rule;
    std::string reason;
};

struct SignatureEnumeration {
    int dimension = 0;
    bool refined = false;        // eliminations applied (supported for n <= 7)
    bool paper_verified = false; // refinement list is complete for this n
    std::vector<HomotopySignature> signatures;
    std::vector<SignatureElimination> eliminated;
};

enum class EnumerationStage { arithmetic, refined };

// All signatures admissible for a simply-connected rationally elliptic
// n-space, 2 <= n <= 7. The arithmetic stage filters on the five numeric
// relations; the refined stage applies the cohomological elimination rules
// (complete for n in {2,3,4,7}; n in {5,6} are reported unrefined).
SignatureEnumeration enumerate_elliptic_signatures(int n,
                                                   EnumerationStage stage = EnumerationStage::refined);

// Product algebra; generators renamed on collision, differential factor-wise.
SullivanAlgebra product(const SullivanAlgebra& a, const SullivanAlgebra& b);

// dim H^k(Lambda V, d) for k = 0..max_degree by exact rank computation.
BettiVector cohomology_dims(const SullivanAlgebra& algebra, int max_degree);

// Removes contractible pairs (x, g) where dx = c*g + (terms without g),
// c != 0 and g is a generator. Sufficient to minimalise every model this
// toolkit constructs; it is not a general minimal-model algorithm.
SullivanAlgebra eliminate_contractible_pairs(const SullivanAlgebra& algebra);

} // namespace rht
