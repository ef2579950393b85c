#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rht/errors.hpp"
#include "rht/rational.hpp"

namespace rht {

// A generator of a free graded-commutative algebra. Parity of the degree
// determines commutation behaviour: odd generators anticommute and square
// to zero, even generators are polynomial variables.
struct Generator {
    std::string name;
    int degree = 0;
};

// Ordered generator list. The declaration order is the canonical monomial
// order used everywhere; elements over different sets never mix.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Generator> gens);

    std::size_t count() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_.at(i); }
    int degree(std::size_t i) const { return gens_.at(i).degree; }
    bool is_odd(std::size_t i) const { return gens_.at(i).degree % 2 != 0; }
    const std::string& name(std::size_t i) const { return gens_.at(i).name; }

    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require_index(const std::string& name) const;

    const std::vector<Generator>& generators() const { return gens_; }

private:
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> index_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<Generator> gens);

// Product of generator powers in canonical (declaration) order. Odd
// generators carry exponent exactly 1; the empty monomial is the unit.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>; // (generator index, exponent)

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    static Monomial one() { return Monomial(); }
    static Monomial generator(std::uint32_t index) { return Monomial({{index, 1}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree(const GeneratorSet& gens) const;
    std::uint32_t exponent_of(std::uint32_t index) const;

    auto operator<=>(const Monomial& other) const = default;

private:
    std::vector<Factor> factors_; // strictly increasing indices, exponents >= 1
};

// Koszul-sign product of canonical monomials. Returns nullopt when the
// product vanishes (repeated odd generator); otherwise the canonical
// monomial together with the accumulated sign.
std::optional<std::pair<Monomial, int>> multiply_monomials(const GeneratorSet& gens,
                                                           const Monomial& lhs,
                                                           const Monomial& rhs);

// Exact-rational linear combination of monomials over a fixed ambient
// generator set. Zero coefficients are never stored.
class Element {
public:
    Element() = default;
    explicit Element(GeneratorSetPtr ambient) : ambient_(std::move(ambient)) {}

    static Element zero(GeneratorSetPtr ambient) { return Element(std::move(ambient)); }
    static Element constant(GeneratorSetPtr ambient, const Rational& c);
    static Element generator(GeneratorSetPtr ambient, std::size_t index);
    static Element monomial(GeneratorSetPtr ambient, Monomial m, const Rational& c);

    const GeneratorSetPtr& ambient() const { return ambient_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const;
    // Degree of a homogeneous non-zero element; nullopt for zero or mixed.
    std::optional<int> degree() const;
    Element homogeneous_component(int deg) const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Element& lhs, const Element& rhs);
    friend Element operator*(const Rational& c, Element e);

    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

    void add_term(const Monomial& m, const Rational& c);

    // Coefficient of a monomial (zero if absent).
    Rational coefficient(const Monomial& m) const;

private:
    void check_same_ambient(const Element& other) const;

    GeneratorSetPtr ambient_;
    std::map<Monomial, Rational> terms_;
};

Element multiply(const Element& lhs, const Element& rhs);

// Degree +1 map defined on generators and extended by the graded Leibniz
// rule. Generators without an explicit image map to zero unless the
// derivation was built as partial, in which case applying it to such a
// generator is an error.
class Derivation {
public:
    static Derivation make(GeneratorSetPtr ambient, std::map<std::string, Element> images);
    static Derivation make_partial(GeneratorSetPtr ambient, std::map<std::string, Element> images);

    const GeneratorSetPtr& ambient() const { return ambient_; }
    const Element& image(std::size_t index) const;
    bool has_image(std::size_t index) const;

    Element apply(const Element& e) const;

    // d(d(g)) == 0 for every generator; by Leibniz this extends everywhere.
    bool squares_to_zero() const;

private:
    Derivation(GeneratorSetPtr ambient, std::vector<std::optional<Element>> images);

    GeneratorSetPtr ambient_;
    std::vector<std::optional<Element>> images_;
};

Element apply_derivation(const Derivation& d, const Element& e);

// Algebra morphism determined by generator images (target may differ from
// the source ambient). Images must be homogeneous of the source degree.
class AlgebraHom {
public:
    AlgebraHom(GeneratorSetPtr source, GeneratorSetPtr target, std::vector<Element> images);

    Element apply(const Element& e) const;
    const GeneratorSetPtr& source() const { return source_; }
    const GeneratorSetPtr& target() const { return target_; }

private:
    GeneratorSetPtr source_;
    GeneratorSetPtr target_;
    std::vector<Element> images_;
};

// Replaces one generator by a homogeneous element of the same degree,
// leaving all other generators fixed.
Element substitute(const Element& e, std::size_t index, const Element& replacement);

// All canonical monomials of total degree n. Requires every generator
// degree >= 2 so that each degree has a finite basis.
std::vector<Monomial> basis_in_degree(const GeneratorSetPtr& gens, int n);

// e_k(forms[0], ..., forms[m-1]) expanded exactly.
Element elementary_symmetric(const std::vector<Element>& forms, std::size_t k);

} // namespace rht
