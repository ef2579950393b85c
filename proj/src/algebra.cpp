#include "rht/algebra.hpp"

#include <algorithm>

namespace rht {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1)
            throw validation_error("generator degree must be >= 1: " + gens_[i].name);
        if (gens_[i].name.empty()) throw validation_error("generator with empty name");
        auto [it, inserted] = index_.emplace(gens_[i].name, i);
        if (!inserted) throw validation_error("duplicate generator name: " + gens_[i].name);
    }
}

std::optional<std::size_t> GeneratorSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GeneratorSet::require_index(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw structural_error("unknown generator: " + name);
    return *idx;
}

GeneratorSetPtr make_generators(std::vector<Generator> gens) {
    return std::make_shared<const GeneratorSet>(std::move(gens));
}

int Monomial::degree(const GeneratorSet& gens) const {
    int d = 0;
    for (const auto& [idx, exp] : factors_) d += static_cast<int>(exp) * gens.degree(idx);
    return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t index) const {
    for (const auto& [idx, exp] : factors_)
        if (idx == index) return exp;
    return 0;
}

std::optional<std::pair<Monomial, int>> multiply_monomials(const GeneratorSet& gens,
                                                           const Monomial& lhs,
                                                           const Monomial& rhs) {
    // Sign: each odd factor of rhs moves left past every odd factor of lhs
    // with a larger generator index.
    int swaps = 0;
    {
        std::vector<std::uint32_t> lhs_odd;
        for (const auto& [idx, exp] : lhs.factors())
            if (gens.is_odd(idx)) lhs_odd.push_back(idx);
        for (const auto& [idx, exp] : rhs.factors()) {
            if (!gens.is_odd(idx)) continue;
            for (std::uint32_t l : lhs_odd)
                if (l > idx) ++swaps;
        }
    }

    std::vector<Monomial::Factor> merged;
    const auto& a = lhs.factors();
    const auto& b = rhs.factors();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            merged.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            merged.push_back(b[j++]);
        } else {
            if (gens.is_odd(a[i].first)) return std::nullopt; // odd square
            merged.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return std::make_pair(Monomial(std::move(merged)), swaps % 2 == 0 ? 1 : -1);
}

Element Element::constant(GeneratorSetPtr ambient, const Rational& c) {
    Element e(std::move(ambient));
    e.add_term(Monomial::one(), c);
    return e;
}

Element Element::generator(GeneratorSetPtr ambient, std::size_t index) {
    if (index >= ambient->count()) throw structural_error("generator index out of range");
    Element e(std::move(ambient));
    e.add_term(Monomial::generator(static_cast<std::uint32_t>(index)), 1);
    return e;
}

Element Element::monomial(GeneratorSetPtr ambient, Monomial m, const Rational& c) {
    Element e(std::move(ambient));
    e.add_term(m, c);
    return e;
}

bool Element::is_homogeneous() const {
    return degree().has_value() || is_zero();
}

std::optional<int> Element::degree() const {
    if (terms_.empty() || !ambient_) return std::nullopt;
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int md = m.degree(*ambient_);
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    return d;
}

Element Element::homogeneous_component(int deg) const {
    Element out(ambient_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*ambient_) == deg) out.add_term(m, c);
    return out;
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::check_same_ambient(const Element& other) const {
    if (!ambient_ || !other.ambient_) {
        if (!terms_.empty() && !other.terms_.empty())
            throw structural_error("element without ambient generator set");
        return;
    }
    if (ambient_ != other.ambient_)
        throw structural_error("elements belong to different ambient generator sets");
}

Element Element::operator-() const {
    Element out(ambient_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element& Element::operator+=(const Element& rhs) {
    check_same_ambient(rhs);
    if (!ambient_) ambient_ = rhs.ambient_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    check_same_ambient(rhs);
    if (!ambient_) ambient_ = rhs.ambient_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Element operator*(const Element& lhs, const Element& rhs) {
    lhs.check_same_ambient(rhs);
    auto ambient = lhs.ambient_ ? lhs.ambient_ : rhs.ambient_;
    Element out(ambient);
    if (!ambient) return out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            auto prod = multiply_monomials(*ambient, ma, mb);
            if (!prod) continue;
            out.add_term(prod->first, ca * cb * prod->second);
        }
    return out;
}

Element operator*(const Rational& c, Element e) {
    if (c == 0) return Element::zero(e.ambient());
    Element out(e.ambient());
    for (const auto& [m, coeff] : e.terms()) out.add_term(m, c * coeff);
    return out;
}

bool Element::operator==(const Element& other) const {
    if (is_zero() && other.is_zero()) return true;
    check_same_ambient(other);
    return terms_ == other.terms_;
}

Element multiply(const Element& lhs, const Element& rhs) { return lhs * rhs; }

Derivation::Derivation(GeneratorSetPtr ambient, std::vector<std::optional<Element>> images)
    : ambient_(std::move(ambient)), images_(std::move(images)) {}

static std::vector<std::optional<Element>> resolve_images(const GeneratorSetPtr& ambient,
                                                          std::map<std::string, Element>& images,
                                                          bool fill_zero) {
    std::vector<std::optional<Element>> out(ambient->count());
    for (auto& [name, img] : images) {
        auto idx = ambient->index_of(name);
        if (!idx) throw validation_error("derivation image for unknown generator: " + name);
        if (!img.is_zero()) {
            if (img.ambient() != ambient)
                throw structural_error("derivation image in a different ambient algebra");
            auto deg = img.degree();
            if (!deg || *deg != ambient->degree(*idx) + 1)
                throw validation_error("derivation image of '" + name +
                                       "' is not homogeneous of degree " +
                                       std::to_string(ambient->degree(*idx) + 1));
        }
        out[*idx] = std::move(img);
    }
    if (fill_zero)
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!out[i]) out[i] = Element::zero(ambient);
    return out;
}

Derivation Derivation::make(GeneratorSetPtr ambient, std::map<std::string, Element> images) {
    auto resolved = resolve_images(ambient, images, true);
    Derivation d(std::move(ambient), std::move(resolved));
    if (!d.squares_to_zero())
        throw validation_error("derivation does not square to zero");
    return d;
}

Derivation Derivation::make_partial(GeneratorSetPtr ambient, std::map<std::string, Element> images) {
    auto resolved = resolve_images(ambient, images, false);
    return Derivation(std::move(ambient), std::move(resolved));
}

const Element& Derivation::image(std::size_t index) const {
    if (index >= images_.size()) throw structural_error("generator index out of range");
    if (!images_[index])
        throw structural_error("derivation undefined on generator '" +
                               ambient_->name(index) + "'");
    return *images_[index];
}

bool Derivation::has_image(std::size_t index) const {
    return index < images_.size() && images_[index].has_value();
}

Element Derivation::apply(const Element& e) const {
    if (e.is_zero()) return Element::zero(ambient_);
    if (e.ambient() != ambient_)
        throw structural_error("derivation applied to element of a different ambient algebra");

    Element result(ambient_);
    for (const auto& [mono, coeff] : e.terms()) {
        // d(g1^e1 ... gr^er) = sum_i +-e_i * (prefix) d(g_i) g_i^{e_i-1} (suffix)
        const auto& factors = mono.factors();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            auto [idx, exp] = factors[i];
            const Element& dg = image(idx);
            if (dg.is_zero()) continue;

            std::vector<Monomial::Factor> prefix(factors.begin(), factors.begin() + i);
            std::vector<Monomial::Factor> rest(factors.begin() + i, factors.end());
            rest[0].second -= 1;
            if (rest[0].second == 0) rest.erase(rest.begin());

            int prefix_degree = Monomial(prefix).degree(*ambient_);
            Rational c = coeff * exp;
            if (prefix_degree % 2 != 0) c = -c;

            Element term = Element::monomial(ambient_, Monomial(std::move(prefix)), c);
            term = term * dg;
            term = term * Element::monomial(ambient_, Monomial(std::move(rest)), 1);
            result += term;
        }
    }
    return result;
}

bool Derivation::squares_to_zero() const {
    for (std::size_t i = 0; i < ambient_->count(); ++i) {
        if (!images_[i]) continue;
        if (!apply(*images_[i]).is_zero()) return false;
    }
    return true;
}

Element apply_derivation(const Derivation& d, const Element& e) { return d.apply(e); }

AlgebraHom::AlgebraHom(GeneratorSetPtr source, GeneratorSetPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->count())
        throw structural_error("algebra morphism needs one image per generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Element& img = images_[i];
        if (img.is_zero()) continue;
        if (img.ambient() != target_)
            throw structural_error("morphism image outside the target algebra");
        auto deg = img.degree();
        if (!deg || *deg != source_->degree(i))
            throw validation_error("morphism image of '" + source_->name(i) +
                                   "' must be homogeneous of degree " +
                                   std::to_string(source_->degree(i)));
    }
}

Element AlgebraHom::apply(const Element& e) const {
    if (e.is_zero()) return Element::zero(target_);
    if (e.ambient() != source_)
        throw structural_error("morphism applied to element of a different ambient algebra");
    Element result(target_);
    for (const auto& [mono, coeff] : e.terms()) {
        Element term = Element::constant(target_, coeff);
        for (const auto& [idx, exp] : mono.factors())
            for (std::uint32_t k = 0; k < exp; ++k) term = term * images_[idx];
        result += term;
    }
    return result;
}

Element substitute(const Element& e, std::size_t index, const Element& replacement) {
    const auto& ambient = e.ambient();
    if (!ambient) return e;
    if (!replacement.is_zero()) {
        auto deg = replacement.degree();
        if (!deg || *deg != ambient->degree(index))
            throw validation_error("substitution must preserve the generator degree");
    }
    std::vector<Element> images;
    images.reserve(ambient->count());
    for (std::size_t i = 0; i < ambient->count(); ++i)
        images.push_back(i == index ? replacement : Element::generator(ambient, i));
    return AlgebraHom(ambient, ambient, std::move(images)).apply(e);
}

static void basis_rec(const GeneratorSet& gens, std::size_t from, int remaining,
                      std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t i = from; i < gens.count(); ++i) {
        int d = gens.degree(i);
        if (d > remaining) continue;
        std::uint32_t max_exp = gens.is_odd(i) ? 1u : static_cast<std::uint32_t>(remaining / d);
        for (std::uint32_t e = 1; e <= max_exp; ++e) {
            current.emplace_back(static_cast<std::uint32_t>(i), e);
            basis_rec(gens, i + 1, remaining - static_cast<int>(e) * d, current, out);
            current.pop_back();
        }
    }
}

std::vector<Monomial> basis_in_degree(const GeneratorSetPtr& gens, int n) {
    if (n < 0) throw validation_error("degree must be non-negative");
    for (std::size_t i = 0; i < gens->count(); ++i)
        if (gens->degree(i) == 1)
            throw unsupported_error("degree-1 generators are not supported: " + gens->name(i));
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> current;
    basis_rec(*gens, 0, n, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Element elementary_symmetric(const std::vector<Element>& forms, std::size_t k) {
    if (forms.empty()) throw structural_error("elementary symmetric polynomial of no forms");
    GeneratorSetPtr ambient;
    for (const auto& f : forms)
        if (f.ambient()) ambient = f.ambient();
    if (!ambient) throw structural_error("elementary symmetric polynomial needs an ambient");
    if (k > forms.size()) return Element::zero(ambient);

    // e[j] after processing a prefix of the forms
    std::vector<Element> e(k + 1, Element::zero(ambient));
    e[0] = Element::constant(ambient, 1);
    for (const auto& f : forms)
        for (std::size_t j = std::min(k, forms.size()); j >= 1; --j)
            e[j] += e[j - 1] * f;
    return e[k];
}

} // namespace rht
