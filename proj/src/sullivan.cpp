#include "rht/sullivan.hpp"

#include <algorithm>
#include <sstream>

#include "rht/linalg.hpp"
#include "rht/polytext.hpp"

namespace rht {

long BettiVector::euler_characteristic() const {
    long chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? dims[i] : -dims[i]);
    return chi;
}

bool BettiVector::poincare_duality(int n) const {
    for (int i = 0; i <= n; ++i)
        if ((*this)[static_cast<std::size_t>(i)] != (*this)[static_cast<std::size_t>(n - i)])
            return false;
    // Nothing above the formal dimension.
    for (std::size_t i = static_cast<std::size_t>(n) + 1; i < dims.size(); ++i)
        if (dims[i] != 0) return false;
    return true;
}

int BettiVector::top_degree() const {
    for (std::size_t i = dims.size(); i-- > 0;)
        if (dims[i] != 0) return static_cast<int>(i);
    return -1;
}

SullivanAlgebra::SullivanAlgebra(GeneratorSetPtr generators, Derivation differential, bool minimal)
    : gens_(std::move(generators)), d_(std::move(differential)), minimal_(minimal) {
    if (d_.ambient() != gens_)
        throw structural_error("differential lives on a different generator set");
    if (!d_.squares_to_zero())
        throw validation_error("differential does not square to zero");
    if (minimal_ && !has_no_linear_part(gens_, d_))
        throw validation_error("algebra flagged minimal but a generator image has a linear term");
}

SullivanAlgebra SullivanAlgebra::make(std::vector<Generator> gens,
                                      std::map<std::string, std::string> differential_text) {
    auto ambient = make_generators(std::move(gens));
    std::map<std::string, Element> images;
    for (const auto& [name, text] : differential_text)
        images.emplace(name, parse_element(text, ambient));
    Derivation d = Derivation::make(ambient, std::move(images));
    bool minimal = has_no_linear_part(ambient, d);
    return SullivanAlgebra(ambient, std::move(d), minimal);
}

bool has_no_linear_part(const GeneratorSetPtr& gens, const Derivation& d) {
    for (std::size_t i = 0; i < gens->count(); ++i) {
        if (!d.has_image(i)) continue;
        for (const auto& [mono, coeff] : d.image(i).terms()) {
            const auto& f = mono.factors();
            if (f.size() == 1 && f[0].second == 1) return false;
            if (f.empty()) return false; // constant term
        }
    }
    return true;
}

std::string HomotopySignature::to_string() const {
    auto list = [](const std::vector<int>& v) {
        std::ostringstream s;
        s << "{";
        for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
        s << "}";
        return s.str();
    };
    return "(" + list(even_degrees) + ", " + list(odd_degrees) + ")";
}

HomotopySignature signature_of(const SullivanAlgebra& algebra) {
    if (!algebra.minimal())
        throw validation_error("homotopy signature requires a minimal algebra");
    HomotopySignature sig;
    for (const auto& g : algebra.generators()->generators())
        (g.degree % 2 == 0 ? sig.even_degrees : sig.odd_degrees).push_back(g.degree);
    std::sort(sig.even_degrees.begin(), sig.even_degrees.end());
    std::sort(sig.odd_degrees.begin(), sig.odd_degrees.end());
    return sig;
}

ConstraintReport check_elliptic_constraints(const HomotopySignature& sig, int n,
                                            const std::optional<BettiVector>& betti) {
    if (n < 1) throw validation_error("dimension must be >= 1");
    ConstraintReport r;
    r.dimension = n;
    for (int d : sig.odd_degrees) r.odd_degree_sum += d;
    for (int d : sig.even_degrees) r.even_degree_sum += d;
    r.total_rank = static_cast<int>(sig.odd_degrees.size() + sig.even_degrees.size());
    r.dimension_formula = formal_dimension(sig);
    r.chi_pi = sig.chi_pi();

    r.odd_sum_ok = r.odd_degree_sum <= 2 * n - 1;
    r.even_sum_ok = r.even_degree_sum <= n;
    r.total_rank_ok = r.total_rank <= n;
    r.dimension_formula_ok = r.dimension_formula == n;
    r.euler_ok = r.chi_pi >= 0;
    if (betti) {
        long chi = betti->euler_characteristic();
        bool coupled = (chi >= 0) && ((r.chi_pi > 0) == (chi == 0));
        r.euler_ok = r.euler_ok && coupled;
    }
    return r;
}

int formal_dimension(const HomotopySignature& sig) {
    int dim = 0;
    for (int d : sig.odd_degrees) dim += d;
    for (int d : sig.even_degrees) dim -= d - 1;
    return dim;
}

namespace {

void multisets_with_sum_at_most(int min_value, int step, int max_sum, std::vector<int>& current,
                                std::vector<std::vector<int>>& out) {
    out.push_back(current);
    for (int v = min_value; v <= max_sum; v += step) {
        if (!current.empty() && v < current.back()) continue;
        current.push_back(v);
        multisets_with_sum_at_most(v, step, max_sum - v, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> degree_multisets(int min_value, int step, int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    multisets_with_sum_at_most(min_value, step, max_sum, current, out);
    return out;
}

// A lone even generator of degree e admits finite-dimensional cohomology
// only if some odd generator x satisfies deg x + 1 = k*e with k >= 2 (the
// relation that truncates the polynomial algebra on y; k = 1 would be a
// linear differential, excluded by minimality).
bool single_even_truncatable(const HomotopySignature& sig) {
    int e = sig.even_degrees[0];
    for (int x : sig.odd_degrees) {
        int img = x + 1;
        if (img % e == 0 && img / e >= 2) return true;
    }
    return false;
}

} // namespace

SignatureEnumeration enumerate_elliptic_signatures(int n, EnumerationStage stage) {
    if (n < 2 || n > 7)
        throw validation_error("signature enumeration supports dimensions 2..7");

    SignatureEnumeration result;
    result.dimension = n;

    for (const auto& evens : degree_multisets(2, 2, n)) {
        for (const auto& odds : degree_multisets(3, 2, 2 * n - 1)) {
            HomotopySignature sig{evens, odds};
            if (!check_elliptic_constraints(sig, n).all_ok()) continue;
            result.signatures.push_back(std::move(sig));
        }
    }
    std::sort(result.signatures.begin(), result.signatures.end());

    if (stage == EnumerationStage::arithmetic) return result;

    result.refined = true;
    if (n == 5 || n == 6) {
        // No complete elimination list is implemented for these dimensions;
        // callers get the arithmetic output marked as unverified.
        result.paper_verified = false;
        return result;
    }
    result.paper_verified = true;

    std::vector<HomotopySignature> survivors;
    for (auto& sig : result.signatures) {
        if (n % 2 == 1 && sig.chi_pi() <= 0) {
            result.eliminated.push_back(
                {sig, "odd-dimension-positive-chi",
                 "an odd-dimensional closed manifold has vanishing Euler characteristic, "
                 "which forces a positive homotopy Euler characteristic"});
            continue;
        }
        if (sig.even_degrees.size() == 1 && !single_even_truncatable(sig)) {
            result.eliminated.push_back(
                {sig, "single-even-generator-truncation",
                 "with one even generator y of degree " + std::to_string(sig.even_degrees[0]) +
                     ", finite-dimensional cohomology needs an odd generator x with "
                     "d(x) = y^k, k >= 2; no odd degree fits"});
            continue;
        }
        if (sig.even_degrees == std::vector<int>{2, 4}) {
            bool has_4k_minus_1 = false;
            for (int x : sig.odd_degrees)
                if (x >= 7 && (x + 1) % 4 == 0) has_4k_minus_1 = true;
            if (!has_4k_minus_1) {
                result.eliminated.push_back(
                    {sig, "even-pair-2-4-truncation",
                     "with even generators in degrees 2 and 4, truncating the degree-4 "
                     "generator needs an odd generator of degree 4k-1, k >= 2; none fits"});
                continue;
            }
        }
        survivors.push_back(sig);
    }
    result.signatures = std::move(survivors);
    return result;
}

SullivanAlgebra product(const SullivanAlgebra& a, const SullivanAlgebra& b) {
    std::vector<Generator> gens = a.generators()->generators();
    std::map<std::string, bool> used;
    for (const auto& g : gens) used[g.name] = true;

    std::vector<std::string> b_names;
    for (const auto& g : b.generators()->generators()) {
        std::string name = g.name;
        while (used.count(name)) name += "'";
        used[name] = true;
        b_names.push_back(name);
        gens.push_back({name, g.degree});
    }
    auto ambient = make_generators(std::move(gens));

    // Transport both differentials into the combined algebra.
    auto transport = [&](const SullivanAlgebra& src, std::size_t offset,
                         std::map<std::string, Element>& images) {
        const auto& sg = *src.generators();
        std::vector<Element> gen_images;
        for (std::size_t i = 0; i < sg.count(); ++i)
            gen_images.push_back(Element::generator(ambient, offset + i));
        AlgebraHom inject(src.generators(), ambient, std::move(gen_images));
        for (std::size_t i = 0; i < sg.count(); ++i) {
            Element img = inject.apply(src.differential().image(i));
            images.emplace(ambient->name(offset + i), std::move(img));
        }
    };

    std::map<std::string, Element> images;
    transport(a, 0, images);
    transport(b, a.generators()->count(), images);
    Derivation d = Derivation::make(ambient, std::move(images));
    bool minimal = a.minimal() && b.minimal();
    return SullivanAlgebra(ambient, std::move(d), minimal);
}

BettiVector cohomology_dims(const SullivanAlgebra& algebra, int max_degree) {
    if (max_degree < 0) throw validation_error("max degree must be >= 0");
    const auto& gens = algebra.generators();

    std::vector<std::vector<Monomial>> bases(static_cast<std::size_t>(max_degree) + 2);
    for (int k = 0; k <= max_degree + 1; ++k)
        bases[static_cast<std::size_t>(k)] = basis_in_degree(gens, k);

    // rank of d restricted to each degree k <= max_degree
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int k = 0; k <= max_degree; ++k) {
        const auto& dom = bases[static_cast<std::size_t>(k)];
        const auto& cod = bases[static_cast<std::size_t>(k) + 1];
        if (dom.empty() || cod.empty()) continue;
        std::map<Monomial, std::size_t> row_of;
        for (std::size_t r = 0; r < cod.size(); ++r) row_of.emplace(cod[r], r);

        QMatrix m(cod.size(), dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Element img = algebra.d(Element::monomial(gens, dom[c], 1));
            for (const auto& [mono, coeff] : img.terms()) m.at(row_of.at(mono), c) = coeff;
        }
        ranks[static_cast<std::size_t>(k)] = m.rank();
    }

    BettiVector betti;
    betti.dims.resize(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int k = 0; k <= max_degree; ++k) {
        long dim_k = static_cast<long>(bases[static_cast<std::size_t>(k)].size());
        long rank_k = static_cast<long>(ranks[static_cast<std::size_t>(k)]);
        long rank_prev = k > 0 ? static_cast<long>(ranks[static_cast<std::size_t>(k) - 1]) : 0;
        betti.dims[static_cast<std::size_t>(k)] = dim_k - rank_k - rank_prev;
    }
    return betti;
}

SullivanAlgebra eliminate_contractible_pairs(const SullivanAlgebra& algebra) {
    GeneratorSetPtr gens = algebra.generators();
    std::vector<Element> images;
    for (std::size_t i = 0; i < gens->count(); ++i) images.push_back(algebra.differential().image(i));

    while (true) {
        // Find a generator x whose image carries a bare-generator term c*g
        // with g not occurring in the rest of the image.
        std::optional<std::pair<std::size_t, std::size_t>> pair; // (x, g)
        Rational coeff;
        for (std::size_t x = 0; x < gens->count() && !pair; ++x) {
            for (const auto& [mono, c] : images[x].terms()) {
                const auto& f = mono.factors();
                if (f.size() != 1 || f[0].second != 1) continue;
                std::size_t g = f[0].first;
                bool clean = true;
                for (const auto& [other, oc] : images[x].terms()) {
                    if (other == mono) continue;
                    if (other.exponent_of(static_cast<std::uint32_t>(g)) > 0) clean = false;
                }
                if (!clean) continue;
                pair = {x, g};
                coeff = c;
                break;
            }
        }
        if (!pair) break;
        auto [x, g] = *pair;

        // New coordinate u = c*g + rest, so that d(x) = u; express g through u.
        Element rest = images[x];
        rest.add_term(Monomial::generator(static_cast<std::uint32_t>(g)), -coeff);
        Element replacement = (Rational(1) / coeff) * (Element::generator(gens, g) - rest);
        for (auto& img : images) img = substitute(img, g, replacement);

        // Quotient by the differential ideal (x, u).
        std::vector<Generator> reduced_gens;
        std::vector<Element> zero_or_gen;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < gens->count(); ++i)
            if (i != x && i != g) keep.push_back(i);
        for (std::size_t i : keep) reduced_gens.push_back(gens->gen(i));
        auto reduced = make_generators(std::move(reduced_gens));

        std::vector<Element> proj_images(gens->count(), Element::zero(reduced));
        for (std::size_t j = 0; j < keep.size(); ++j)
            proj_images[keep[j]] = Element::generator(reduced, j);
        AlgebraHom project(gens, reduced, std::move(proj_images));

        std::vector<Element> new_images;
        for (std::size_t i : keep) new_images.push_back(project.apply(images[i]));

        gens = reduced;
        images = std::move(new_images);
    }

    std::map<std::string, Element> image_map;
    for (std::size_t i = 0; i < gens->count(); ++i)
        image_map.emplace(gens->name(i), images[i]);
    Derivation d = Derivation::make(gens, std::move(image_map));
    bool minimal = has_no_linear_part(gens, d);
    return SullivanAlgebra(gens, std::move(d), minimal);
}

} // namespace rht
