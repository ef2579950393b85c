#include "rht/biquotient.hpp"

#include <algorithm>
#include <sstream>

namespace rht {

namespace {

struct UniversalClass {
    int index;  // c_k or q_k
    int degree; // cohomological degree of the class
};

std::vector<UniversalClass> universal_classes(const LieGroupDescriptor& g) {
    std::vector<UniversalClass> out;
    if (g.family == Family::SU) {
        for (int k = 2; k <= g.parameter; ++k) out.push_back({k, 2 * k});
    } else if (g.family == Family::Sp) {
        for (int k = 1; k <= g.parameter; ++k) out.push_back({k, 4 * k});
    } else {
        throw unsupported_error("model construction supports SU and Sp factors only");
    }
    return out;
}

std::size_t defining_dimension(const LieGroupDescriptor& g) {
    return static_cast<std::size_t>(g.parameter);
}

// Catalogue pullback of the universal class c_k / q_k of `g` under the
// named embedding of `h`, expressed in the generators `h_gens` (the
// polynomial generators of H^*(BH) for that factor, in degree order).
Element catalogue_pullback(const GeneratorSetPtr& ambient, const LieGroupDescriptor& h,
                           const std::vector<std::size_t>& h_gens, const LieGroupDescriptor& g,
                           const std::string& name, int class_index) {
    auto gen = [&](std::size_t i) { return Element::generator(ambient, h_gens.at(i)); };
    auto zero = Element::zero(ambient);

    if (name == "identity") {
        if (h != g) throw validation_error("identity embedding needs equal groups");
        return gen(static_cast<std::size_t>(class_index -
                                            (g.family == Family::SU ? 2 : 1)));
    }
    if (name == "block") {
        // Sp(m) in Sp(n) or SU(m) in SU(n) by the upper block.
        if (h.family != g.family || h.parameter >= g.parameter)
            throw validation_error("block embedding needs a smaller group of the same family");
        int first = (g.family == Family::SU) ? 2 : 1;
        int last = h.parameter;
        if (class_index <= last && class_index >= first)
            return gen(static_cast<std::size_t>(class_index - first));
        return zero;
    }
    if (name == "standard" && h.family == Family::Sp && h.parameter == 2 &&
        g.family == Family::SU && g.parameter == 4) {
        // Sp(2) in SU(4): c2 -> q1, c3 -> 0, c4 -> q2.
        if (class_index == 2) return gen(0);
        if (class_index == 4) return gen(1);
        return zero;
    }
    if (name == "standard" && h.family == Family::SU && g.family == Family::SU &&
        h.parameter < g.parameter) {
        if (class_index <= h.parameter) return gen(static_cast<std::size_t>(class_index - 2));
        return zero;
    }
    throw unsupported_error("embedding '" + name + "' of " + display(h) + " in " + display(g) +
                            " is not in the supported catalogue");
}

} // namespace

void validate(const BiquotientSpec& spec) {
    if (spec.g_factors.empty()) throw validation_error("no G factors");
    for (const auto& g : spec.g_factors) {
        if (g.family == Family::SU && g.parameter < 3)
            throw unsupported_error("write SU(2) factors as Sp(1)");
        if (g.family != Family::SU && g.family != Family::Sp)
            throw unsupported_error("model construction supports SU and Sp factors only");
        if (g.family == Family::Sp && g.parameter < 1)
            throw validation_error("Sp factor needs parameter >= 1");
    }
    std::size_t n_g = spec.g_factors.size();
    for (const auto& hf : spec.h_factors) {
        if (const auto* c = std::get_if<CircleFactor>(&hf)) {
            if (c->left.size() != n_g || c->right.size() != n_g)
                throw validation_error("circle factor needs one weight vector per G factor "
                                       "on each side");
            for (std::size_t j = 0; j < n_g; ++j) {
                const auto& g = spec.g_factors[j];
                for (const auto* side : {&c->left[j], &c->right[j]}) {
                    if (side->size() != defining_dimension(g))
                        throw validation_error("weight vector for " + display(g) + " must have " +
                                               std::to_string(defining_dimension(g)) +
                                               " entries");
                    if (g.family == Family::SU) {
                        long sum = 0;
                        for (long w : *side) sum += w;
                        if (sum != 0)
                            throw validation_error("weights into " + display(g) +
                                                   " must sum to zero");
                    }
                }
            }
        } else {
            const auto& s = std::get<SimpleFactor>(hf);
            if (s.left.size() != n_g || s.right.size() != n_g)
                throw validation_error("simple factor needs one embedding name per G factor "
                                       "on each side");
            bool nontrivial = false;
            for (const auto& e : s.left) nontrivial |= !e.empty();
            for (const auto& e : s.right) nontrivial |= !e.empty();
            if (!nontrivial) throw validation_error("simple H factor acts trivially");
        }
    }
    // One simple factor per G-factor side, never mixed with circle weights.
    for (std::size_t j = 0; j < n_g; ++j) {
        for (int side = 0; side < 2; ++side) {
            int simples = 0;
            bool circle = false;
            for (const auto& hf : spec.h_factors) {
                if (const auto* c = std::get_if<CircleFactor>(&hf)) {
                    const auto& w = side == 0 ? c->left[j] : c->right[j];
                    for (long x : w) circle |= x != 0;
                } else {
                    const auto& s = std::get<SimpleFactor>(hf);
                    const auto& e = side == 0 ? s.left[j] : s.right[j];
                    if (!e.empty()) ++simples;
                }
            }
            if (simples > 1 || (simples == 1 && circle))
                throw unsupported_error("at most one simple factor may act on each side of a "
                                        "G factor, and not together with circle weights");
        }
    }
}

Element weight_symmetric_polynomial(const GeneratorSetPtr& ambient,
                                    const std::vector<std::size_t>& torus_gens,
                                    const std::vector<std::vector<long>>& weights,
                                    std::size_t k) {
    if (weights.empty()) throw structural_error("no weight vectors");
    std::size_t slots = weights.front().size();
    std::vector<Element> forms;
    for (std::size_t s = 0; s < slots; ++s) {
        Element form = Element::zero(ambient);
        for (std::size_t r = 0; r < weights.size(); ++r) {
            if (weights[r].size() != slots) throw structural_error("ragged weight data");
            if (weights[r][s] != 0)
                form += Rational(weights[r][s]) * Element::generator(ambient, torus_gens[r]);
        }
        forms.push_back(std::move(form));
    }
    return elementary_symmetric(forms, k);
}

BuiltModel build_model(const BiquotientSpec& spec) {
    validate(spec);

    // Generators: H-side evens first (circles u, v, w, ...; simple-factor
    // classifying generators), then one odd generator per universal class
    // of each G-factor.
    std::vector<Generator> gens;
    std::map<std::string, int> used;
    auto fresh = [&](std::string base) {
        while (used.count(base)) base += "'";
        used[base] = 1;
        return base;
    };

    std::vector<std::size_t> circle_gen;               // ambient index per circle factor
    std::vector<std::vector<std::size_t>> simple_gens; // ambient indices per simple factor
    std::vector<int> circle_of_h, simple_of_h;         // h-factor -> ordinal in its kind

    static const char* kCircleNames[] = {"u", "v", "w"};
    int n_circles = 0;
    for (const auto& hf : spec.h_factors) {
        if (std::holds_alternative<CircleFactor>(hf)) {
            std::string base = n_circles < 3 ? kCircleNames[n_circles]
                                             : "u" + std::to_string(n_circles + 1);
            circle_of_h.push_back(n_circles);
            simple_of_h.push_back(-1);
            circle_gen.push_back(gens.size());
            gens.push_back({fresh(base), 2});
            ++n_circles;
        } else {
            const auto& s = std::get<SimpleFactor>(hf);
            circle_of_h.push_back(-1);
            simple_of_h.push_back(static_cast<int>(simple_gens.size()));
            std::vector<std::size_t> idx;
            for (const auto& cls : universal_classes(s.grp)) {
                std::string base = (s.grp.family == Family::Sp ? "q" : "c") +
                                   std::to_string(cls.index);
                idx.push_back(gens.size());
                gens.push_back({fresh(base), cls.degree});
            }
            simple_gens.push_back(std::move(idx));
        }
    }

    struct OddGen {
        std::size_t g_factor;
        int class_index;
        std::size_t ambient_index;
    };
    std::vector<OddGen> odd_gens;
    for (std::size_t j = 0; j < spec.g_factors.size(); ++j) {
        for (const auto& cls : universal_classes(spec.g_factors[j])) {
            std::string base = "x" + std::to_string(cls.degree - 1);
            odd_gens.push_back({j, cls.index, gens.size()});
            gens.push_back({fresh(base), cls.degree - 1});
        }
    }

    auto ambient = make_generators(std::move(gens));

    // Pullback of class k of G-factor j on one side.
    auto side_pullback = [&](std::size_t j, int class_index, int degree, bool left) {
        const auto& g = spec.g_factors[j];
        Element total = Element::zero(ambient);

        // Simple factor acting on this side, if any.
        for (std::size_t i = 0; i < spec.h_factors.size(); ++i) {
            const auto* s = std::get_if<SimpleFactor>(&spec.h_factors[i]);
            if (!s) continue;
            const std::string& name = left ? s->left[j] : s->right[j];
            if (name.empty()) continue;
            total += catalogue_pullback(ambient, s->grp,
                                        simple_gens[static_cast<std::size_t>(simple_of_h[i])], g,
                                        name, class_index);
        }

        // Torus weights: elementary symmetric polynomials of the linear
        // forms (squared for symplectic factors).
        std::vector<std::vector<long>> weights;
        std::vector<std::size_t> torus;
        for (std::size_t i = 0; i < spec.h_factors.size(); ++i) {
            const auto* c = std::get_if<CircleFactor>(&spec.h_factors[i]);
            if (!c) continue;
            torus.push_back(circle_gen[static_cast<std::size_t>(circle_of_h[i])]);
            weights.push_back(left ? c->left[j] : c->right[j]);
        }
        if (!torus.empty()) {
            bool any = false;
            for (const auto& w : weights)
                for (long x : w) any |= x != 0;
            if (any) {
                if (g.family == Family::SU) {
                    total += weight_symmetric_polynomial(ambient, torus, weights,
                                                         static_cast<std::size_t>(class_index));
                } else {
                    std::size_t slots = defining_dimension(g);
                    std::vector<Element> squares;
                    for (std::size_t sl = 0; sl < slots; ++sl) {
                        Element form = Element::zero(ambient);
                        for (std::size_t r = 0; r < torus.size(); ++r)
                            if (weights[r][sl] != 0)
                                form += Rational(weights[r][sl]) *
                                        Element::generator(ambient, torus[r]);
                        squares.push_back(form * form);
                    }
                    total += elementary_symmetric(squares,
                                                  static_cast<std::size_t>(class_index));
                }
            }
        }
        (void)degree;
        return total;
    };

    // Difference-weight convention for torus actions.
    auto difference_pullback = [&](std::size_t j, int class_index) {
        const auto& g = spec.g_factors[j];
        Element total = Element::zero(ambient);
        for (std::size_t i = 0; i < spec.h_factors.size(); ++i) {
            if (const auto* s = std::get_if<SimpleFactor>(&spec.h_factors[i])) {
                bool both = !s->left[j].empty() && !s->right[j].empty();
                if (both)
                    throw unsupported_error(
                        "the difference-weight convention supports simple factors acting on "
                        "one side only");
            }
        }
        // Simple factors: one-sided, so the difference equals the pullback
        // difference.
        for (std::size_t i = 0; i < spec.h_factors.size(); ++i) {
            const auto* s = std::get_if<SimpleFactor>(&spec.h_factors[i]);
            if (!s) continue;
            if (!s->left[j].empty())
                total += catalogue_pullback(ambient, s->grp,
                                            simple_gens[static_cast<std::size_t>(simple_of_h[i])],
                                            g, s->left[j], class_index);
            if (!s->right[j].empty())
                total -= catalogue_pullback(ambient, s->grp,
                                            simple_gens[static_cast<std::size_t>(simple_of_h[i])],
                                            g, s->right[j], class_index);
        }
        std::vector<std::vector<long>> weights;
        std::vector<std::size_t> torus;
        for (std::size_t i = 0; i < spec.h_factors.size(); ++i) {
            const auto* c = std::get_if<CircleFactor>(&spec.h_factors[i]);
            if (!c) continue;
            torus.push_back(circle_gen[static_cast<std::size_t>(circle_of_h[i])]);
            std::vector<long> diff(c->left[j].size());
            for (std::size_t sl = 0; sl < diff.size(); ++sl)
                diff[sl] = c->left[j][sl] - c->right[j][sl];
            weights.push_back(std::move(diff));
        }
        if (!torus.empty()) {
            bool any = false;
            for (const auto& w : weights)
                for (long x : w) any |= x != 0;
            if (any) {
                if (g.family == Family::SU) {
                    total += weight_symmetric_polynomial(ambient, torus, weights,
                                                         static_cast<std::size_t>(class_index));
                } else {
                    std::size_t slots = defining_dimension(g);
                    std::vector<Element> squares;
                    for (std::size_t sl = 0; sl < slots; ++sl) {
                        Element form = Element::zero(ambient);
                        for (std::size_t r = 0; r < torus.size(); ++r)
                            if (weights[r][sl] != 0)
                                form += Rational(weights[r][sl]) *
                                        Element::generator(ambient, torus[r]);
                        squares.push_back(form * form);
                    }
                    total += elementary_symmetric(squares,
                                                  static_cast<std::size_t>(class_index));
                }
            }
        }
        return total;
    };

    std::map<std::string, Element> images;
    for (const auto& og : odd_gens) {
        const auto& cls_list = universal_classes(spec.g_factors[og.g_factor]);
        int degree = 0;
        for (const auto& c : cls_list)
            if (c.index == og.class_index) degree = c.degree;
        Element d_img =
            spec.convention == ModelConvention::pullback_difference
                ? side_pullback(og.g_factor, og.class_index, degree, true) -
                      side_pullback(og.g_factor, og.class_index, degree, false)
                : difference_pullback(og.g_factor, og.class_index);
        images.emplace(ambient->name(og.ambient_index), std::move(d_img));
    }

    Derivation d = Derivation::make(ambient, std::move(images));
    bool minimal = has_no_linear_part(ambient, d);

    BuiltModel out{SullivanAlgebra(ambient, std::move(d), minimal), std::nullopt};

    if (spec.g_factors.size() == 1 && spec.g_factors[0] == LieGroupDescriptor{Family::SU, 3} &&
        spec.h_factors.size() == 1 && std::holds_alternative<CircleFactor>(spec.h_factors[0])) {
        const auto& c = std::get<CircleFactor>(spec.h_factors[0]);
        auto e2 = [](const std::vector<long>& w) {
            long s = 0;
            for (std::size_t a = 0; a < w.size(); ++a)
                for (std::size_t b = a + 1; b < w.size(); ++b) s += w[a] * w[b];
            return s;
        };
        Integer torsion = e2(c.left[0]) - e2(c.right[0]);
        if (torsion < 0) torsion = -torsion;
        out.su3_circle_torsion_order = torsion;
    }
    return out;
}

Classification7 detect_type_full(const BiquotientSpec& spec) {
    long dim = 0;
    for (const auto& g : spec.g_factors) dim += dimension(g);
    for (const auto& hf : spec.h_factors) {
        if (std::holds_alternative<CircleFactor>(hf)) dim -= 1;
        else dim -= dimension(std::get<SimpleFactor>(hf).grp);
    }
    if (dim != 7)
        throw validation_error("biquotient has dimension " + std::to_string(dim) + ", not 7");

    BuiltModel built = build_model(spec);
    SullivanAlgebra reduced = eliminate_contractible_pairs(built.model);
    return classify7_full(reduced);
}

RealType7 detect_type(const BiquotientSpec& spec) { return detect_type_full(spec).type; }

TrivialityLocus circle_triviality_locus(const BiquotientSpec& spec) {
    if (spec.convention != ModelConvention::paper_su3)
        throw validation_error("the triviality locus is defined for the difference-weight "
                               "convention");
    if (spec.g_factors.size() != 1 || spec.g_factors[0] != LieGroupDescriptor{Family::SU, 3} ||
        spec.h_factors.size() != 1 || !std::holds_alternative<CircleFactor>(spec.h_factors[0]))
        throw validation_error("the triviality locus applies to a circle in SU(3)");

    BuiltModel built = build_model(spec);
    const auto& gens = built.model.generators();
    std::size_t x3 = gens->require_index("x3");
    bool zero = built.model.differential().image(x3).is_zero();

    TrivialityLocus out;
    out.locus = "a1 = a2 and b1 = b2 (equal weight vectors; the discriminant "
                "-3(b1-b2)^2 admits no other rational solution)";
    out.on_locus = zero;
    out.annotation = "the rotation numbers on this locus do not act freely, so no quotient "
                     "manifold arises from it";
    return out;
}

} // namespace rht
