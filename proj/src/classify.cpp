#include "rht/classify.hpp"

#include <algorithm>

namespace rht {

QuadraticForm QuadraticForm::change_basis(const Rational& p, const Rational& q, const Rational& r,
                                          const Rational& s) const {
    // a -> p a + q b, b -> r a + s b
    QuadraticForm out;
    out.a2 = a2 * p * p + ab * p * r + b2 * r * r;
    out.ab = 2 * a2 * p * q + ab * (p * s + q * r) + 2 * b2 * r * s;
    out.b2 = a2 * q * q + ab * q * s + b2 * s * s;
    return out;
}

std::string to_string(RealType4 t) {
    switch (t) {
        case RealType4::S4: return "S4";
        case RealType4::CP2: return "CP2";
        case RealType4::S2xS2: return "S2xS2";
        case RealType4::CP2_connected_sum_CP2: return "CP2#CP2";
    }
    return "?";
}

std::string to_string(RealType7 t) {
    switch (t) {
        case RealType7::S7: return "S7";
        case RealType7::S4xS3: return "S4xS3";
        case RealType7::S2xS5: return "S2xS5";
        case RealType7::CP2xS3: return "CP2xS3";
        case RealType7::S2xS2xS3: return "S2xS2xS3";
        case RealType7::S3xCP2_connected_sum_CP2: return "S3xCP2#CP2";
        case RealType7::S3twisted: return "S3twisted";
    }
    return "?";
}

std::vector<RealType4> all_real_types4() {
    return {RealType4::S4, RealType4::CP2, RealType4::S2xS2, RealType4::CP2_connected_sum_CP2};
}

std::vector<RealType7> all_real_types7() {
    return {RealType7::S7,        RealType7::S4xS3,
            RealType7::S2xS5,     RealType7::CP2xS3,
            RealType7::S2xS2xS3,  RealType7::S3xCP2_connected_sum_CP2,
            RealType7::S3twisted};
}

Rational resultant(const QuadraticForm& q1, const QuadraticForm& q2) {
    Rational ac = q1.a2 * q2.b2 - q2.a2 * q1.b2;
    Rational abp = q1.a2 * q2.ab - q2.a2 * q1.ab;
    Rational bc = q1.ab * q2.b2 - q2.ab * q1.b2;
    return ac * ac - abp * bc;
}

bool regular_sequence_check(const QuadraticPair& p) { return resultant(p.q1, p.q2) != 0; }

PairClassification classify_pair_real_full(const QuadraticPair& p) {
    if (!regular_sequence_check(p))
        throw validation_error("relations do not form a regular sequence");

    // Functional on degree 4 vanishing on both relations, in the monomial
    // basis (a^2, ab, b^2); unique up to scale since the relations span a
    // plane.
    QMatrix rel(2, 3);
    rel.at(0, 0) = p.q1.a2; rel.at(0, 1) = p.q1.ab; rel.at(0, 2) = p.q1.b2;
    rel.at(1, 0) = p.q2.a2; rel.at(1, 1) = p.q2.ab; rel.at(1, 2) = p.q2.b2;
    auto kernel = rel.kernel_basis();
    if (kernel.size() != 1)
        throw structural_error("degree-4 quotient of a regular pair must be a line");
    const auto& f = kernel[0];

    PairClassification out{};
    // Gram in the basis [a], [b]: <a,a> = f(a^2), <a,b> = f(ab), <b,b> = f(b^2).
    QMatrix g(2, 2);
    g.at(0, 0) = f[0]; g.at(0, 1) = f[1]; g.at(1, 0) = f[1]; g.at(1, 1) = f[2];
    out.gram = {{{f[0], f[1]}, {f[1], f[2]}}};
    out.signature = symmetric_signature(g);
    if (out.signature.degenerate())
        throw structural_error("intersection form of a regular pair is degenerate");
    out.type = out.signature.definite(2) ? RealType4::CP2_connected_sum_CP2 : RealType4::S2xS2;
    return out;
}

RealType4 classify_pair_real(const QuadraticPair& p) { return classify_pair_real_full(p).type; }

namespace {

bool in_relation_span(const QuadraticPair& target, const QuadraticForm& q) {
    QMatrix m(3, 2);
    m.at(0, 0) = target.q1.a2; m.at(1, 0) = target.q1.ab; m.at(2, 0) = target.q1.b2;
    m.at(0, 1) = target.q2.a2; m.at(1, 1) = target.q2.ab; m.at(2, 1) = target.q2.b2;
    std::vector<Rational> x;
    return m.solve({q.a2, q.ab, q.b2}, x);
}

bool matrix_carries_ideal(const QuadraticPair& from, const QuadraticPair& to,
                          const Rational& k1, const Rational& k2, const Rational& k3,
                          const Rational& k4) {
    if (k1 * k4 - k2 * k3 == 0) return false;
    QuadraticForm i1 = from.q1.change_basis(k1, k2, k3, k4);
    QuadraticForm i2 = from.q2.change_basis(k1, k2, k3, k4);
    return in_relation_span(to, i1) && in_relation_span(to, i2);
}

} // namespace

IsoResult iso_case31(const Rational& s, const Rational& t, FieldMode field) {
    if (s == 0 || t == 0)
        throw validation_error("parameters must be non-zero for a regular sequence");

    IsoResult out;
    if (field == FieldMode::R) {
        out.isomorphic = sign(s) == sign(t);
        out.criterion = out.isomorphic
                            ? "s and t have the same sign, so 1/(st) has a real square root"
                            : "s and t have opposite signs, so 1/(st) has no real square root";
        return out;
    }

    auto root = rational_sqrt(Rational(1) / (s * t));
    if (!root) {
        out.isomorphic = false;
        out.criterion = "1/(st) not a rational square";
        return out;
    }
    Rational k3 = *root;
    QuadraticPair from{{1, 0, s}, {0, 1, 0}};
    QuadraticPair to{{1, 0, t}, {0, 1, 0}};
    if (!matrix_carries_ideal(from, to, 0, 1, k3, 0))
        throw structural_error("square-root witness failed the ideal-membership check");
    out.isomorphic = true;
    out.witness_k3 = k3;
    out.criterion = "1/(st) = (" + to_string(k3) + ")^2; a -> b, b -> " + to_string(k3) +
                    "*a carries the relations into the target relation span";
    return out;
}

std::vector<QuadraticPair> generate_rational_family(int count) {
    if (count < 1) throw validation_error("family size must be >= 1");
    std::vector<QuadraticPair> out;
    long candidate = 2;
    while (static_cast<int>(out.size()) < count) {
        bool prime = candidate >= 2;
        for (long d = 2; d * d <= candidate && prime; ++d)
            if (candidate % d == 0) prime = false;
        if (prime)
            out.push_back({{1, 0, Rational(candidate)}, {0, 1, 0}});
        ++candidate;
    }
    return out;
}

namespace {

struct SplitBasis {
    // Rows express the new basis in the old one: a' = p a + q b, b' = r a + s b.
    Rational p, q, r, s;
};

// Factors q into two non-proportional rational linear forms, if possible.
std::optional<SplitBasis> split_form(const QuadraticForm& f) {
    if (f.is_zero()) return std::nullopt;
    Rational disc = f.ab * f.ab - 4 * f.a2 * f.b2;
    if (disc <= 0) return std::nullopt;
    auto root = rational_sqrt(disc);
    if (!root) return std::nullopt;
    if (f.a2 != 0) {
        // a^2-coefficient non-zero: f = a2 (a - x1 b)(a - x2 b) with x1 != x2.
        Rational x1 = (-f.ab + *root) / (2 * f.a2);
        Rational x2 = (-f.ab - *root) / (2 * f.a2);
        return SplitBasis{1, -x1, 1, -x2};
    }
    if (f.ab != 0) {
        // f = b (ab a + b2 b)
        return SplitBasis{0, 1, f.ab, f.b2};
    }
    return std::nullopt; // pure b^2: a perfect square
}

} // namespace

std::optional<Rational> reduce_to_split_normal_form(const QuadraticPair& p) {
    if (!regular_sequence_check(p))
        throw validation_error("relations do not form a regular sequence");

    std::vector<std::pair<QuadraticForm, QuadraticForm>> attempts;
    attempts.emplace_back(p.q2, p.q1);
    attempts.emplace_back(p.q1, p.q2);
    for (int lambda = -3; lambda <= 3; ++lambda) {
        QuadraticForm mixed{p.q2.a2 + lambda * p.q1.a2, p.q2.ab + lambda * p.q1.ab,
                            p.q2.b2 + lambda * p.q1.b2};
        attempts.emplace_back(mixed, p.q1);
    }

    for (const auto& [splittable, other] : attempts) {
        auto basis = split_form(splittable);
        if (!basis) continue;
        Rational det = basis->p * basis->s - basis->q * basis->r;
        if (det == 0) continue;
        // Old coordinates in terms of the new ones.
        Rational ia = basis->s / det, ib = -basis->q / det;
        Rational ic = -basis->r / det, id = basis->p / det;
        QuadraticForm r1 = other.change_basis(ia, ib, ic, id);
        // Kill the mixed term with a multiple of a'b'.
        r1.ab = 0;
        if (r1.a2 == 0 || r1.b2 == 0) continue;
        return r1.a2 * r1.b2; // the family parameter, up to rational squares
    }
    return std::nullopt;
}

GeneralIsoResult iso_general(const QuadraticPair& lhs, const QuadraticPair& rhs, int height_bound) {
    if (!regular_sequence_check(lhs) || !regular_sequence_check(rhs))
        throw validation_error("relations do not form a regular sequence");

    GeneralIsoResult out;
    auto s = reduce_to_split_normal_form(lhs);
    auto t = reduce_to_split_normal_form(rhs);
    if (s && t) {
        auto iso = iso_case31(*s, *t, FieldMode::Q);
        out.decided = true;
        out.isomorphic = iso.isomorphic;
        out.method = "normal-form reduction to the (a^2 + s b^2, ab) family; " + iso.criterion;
        return out;
    }

    std::vector<Rational> values;
    for (int den = 1; den <= height_bound; ++den)
        for (int num = -height_bound; num <= height_bound; ++num) {
            Rational v(num, den);
            if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
        }

    // The grading automorphism scales any isomorphism, so the first
    // non-zero row entry can be normalised to 1.
    auto try_matrix = [&](const Rational& k1, const Rational& k2, const Rational& k3,
                          const Rational& k4) {
        if (!matrix_carries_ideal(lhs, rhs, k1, k2, k3, k4)) return false;
        out.decided = true;
        out.isomorphic = true;
        out.method = "explicit matrix found by bounded-height search";
        out.matrix = {{k1, k2, k3, k4}};
        return true;
    };
    for (const Rational& k2 : values)
        for (const Rational& k3 : values)
            for (const Rational& k4 : values) {
                if (try_matrix(1, k2, k3, k4)) return out;
                if (try_matrix(0, 1, k3, k4)) return out;
            }

    out.decided = false;
    out.method = "no witness up to height " + std::to_string(height_bound) +
                 "; rational equivalence undecided";
    return out;
}

SullivanAlgebra pair_model(const QuadraticPair& p) {
    auto gens = make_generators({{"a", 2}, {"b", 2}, {"x", 3}, {"y", 3}});
    auto quad = [&](const QuadraticForm& q) {
        Element a = Element::generator(gens, 0), b = Element::generator(gens, 1);
        return q.a2 * (a * a) + q.ab * (a * b) + q.b2 * (b * b);
    };
    Derivation d = Derivation::make(gens, {{"x", quad(p.q1)}, {"y", quad(p.q2)}});
    return SullivanAlgebra(gens, std::move(d), true);
}

bool scaling_commutes_with_differential(const QuadraticPair& p, const Rational& m) {
    if (m == 0) throw validation_error("scaling parameter must be non-zero");
    SullivanAlgebra model = pair_model(p);
    const auto& gens = model.generators();
    std::vector<Element> images;
    for (std::size_t i = 0; i < gens->count(); ++i) {
        Rational factor = gens->degree(i) == 2 ? m : m * m;
        images.push_back(factor * Element::generator(gens, i));
    }
    AlgebraHom psi(gens, gens, std::move(images));
    for (std::size_t i = 0; i < gens->count(); ++i) {
        Element lhs = psi.apply(model.differential().image(i));
        Element rhs = model.d(psi.apply(Element::generator(gens, i)));
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

QuadraticForm element_as_form(const Element& e, std::size_t a_idx, std::size_t b_idx) {
    QuadraticForm q{0, 0, 0};
    for (const auto& [mono, coeff] : e.terms()) {
        std::uint32_t ea = mono.exponent_of(static_cast<std::uint32_t>(a_idx));
        std::uint32_t eb = mono.exponent_of(static_cast<std::uint32_t>(b_idx));
        if (ea == 2 && eb == 0) q.a2 = coeff;
        else if (ea == 1 && eb == 1) q.ab = coeff;
        else if (ea == 0 && eb == 2) q.b2 = coeff;
        else throw structural_error("image is not a quadratic in the two degree-2 generators");
    }
    return q;
}

} // namespace

Classification7 classify7_full(const SullivanAlgebra& model) {
    if (!model.minimal()) throw validation_error("classification requires a minimal model");
    Classification7 out{};
    out.signature = signature_of(model);

    const HomotopySignature& sig = out.signature;
    const HomotopySignature s7{{}, {7}};
    const HomotopySignature s4s3{{4}, {3, 7}};
    const HomotopySignature s2s5{{2}, {3, 5}};
    const HomotopySignature case3{{2, 2}, {3, 3, 3}};
    if (sig != s7 && sig != s4s3 && sig != s2s5 && sig != case3)
        throw validation_error("signature " + sig.to_string() +
                               " is not admissible for an elliptic 7-dimensional space");

    BettiVector betti = cohomology_dims(model, 14);
    if (!betti.poincare_duality(7) || betti[7] != 1)
        throw validation_error("model is not elliptic of formal dimension 7");

    if (sig == s7) {
        out.type = RealType7::S7;
        return out;
    }
    if (sig == s4s3) {
        out.type = RealType7::S4xS3;
        return out;
    }
    if (sig == s2s5) {
        out.b4 = betti[4];
        out.type = out.b4 == 0 ? RealType7::S2xS5 : RealType7::CP2xS3;
        return out;
    }

    // Two even generators a, b and three odd generators; the kernel of d on
    // the degree-3 span decides between a split S3 factor and the twisted
    // bundle.
    const auto& gens = model.generators();
    std::vector<std::size_t> even_idx, odd_idx;
    for (std::size_t i = 0; i < gens->count(); ++i)
        (gens->degree(i) % 2 == 0 ? even_idx : odd_idx).push_back(i);

    QMatrix d3(3, 3); // rows: a^2, ab, b^2; columns: the degree-3 generators
    std::vector<QuadraticForm> image_forms;
    for (std::size_t c = 0; c < odd_idx.size(); ++c) {
        QuadraticForm q =
            element_as_form(model.differential().image(odd_idx[c]), even_idx[0], even_idx[1]);
        image_forms.push_back(q);
        d3.at(0, c) = q.a2;
        d3.at(1, c) = q.ab;
        d3.at(2, c) = q.b2;
    }

    auto kernel = d3.kernel_basis();
    out.degree3_kernel_rank = static_cast<long>(kernel.size());
    if (kernel.empty()) {
        out.type = RealType7::S3twisted;
        return out;
    }
    if (kernel.size() > 1)
        throw structural_error("degree-3 kernel of rank >= 2 contradicts ellipticity");

    // Split off the S3 spanned by the kernel vector; the residual relations
    // are a basis of the image plane.
    std::vector<QuadraticForm> basis_forms;
    {
        // Row-reduce the images to extract a deterministic basis.
        std::vector<std::vector<Rational>> data(3, std::vector<Rational>(3));
        for (std::size_t r = 0; r < 3; ++r) {
            data[r][0] = image_forms[r].a2;
            data[r][1] = image_forms[r].ab;
            data[r][2] = image_forms[r].b2;
        }
        std::size_t lead = 0;
        for (std::size_t r = 0; r < 3 && lead < 3; ++r) {
            std::size_t piv = r;
            while (piv < 3 && data[piv][lead] == 0) ++piv;
            if (piv == 3) { --r; ++lead; continue; }
            std::swap(data[r], data[piv]);
            Rational inv = Rational(1) / data[r][lead];
            for (auto& v : data[r]) v *= inv;
            for (std::size_t i = 0; i < 3; ++i) {
                if (i == r || data[i][lead] == 0) continue;
                Rational f = data[i][lead];
                for (std::size_t c = 0; c < 3; ++c) data[i][c] -= f * data[r][c];
            }
            ++lead;
        }
        for (const auto& row : data) {
            if (row[0] == 0 && row[1] == 0 && row[2] == 0) continue;
            basis_forms.push_back({row[0], row[1], row[2]});
        }
    }
    if (basis_forms.size() != 2)
        throw structural_error("residual relation space must be a plane");

    QuadraticPair residual{basis_forms[0], basis_forms[1]};
    RealType4 res_type = classify_pair_real(residual);
    out.residual = res_type;
    out.type = res_type == RealType4::S2xS2 ? RealType7::S2xS2xS3
                                            : RealType7::S3xCP2_connected_sum_CP2;
    return out;
}

RealType7 classify7(const SullivanAlgebra& model) { return classify7_full(model).type; }

SullivanAlgebra standard_model7(RealType7 t) {
    switch (t) {
        case RealType7::S7:
            return SullivanAlgebra::make({{"x7", 7}}, {});
        case RealType7::S4xS3:
            return SullivanAlgebra::make({{"y", 4}, {"x3", 3}, {"x7", 7}}, {{"x7", "y^2"}});
        case RealType7::S2xS5:
            return SullivanAlgebra::make({{"u", 2}, {"x3", 3}, {"x5", 5}}, {{"x3", "u^2"}});
        case RealType7::CP2xS3:
            return SullivanAlgebra::make({{"u", 2}, {"x5", 5}, {"x3", 3}}, {{"x5", "u^3"}});
        case RealType7::S2xS2xS3:
            return SullivanAlgebra::make({{"a", 2}, {"b", 2}, {"x", 3}, {"y", 3}, {"z", 3}},
                                         {{"x", "a^2"}, {"y", "b^2"}});
        case RealType7::S3xCP2_connected_sum_CP2:
            return SullivanAlgebra::make({{"a", 2}, {"b", 2}, {"x", 3}, {"y", 3}, {"z", 3}},
                                         {{"x", "a^2 - b^2"}, {"y", "a*b"}});
        case RealType7::S3twisted:
            return SullivanAlgebra::make({{"a", 2}, {"b", 2}, {"x", 3}, {"y", 3}, {"z", 3}},
                                         {{"x", "a^2"}, {"y", "b^2"}, {"z", "a^2 + 2*a*b + b^2"}});
    }
    throw structural_error("unknown type");
}

SullivanAlgebra standard_model4(RealType4 t) {
    switch (t) {
        case RealType4::S4:
            return SullivanAlgebra::make({{"y", 4}, {"x7", 7}}, {{"x7", "y^2"}});
        case RealType4::CP2:
            return SullivanAlgebra::make({{"u", 2}, {"x5", 5}}, {{"x5", "u^3"}});
        case RealType4::S2xS2:
            return pair_model({{1, 0, 0}, {0, 0, 1}});
        case RealType4::CP2_connected_sum_CP2:
            return pair_model({{1, 0, -1}, {0, 1, 0}});
    }
    throw structural_error("unknown type");
}

} // namespace rht
