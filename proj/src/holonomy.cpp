#include "rht/holonomy.hpp"

#include <algorithm>
#include <sstream>

#include "rht/linalg.hpp"

namespace rht {

bool spin7_feasible(const BettiInput& input) {
    if (!input.b4_plus || !input.b4_minus)
        throw validation_error("the split b4 = b4+ + b4- is required");
    if (*input.b4_plus < 0 || *input.b4_minus < 0)
        throw validation_error("b4+ and b4- must be non-negative");
    if (*input.b4_plus + *input.b4_minus != input.b[4])
        throw validation_error("b4+ + b4- must equal b4");
    if (*input.b4_plus < 1)
        throw validation_error("b4+ >= 1 is required (the defining 4-form is self-dual)");
    return input.b[3] + *input.b4_plus == input.b[2] + 2 * *input.b4_minus + 25;
}

ObstructionCertificate spin7_elliptic_obstruction() {
    ObstructionCertificate cert;
    long min_bound = -1;
    for (long b2 = 0; b2 <= 4; ++b2) {
        long bound = 25 + b2 * (3 - b2) / 2;
        std::ostringstream s;
        s << "b2 = " << b2 << ": total rational homotopy >= 25 + b2(3-b2)/2 = " << bound;
        cert.trail.push_back({s.str(), bound});
        if (min_bound < 0 || bound < min_bound) min_bound = bound;
    }
    cert.trail.push_back({"b2 <= 4 since the even generator degrees sum to at most 8", 4});
    cert.bound = min_bound;
    cert.threshold = 8;
    cert.obstructed = min_bound > 8;
    cert.conclusion = "an elliptic 8-manifold has at most 8 homotopy generators, but the "
                      "middle-degree relation forces at least " +
                      std::to_string(min_bound) + "; no such holonomy metric exists";
    return cert;
}

ObstructionCertificate su4_elliptic_obstruction() {
    ObstructionCertificate cert;
    cert.trail.push_back({"b2 <= dim pi_2 <= 4 (even generator degrees sum to at most 8)", 4});
    cert.trail.push_back({"b3 <= dim pi_3 <= 5 (odd generator degrees sum to at most 15)", 5});
    cert.trail.push_back({"b4 <= dim pi_4 + b2(b2+1)/2 <= 2 + 10 = 12", 12});
    cert.bound = 5 + 12;
    cert.threshold = 50;
    cert.obstructed = cert.bound < cert.threshold;
    cert.trail.push_back({"b3 + b4 <= 17", 17});
    cert.trail.push_back({"the holonomy forces b3 + b4+ >= 50", 50});
    cert.conclusion = "b3 + b4 <= 17 < 50; no elliptic 8-manifold carries the holonomy";
    return cert;
}

namespace {

// Evaluates cocycles of the top degree against a generator of the top
// cohomology line: e = value * w0 + coboundary with w0 a fixed cocycle
// representative outside the coboundaries.
class TopClassEvaluator {
public:
    TopClassEvaluator(const SullivanAlgebra& model, int top) : gens_(model.generators()) {
        basis_ = basis_in_degree(gens_, top);
        for (std::size_t c = 0; c < basis_.size(); ++c) col_.emplace(basis_[c], c);

        // Coboundary vectors.
        auto below = basis_in_degree(gens_, top - 1);
        std::vector<std::vector<Rational>> boundaries;
        for (const auto& m : below) {
            Element img = model.d(Element::monomial(gens_, m, 1));
            if (img.is_zero()) continue;
            boundaries.push_back(coords(img));
        }

        // Cocycles: kernel of d restricted to the top degree.
        auto above = basis_in_degree(gens_, top + 1);
        std::map<Monomial, std::size_t> row_above;
        for (std::size_t r = 0; r < above.size(); ++r) row_above.emplace(above[r], r);
        QMatrix d_top(above.size() ? above.size() : 1, basis_.size());
        for (std::size_t c = 0; c < basis_.size(); ++c) {
            Element img = model.d(Element::monomial(gens_, basis_[c], 1));
            for (const auto& [m, cf] : img.terms()) d_top.at(row_above.at(m), c) = cf;
        }
        auto cocycles = d_top.kernel_basis();

        // A cocycle outside the coboundary span.
        QMatrix bmat(basis_.size(), boundaries.size());
        for (std::size_t c = 0; c < boundaries.size(); ++c)
            for (std::size_t r = 0; r < basis_.size(); ++r) bmat.at(r, c) = boundaries[c][r];
        std::optional<std::vector<Rational>> w0;
        for (const auto& z : cocycles) {
            std::vector<Rational> x;
            if (!bmat.solve(z, x)) {
                w0 = z;
                break;
            }
        }
        if (!w0)
            throw validation_error("top cohomology vanishes; the model is not an elliptic "
                                   "type of this dimension");

        solver_ = QMatrix(basis_.size(), 1 + boundaries.size());
        for (std::size_t r = 0; r < basis_.size(); ++r) solver_.at(r, 0) = (*w0)[r];
        for (std::size_t c = 0; c < boundaries.size(); ++c)
            for (std::size_t r = 0; r < basis_.size(); ++r)
                solver_.at(r, c + 1) = boundaries[c][r];
    }

    // Class of a top-degree cocycle as a multiple of [w0].
    Rational evaluate(const Element& e) const {
        if (e.is_zero()) return 0;
        std::vector<Rational> x;
        if (!solver_.solve(coords(e), x))
            throw structural_error("element is not a cocycle of the top degree");
        return x[0];
    }

private:
    std::vector<Rational> coords(const Element& e) const {
        std::vector<Rational> v(basis_.size(), Rational(0));
        for (const auto& [m, cf] : e.terms()) v[col_.at(m)] = cf;
        return v;
    }

    GeneratorSetPtr gens_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> col_;
    QMatrix solver_;
};

} // namespace

std::optional<LefschetzWitness> lefschetz_degenerate_witness(const SullivanAlgebra& model) {
    BettiVector betti = cohomology_dims(model, 7);
    if (betti.top_degree() != 7 || betti[7] != 1)
        throw validation_error("witness search needs a model of formal dimension 7");
    if (betti[3] < 1) throw validation_error("witness search needs b3 >= 1");

    const auto& gens = model.generators();

    // Cocycle representatives of H^2 (degree-2 generators are closed since
    // there is nothing in degree 3 below them to bound).
    std::vector<std::size_t> h2;
    for (std::size_t i = 0; i < gens->count(); ++i)
        if (gens->degree(i) == 2) h2.push_back(i);
    if (h2.empty()) return std::nullopt;

    // Cocycle representatives of H^3: kernel of d on the degree-3 span.
    std::vector<std::size_t> deg3;
    for (std::size_t i = 0; i < gens->count(); ++i)
        if (gens->degree(i) == 3) deg3.push_back(i);
    auto basis4 = basis_in_degree(gens, 4);
    std::map<Monomial, std::size_t> row4;
    for (std::size_t r = 0; r < basis4.size(); ++r) row4.emplace(basis4[r], r);
    QMatrix d3(basis4.size() ? basis4.size() : 1, deg3.size());
    for (std::size_t c = 0; c < deg3.size(); ++c) {
        Element img = model.differential().image(deg3[c]);
        for (const auto& [m, cf] : img.terms()) d3.at(row4.at(m), c) = cf;
    }
    auto omega_basis = d3.kernel_basis();
    if (omega_basis.empty())
        throw validation_error("no closed degree-3 class despite b3 >= 1");

    TopClassEvaluator top(model, 7);
    auto evaluate = [&](const Element& e) { return top.evaluate(e); };

    std::optional<LefschetzWitness> first_witness;
    for (const auto& omega_vec : omega_basis) {
        Element omega = Element::zero(gens);
        for (std::size_t c = 0; c < deg3.size(); ++c)
            if (omega_vec[c] != 0)
                omega += omega_vec[c] * Element::generator(gens, deg3[c]);

        QMatrix gram(h2.size(), h2.size());
        for (std::size_t i = 0; i < h2.size(); ++i)
            for (std::size_t j = 0; j < h2.size(); ++j)
                gram.at(i, j) = evaluate(Element::generator(gens, h2[i]) *
                                         Element::generator(gens, h2[j]) * omega);
        FormSignature sig = symmetric_signature(gram);
        if (sig.definite(h2.size())) return std::nullopt; // this class is compatible

        if (first_witness) continue;
        LefschetzWitness w;
        std::ostringstream os;
        bool firstterm = true;
        for (std::size_t c = 0; c < deg3.size(); ++c) {
            if (omega_vec[c] == 0) continue;
            if (!firstterm) os << " + ";
            if (omega_vec[c] != 1) os << to_string(omega_vec[c]) << "*";
            os << gens->name(deg3[c]);
            firstterm = false;
        }
        w.omega = os.str();
        if (sig.degenerate()) {
            w.kind = "degenerate";
            // Kernel vector of the Gram matrix.
            w.vec = gram.kernel_basis().front();
        } else if (h2.size() == 2) {
            // Indefinite 2x2 form: rational null vector exists iff the
            // discriminant is a square.
            Rational a = gram.at(0, 0), b = gram.at(0, 1), c = gram.at(1, 1);
            auto root = rational_sqrt(b * b - a * c);
            if (a == 0) {
                w.kind = "null";
                w.vec = {1, 0};
            } else if (root) {
                w.kind = "null";
                w.vec = {(-b + *root) / a, 1};
            } else {
                w.kind = "indefinite-pair";
                // Diagonal directions of opposite sign.
                w.vec = {1, 0};
                w.vec_negative = std::vector<Rational>{-b / a, 1};
            }
        } else {
            w.kind = "indefinite-pair";
            w.vec = {};
        }
        first_witness = std::move(w);
    }
    return first_witness;
}

G2CandidateReport g2_candidate_types() {
    G2CandidateReport report;
    for (RealType7 t : all_real_types7()) {
        SullivanAlgebra model = standard_model7(t);
        BettiVector betti = cohomology_dims(model, 7);
        if (betti[3] == 0) continue;
        if (t == RealType7::S2xS2xS3) {
            auto witness = lefschetz_degenerate_witness(model);
            if (witness) {
                report.excluded = t;
                std::ostringstream os;
                os << "for the product of two 2-spheres with a 3-sphere, the degree-2 class ";
                bool first = true;
                const auto& gens = model.generators();
                std::vector<std::size_t> h2;
                for (std::size_t i = 0; i < gens->count(); ++i)
                    if (gens->degree(i) == 2) h2.push_back(i);
                for (std::size_t i = 0; i < witness->vec.size(); ++i) {
                    if (witness->vec[i] == 0) continue;
                    if (!first) os << " + ";
                    if (witness->vec[i] != 1) os << to_string(witness->vec[i]) << "*";
                    os << gens->name(h2[i]);
                    first = false;
                }
                os << " satisfies a^2 * " << witness->omega
                   << " = 0, violating the strict negativity of the cup form";
                report.exclusion_witness = os.str();
                continue;
            }
        }
        report.candidates.push_back(t);
    }
    return report;
}

PQK16Report pqk16_triples() {
    PQK16Report report;
    for (long b4 = 1; b4 <= 5; ++b4) {
        for (long b6 = 0; 3 * b4 - b6 - 1 >= 0; ++b6) {
            long twice_b8 = 3 * b4 - b6 - 1;
            if (twice_b8 % 2 != 0) continue;
            long b8 = twice_b8 / 2;
            if (b4 > b8) continue; // injectivity of cupping with the defining 4-form
            report.displayed.push_back({b4, b6, b8});
        }
    }
    std::sort(report.displayed.begin(), report.displayed.end());
    for (const auto& t : report.displayed)
        if (t.b4 + t.b6 <= 4) report.final_.push_back(t);
    return report;
}

PQKHomotopy pqk16_homotopy_vector(const PQKTriple& t) {
    auto rep = pqk16_triples();
    if (std::find(rep.final_.begin(), rep.final_.end(), t) == rep.final_.end())
        throw validation_error("triple is not in the admissible list");

    PQKHomotopy out;
    HomotopyVector& c = out.vector;
    if (t.b4 > 0) c[4] = t.b4;
    if (t.b6 > 0) c[6] = t.b6;

    // Degree-8 relation count: dim Sym_2(V^4) + c8 - c7 = b8 with c8 = 0.
    long c7 = t.b4 * (t.b4 + 1) / 2 - t.b8;
    if (c7 > 0) c[7] = c7;
    // Degree-10 relation count: the products V^4 * V^6 minus b10 = b6.
    long c9 = t.b4 * t.b6 - t.b6;
    if (c9 > 0) c[9] = c9;

    long odd_count = t.b4 + t.b6 - c7 - c9; // chi_pi = 0
    long even_sum_minus = 3 * t.b4 + 5 * t.b6;
    long odd_sum = 7 * c7 + 9 * c9;
    if (odd_count == 1) {
        long deg = 16 + even_sum_minus - odd_sum;
        c[static_cast<int>(deg)] += 1;
    } else if (odd_count != 0) {
        throw structural_error("unexpected number of undetermined odd generators");
    }

    long balance = 0;
    for (const auto& [deg, count] : c)
        balance += deg % 2 == 1 ? deg * count : -(deg - 1) * count;
    out.dimension_formula = balance;
    out.balanced = balance == 16;
    return out;
}

std::vector<PQK12Case> pqk12_analysis() {
    std::vector<PQK12Case> out;
    auto balance_of = [](const HomotopyVector& v) {
        long b = 0;
        for (const auto& [deg, count] : v)
            b += deg % 2 == 1 ? deg * count : -(deg - 1) * count;
        return b;
    };

    // One generator: quaternionic projective 3-space pattern.
    PQK12Case one;
    one.c4 = 1;
    one.printed = {{4, 1}, {15, 1}};
    one.consistent = one.printed;
    one.printed_balance = balance_of(one.printed);
    one.printed_balanced = one.printed_balance == 12;
    out.push_back(one);

    // Two generators: one degree-8 relation from the defining form; the
    // published final degree does not balance the dimension formula, the
    // consistent solution is degree 11.
    PQK12Case two;
    two.c4 = 2;
    two.printed = {{4, 2}, {7, 1}, {15, 1}};
    two.consistent = {{4, 2}, {7, 1}, {11, 1}};
    two.printed_balance = balance_of(two.printed);
    two.printed_balanced = two.printed_balance == 12;
    out.push_back(two);

    // Three generators.
    PQK12Case three;
    three.c4 = 3;
    three.printed = {{4, 3}, {7, 3}};
    three.consistent = three.printed;
    three.printed_balance = balance_of(three.printed);
    three.printed_balanced = three.printed_balance == 12;
    out.push_back(three);
    return out;
}

Integer kaehler_complement_dim_first(int n, int k, int s) {
    Integer total = 0;
    for (int i = 2; i <= s; ++i) total += binomial(n - i + 1, k - 1) * binomial(n, k);
    return total;
}

Integer kaehler_complement_dim_second(int n, int k, int s) {
    Integer total = 0;
    for (int i = 2; i <= s; ++i)
        total += binomial(n - i / 2, k - (i % 2)) * binomial(n - (i - 1) / 2, k - ((i - 1) % 2));
    return total;
}

Integer pqk_complement_dim(int four_n, int k, int s) {
    Integer total = 0;
    for (int i = 2; i <= s; ++i) total += binomial(four_n - i + 1, k - 1);
    return total;
}

Integer formality_bound(const BoundQuery& q) {
    if (q.k <= 0) throw validation_error("the Betti index must be positive");

    if (q.manifold_class == ManifoldClass::kaehler_trivial_hodge) {
        if (q.dim % 2 != 0) throw validation_error("complex manifolds have even dimension");
        int n = q.dim / 2;
        int k = q.k;
        if (2 * k > n)
            throw validation_error("the estimates cover 2k <= n; use Poincare duality above "
                                   "the middle");
        int floor_nk = n / k;
        int s = floor_nk - (floor_nk % 2);
        switch (q.estimate) {
            case EstimateKind::first:
                return binomial(n, k) * binomial(n, k) - kaehler_complement_dim_first(n, k, s);
            case EstimateKind::second:
                return binomial(n, k) * binomial(n, k) - kaehler_complement_dim_second(n, k, s);
            case EstimateKind::special_b2:
                if (k != 1) throw validation_error("the improved estimate concerns b2");
                return Integer(n - 1);
            case EstimateKind::special_bp: {
                int p = 2 * k;
                if (p % 2 != 0 || n % p != 0)
                    throw validation_error("the divisibility estimate needs n divisible by p");
                return binomial(n - 1, p / 2 - 1) * binomial(n, p / 2);
            }
            case EstimateKind::structural_b2:
                throw validation_error("no structural b2 cap in the Kaehler case");
        }
    } else {
        if (q.dim % 4 != 0) throw validation_error("quaternionic manifolds have dimension 4n");
        int four_n = q.dim;
        int p = 2 * q.k;
        if (p > four_n / 2)
            throw validation_error("the estimates cover p <= 2n; use Poincare duality above "
                                   "the middle");
        int floor_np = four_n / p;
        int s = floor_np - (floor_np % 2);
        switch (q.estimate) {
            case EstimateKind::first:
                return binomial(four_n, p) - pqk_complement_dim(four_n, p, s);
            case EstimateKind::special_bp: {
                int two_n = four_n / 2;
                if (two_n % p != 0)
                    throw validation_error("the divisibility estimate needs 2n divisible by p");
                return binomial(four_n - 1, p - 1);
            }
            case EstimateKind::structural_b2:
                if (p != 2) throw validation_error("the structural cap concerns b2");
                return Integer(2);
            default:
                throw validation_error("estimate not available for the quaternionic case");
        }
    }
    throw structural_error("unreachable");
}

std::vector<BoundComparisonCell> bound_table_comparison() {
    struct RawCell {
        int dim;
        int idx;
        ManifoldClass cls;
        long value;
    };
    const std::vector<RawCell> table = {
        {4, 2, ManifoldClass::kaehler_trivial_hodge, 3},
        {6, 2, ManifoldClass::kaehler_trivial_hodge, 5},
        {8, 2, ManifoldClass::kaehler_trivial_hodge, 7},
        {8, 4, ManifoldClass::kaehler_trivial_hodge, 18},
        {10, 2, ManifoldClass::kaehler_trivial_hodge, 9},
        {10, 4, ManifoldClass::kaehler_trivial_hodge, 60},
        {12, 2, ManifoldClass::kaehler_trivial_hodge, 11},
        {12, 4, ManifoldClass::kaehler_trivial_hodge, 150},
        {12, 6, ManifoldClass::kaehler_trivial_hodge, 200},
        {12, 2, ManifoldClass::pqk, 2},
        {12, 4, ManifoldClass::pqk, 165},
        {12, 6, ManifoldClass::pqk, 462},
        {14, 2, ManifoldClass::kaehler_trivial_hodge, 13},
        {14, 4, ManifoldClass::kaehler_trivial_hodge, 315},
        {14, 6, ManifoldClass::kaehler_trivial_hodge, 700},
        {16, 2, ManifoldClass::kaehler_trivial_hodge, 15},
        {16, 4, ManifoldClass::kaehler_trivial_hodge, 196},
        {16, 6, ManifoldClass::kaehler_trivial_hodge, 1960},
        {16, 8, ManifoldClass::kaehler_trivial_hodge, 2450},
        {16, 2, ManifoldClass::pqk, 2},
        {16, 4, ManifoldClass::pqk, 455},
        {16, 6, ManifoldClass::pqk, 5005},
        {16, 8, ManifoldClass::pqk, 6435},
    };

    std::vector<BoundComparisonCell> out;
    for (const auto& raw : table) {
        BoundComparisonCell cell;
        cell.dim = raw.dim;
        cell.betti_index = raw.idx;
        cell.manifold_class = raw.cls;
        cell.table_value = raw.value;
        cell.torus_value = binomial(raw.dim, raw.idx);

        BoundQuery q;
        q.manifold_class = raw.cls;
        q.dim = raw.dim;
        q.k = raw.idx / 2;

        auto attempt = [&](EstimateKind kind, const std::string& name) {
            try {
                q.estimate = kind;
                cell.estimates[name] = formality_bound(q);
            } catch (const validation_error&) {
            }
        };
        if (raw.cls == ManifoldClass::kaehler_trivial_hodge) {
            attempt(EstimateKind::first, "first");
            attempt(EstimateKind::second, "second");
            attempt(EstimateKind::special_b2, "special_b2");
            attempt(EstimateKind::special_bp, "special_bp");
        } else {
            attempt(EstimateKind::first, "main");
            attempt(EstimateKind::special_bp, "special_bp");
            attempt(EstimateKind::structural_b2, "structural_b2");
        }
        for (const auto& [name, value] : cell.estimates) {
            if (value == cell.table_value) {
                cell.matched = true;
                cell.matching_estimates.push_back(name);
            }
        }
        out.push_back(std::move(cell));
    }
    return out;
}

FormalMetricCaps formal_metric_constants(SpecialHolonomy h) {
    FormalMetricCaps caps;
    if (h == SpecialHolonomy::G2) {
        caps.caps = {{"b2", 14}, {"b3", 28}};
    } else {
        caps.caps = {{"b2", 21}, {"b3", 48}, {"b4", 63}};
    }
    return caps;
}

} // namespace rht
