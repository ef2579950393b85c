#include "rht/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rht/holonomy.hpp"
#include "rht/json_io.hpp"
#include "rht/polytext.hpp"

namespace rht::cli {

namespace {

Json signature_to_json(const HomotopySignature& sig) {
    return Json{{"even", sig.even_degrees}, {"odd", sig.odd_degrees}};
}

Json constraints_to_json(const ConstraintReport& r) {
    Json j;
    j["dimension"] = r.dimension;
    j["odd_degree_sum"] = {{"value", r.odd_degree_sum}, {"ok", r.odd_sum_ok}};
    j["even_degree_sum"] = {{"value", r.even_degree_sum}, {"ok", r.even_sum_ok}};
    j["total_rank"] = {{"value", r.total_rank}, {"ok", r.total_rank_ok}};
    j["dimension_formula"] = {{"value", r.dimension_formula}, {"ok", r.dimension_formula_ok}};
    j["homotopy_euler"] = {{"value", r.chi_pi}, {"ok", r.euler_ok}};
    j["all_ok"] = r.all_ok();
    return j;
}

Json classification7_to_json(const Classification7& c) {
    Json evidence;
    evidence["signature"] = signature_to_json(c.signature);
    if (c.b4 >= 0) evidence["b4"] = c.b4;
    if (c.degree3_kernel_rank >= 0) evidence["degree3_kernel_rank"] = c.degree3_kernel_rank;
    if (c.residual) evidence["residual_4dim_type"] = to_string(*c.residual);
    return Json{{"type", to_string(c.type)}, {"evidence", evidence}};
}

Json trail_to_json(const std::vector<TrailEntry>& trail) {
    Json arr = Json::array();
    for (const auto& t : trail)
        arr.push_back({{"rule", t.rule}, {"detail", t.detail}, {"provenance", t.provenance}});
    return arr;
}

Json names_of(const std::vector<LieGroupDescriptor>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(display(f));
    return arr;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw validation_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<long> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw validation_error("expected comma-separated integers for " + flag);
        }
    }
    if (out.empty()) throw validation_error("expected comma-separated integers for " + flag);
    return out;
}

QuadraticPair parse_pair(const std::string& text, const std::string& flag) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw validation_error(flag + " expects two forms separated by ';'");
    auto gens = make_generators({{"a", 2}, {"b", 2}});
    auto as_form = [&](const std::string& poly) {
        Element e = parse_element(poly, gens);
        QuadraticForm q{0, 0, 0};
        for (const auto& [mono, coeff] : e.terms()) {
            auto ea = mono.exponent_of(0), eb = mono.exponent_of(1);
            if (ea == 2 && eb == 0) q.a2 = coeff;
            else if (ea == 1 && eb == 1) q.ab = coeff;
            else if (ea == 0 && eb == 2) q.b2 = coeff;
            else throw validation_error(flag + ": form must be quadratic in a, b");
        }
        return q;
    };
    return {as_form(text.substr(0, semi)), as_form(text.substr(semi + 1))};
}

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(args, out, err);
    } catch (const validation_error& e) {
        emit(err, Json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(err, Json{{"error", std::string("internal error: ") + e.what()}});
        return 1;
    }
}

namespace {

void cmd_classify_elliptic(int dim, std::ostream& out) {
    Json records = Json::array();
    if (dim == 7) {
        for (RealType7 t : all_real_types7()) {
            SullivanAlgebra model = standard_model7(t);
            Classification7 c = classify7_full(model);
            Json rec = classification7_to_json(c);
            rec["example_model"] = model_to_json(model);
            records.push_back(rec);
        }
    } else if (dim == 4) {
        for (RealType4 t : all_real_types4()) {
            SullivanAlgebra model = standard_model4(t);
            Json rec;
            rec["type"] = to_string(t);
            HomotopySignature sig = signature_of(model);
            Json evidence;
            evidence["signature"] = signature_to_json(sig);
            if (sig.even_degrees == std::vector<int>{2, 2}) {
                // Recover the relation pair and its intersection form.
                const auto& gens = model.generators();
                auto form_of = [&](std::size_t i) {
                    QuadraticForm q{0, 0, 0};
                    for (const auto& [m, cf] : model.differential().image(i).terms()) {
                        auto ea = m.exponent_of(0), eb = m.exponent_of(1);
                        if (ea == 2) q.a2 = cf;
                        else if (eb == 2) q.b2 = cf;
                        else q.ab = cf;
                    }
                    return q;
                };
                std::vector<std::size_t> odd;
                for (std::size_t i = 0; i < gens->count(); ++i)
                    if (gens->degree(i) == 3) odd.push_back(i);
                QuadraticPair pair{form_of(odd[0]), form_of(odd[1])};
                auto cls = classify_pair_real_full(pair);
                evidence["intersection_form_signature"] = cls.signature.value();
            }
            rec["evidence"] = evidence;
            rec["example_model"] = model_to_json(model);
            records.push_back(rec);
        }
    } else {
        throw validation_error("supported dimensions: 4 and 7");
    }
    emit(out, Json{{"dimension", dim}, {"types", records}});
}

void cmd_signature_enumerate(int dim, const std::string& stage, std::ostream& out) {
    EnumerationStage st =
        stage == "arithmetic" ? EnumerationStage::arithmetic : EnumerationStage::refined;
    SignatureEnumeration e = enumerate_elliptic_signatures(dim, st);
    Json sigs = Json::array();
    for (const auto& s : e.signatures) {
        Json rec = signature_to_json(s);
        rec["formal_dimension"] = formal_dimension(s);
        rec["constraints"] = constraints_to_json(check_elliptic_constraints(s, dim));
        sigs.push_back(rec);
    }
    Json elim = Json::array();
    for (const auto& r : e.eliminated) {
        elim.push_back({{"signature", signature_to_json(r.signature)},
                        {"rule", r.rule},
                        {"reason", r.reason}});
    }
    emit(out, Json{{"dimension", dim},
                   {"stage", st == EnumerationStage::arithmetic ? "arithmetic" : "refined"},
                   {"paper_verified", e.paper_verified},
                   {"signatures", sigs},
                   {"eliminated", elim}});
}

void cmd_model_classify(const std::string& input, std::ostream& out) {
    SullivanAlgebra model = model_from_json(load_json_file(input));
    SullivanAlgebra reduced = model.minimal() ? model : eliminate_contractible_pairs(model);
    HomotopySignature sig = signature_of(reduced);
    int dim = formal_dimension(sig);
    if (dim == 7) {
        Json rec = classification7_to_json(classify7_full(reduced));
        rec["formal_dimension"] = 7;
        emit(out, rec);
        return;
    }
    if (dim == 4) {
        const auto& gens = reduced.generators();
        Json rec;
        if (sig.even_degrees.empty() || sig == HomotopySignature{{4}, {7}}) {
            rec["type"] = to_string(RealType4::S4);
        } else if (sig == HomotopySignature{{2}, {5}}) {
            rec["type"] = to_string(RealType4::CP2);
        } else if (sig == HomotopySignature{{2, 2}, {3, 3}}) {
            std::vector<std::size_t> odd, even;
            for (std::size_t i = 0; i < gens->count(); ++i)
                (gens->degree(i) % 2 ? odd : even).push_back(i);
            auto form_of = [&](std::size_t i) {
                QuadraticForm q{0, 0, 0};
                for (const auto& [m, cf] : reduced.differential().image(i).terms()) {
                    auto ea = m.exponent_of(static_cast<std::uint32_t>(even[0]));
                    auto eb = m.exponent_of(static_cast<std::uint32_t>(even[1]));
                    if (ea == 2) q.a2 = cf;
                    else if (eb == 2) q.b2 = cf;
                    else if (ea == 1 && eb == 1) q.ab = cf;
                }
                return q;
            };
            QuadraticPair pair{form_of(odd[0]), form_of(odd[1])};
            auto cls = classify_pair_real_full(pair);
            rec["type"] = to_string(cls.type);
            rec["evidence"] = {{"intersection_form_signature", cls.signature.value()}};
        } else {
            throw validation_error("signature " + sig.to_string() +
                                   " is not an elliptic 4-type");
        }
        rec["formal_dimension"] = 4;
        emit(out, rec);
        return;
    }
    throw validation_error("model has formal dimension " + std::to_string(dim) +
                           "; classification covers 4 and 7");
}

void cmd_model_cohomology(const std::string& input, int max_degree, std::ostream& out) {
    SullivanAlgebra model = model_from_json(load_json_file(input));
    BettiVector betti = cohomology_dims(model, max_degree);
    emit(out, Json{{"max_degree", max_degree}, {"betti", betti_to_json(betti)}});
}

void cmd_iso_test(const std::string& s_text, const std::string& t_text,
                  const std::string& field, std::ostream& out) {
    Rational s = parse_rational(s_text), t = parse_rational(t_text);
    IsoResult r = iso_case31(s, t, field == "R" ? FieldMode::R : FieldMode::Q);
    Json j{{"s", to_string(s)}, {"t", to_string(t)}, {"field", field},
           {"isomorphic", r.isomorphic}, {"criterion", r.criterion}};
    if (r.witness_k3) j["witness_k3"] = to_string(*r.witness_k3);
    emit(out, j);
}

void cmd_iso_family(int count, std::ostream& out) {
    auto family = generate_rational_family(count);
    auto gens = make_generators({{"a", 2}, {"b", 2}});
    Json pairs = Json::array();
    for (const auto& p : family) {
        Element q1 = p.q1.a2 * (Element::generator(gens, 0) * Element::generator(gens, 0)) +
                     p.q1.ab * (Element::generator(gens, 0) * Element::generator(gens, 1)) +
                     p.q1.b2 * (Element::generator(gens, 1) * Element::generator(gens, 1));
        pairs.push_back({{"q1", format_element(q1)},
                         {"q2", "a*b"},
                         {"parameter", to_string(p.q1.b2)},
                         {"real_type", to_string(classify_pair_real(p))}});
    }
    int distinct = 0, total = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            ++total;
            if (!iso_case31(family[i].q1.b2, family[j].q1.b2, FieldMode::Q).isomorphic)
                ++distinct;
        }
    emit(out, Json{{"count", count},
                   {"pairs", pairs},
                   {"pairwise_checked", total},
                   {"pairwise_rational_distinct", distinct == total}});
}

void cmd_iso_search(const std::string& left, const std::string& right, int height,
                    std::ostream& out) {
    QuadraticPair lhs = parse_pair(left, "--left");
    QuadraticPair rhs = parse_pair(right, "--right");
    GeneralIsoResult r = iso_general(lhs, rhs, height);
    Json j{{"decided", r.decided}, {"isomorphic", r.decided ? Json(r.isomorphic) : Json()},
           {"method", r.method}};
    if (r.matrix) {
        j["matrix"] = {to_string((*r.matrix)[0]), to_string((*r.matrix)[1]),
                       to_string((*r.matrix)[2]), to_string((*r.matrix)[3])};
    }
    emit(out, j);
}

void cmd_biquotient_enumerate(const std::string& stage, std::ostream& out) {
    EnumerationStage st =
        stage == "arithmetic" ? EnumerationStage::arithmetic : EnumerationStage::refined;
    BiquotientEnumeration e = enumerate_pairs(st);
    Json j;
    j["stage"] = stage;
    Json arith = Json::array();
    for (const auto& p : e.arithmetic)
        arith.push_back({{"bucket", to_string(p.bucket)},
                         {"g", names_of(p.g_factors)},
                         {"h", names_of(p.h_factors)},
                         {"display", p.display()},
                         {"case1", p.case1_possible},
                         {"case2", p.case2_possible}});
    j["arithmetic"] = arith;
    if (st == EnumerationStage::refined) {
        Json rows = Json::array();
        for (const auto& r : e.refined)
            rows.push_back({{"type", to_string(r.type)},
                            {"display", r.display},
                            {"g", names_of(r.g_factors)},
                            {"h", names_of(r.h_factors)},
                            {"trail", trail_to_json(r.trail)}});
        j["refined"] = rows;
        Json elim = Json::array();
        for (const auto& r : e.eliminated)
            elim.push_back({{"bucket", to_string(r.pair.bucket)},
                            {"display", r.pair.display()},
                            {"rule", r.rule.rule},
                            {"detail", r.rule.detail},
                            {"provenance", r.rule.provenance}});
        j["eliminated"] = elim;
    }
    emit(out, j);
}

void cmd_biquotient_model(const std::string& input, const std::string& convention,
                          int max_degree, std::ostream& out) {
    Json spec_json = load_json_file(input);
    if (!convention.empty()) spec_json["convention"] = convention;
    BiquotientSpec spec = biquotient_spec_from_json(spec_json);
    BuiltModel built = build_model(spec);

    Json j;
    j["spec"] = biquotient_spec_to_json(spec);
    j["model"] = model_to_json(built.model);
    if (built.su3_circle_torsion_order)
        j["su3_circle_torsion_order"] = built.su3_circle_torsion_order->str();

    SullivanAlgebra reduced = eliminate_contractible_pairs(built.model);
    j["reduced_model"] = model_to_json(reduced);
    if (max_degree >= 0) j["betti"] = betti_to_json(cohomology_dims(built.model, max_degree));

    long dim = 0;
    for (const auto& g : spec.g_factors) dim += dimension(g);
    for (const auto& hf : spec.h_factors)
        dim -= std::holds_alternative<CircleFactor>(hf)
                   ? 1
                   : dimension(std::get<SimpleFactor>(hf).grp);
    j["dimension"] = dim;
    if (dim == 7) {
        try {
            j["classification"] = classification7_to_json(detect_type_full(spec));
        } catch (const validation_error& e) {
            j["classification_error"] = e.what();
        }
    }
    emit(out, j);
}

void cmd_biquotient_locus(const std::string& input, std::ostream& out) {
    BiquotientSpec spec = biquotient_spec_from_json(load_json_file(input));
    spec.convention = ModelConvention::paper_su3;
    TrivialityLocus locus = circle_triviality_locus(spec);
    emit(out, Json{{"locus", locus.locus},
                   {"on_locus", locus.on_locus},
                   {"annotation", locus.annotation}});
}

void cmd_holonomy_check(const std::string& type, const std::string& betti,
                        const std::string& split, std::ostream& out) {
    if (type == "spin7") {
        if (!betti.empty() || !split.empty()) {
            if (betti.empty() || split.empty())
                throw validation_error("spin7 feasibility needs both --betti b2,b3 and "
                                       "--b4-split P,M");
            auto b = parse_int_list(betti, "--betti");
            if (b.size() != 2) throw validation_error("--betti expects b2,b3");
            auto pm = parse_int_list(split, "--b4-split");
            if (pm.size() != 2) throw validation_error("--b4-split expects P,M");
            BettiInput input;
            long b4 = pm[0] + pm[1];
            input.b = BettiVector{{1, 0, b[0], b[1], b4, b[1], b[0], 0, 1}};
            input.b4_plus = pm[0];
            input.b4_minus = pm[1];
            bool ok = spin7_feasible(input);
            emit(out, Json{{"relation", "b3 + b4_plus = b2 + 2*b4_minus + 25"},
                           {"b2", b[0]},
                           {"b3", b[1]},
                           {"b4_plus", pm[0]},
                           {"b4_minus", pm[1]},
                           {"feasible", ok}});
            return;
        }
        auto cert = spin7_elliptic_obstruction();
        Json trail = Json::array();
        for (const auto& s : cert.trail) trail.push_back({{"step", s.statement}, {"value", s.value}});
        emit(out, Json{{"holonomy", "spin7"},
                       {"bound", cert.bound},
                       {"threshold", cert.threshold},
                       {"obstructed", cert.obstructed},
                       {"conclusion", cert.conclusion},
                       {"trail", trail}});
        return;
    }
    if (type == "su4") {
        auto cert = su4_elliptic_obstruction();
        Json trail = Json::array();
        for (const auto& s : cert.trail) trail.push_back({{"step", s.statement}, {"value", s.value}});
        emit(out, Json{{"holonomy", "su4"},
                       {"bound", cert.bound},
                       {"threshold", cert.threshold},
                       {"obstructed", cert.obstructed},
                       {"conclusion", cert.conclusion},
                       {"trail", trail}});
        return;
    }
    if (type == "g2") {
        auto report = g2_candidate_types();
        Json cands = Json::array();
        for (RealType7 t : report.candidates) cands.push_back(to_string(t));
        emit(out, Json{{"holonomy", "g2"},
                       {"candidates", cands},
                       {"excluded", to_string(report.excluded)},
                       {"witness", report.exclusion_witness}});
        return;
    }
    throw validation_error("unknown holonomy type: " + type);
}

void cmd_holonomy_constants(const std::string& type, std::ostream& out) {
    SpecialHolonomy h;
    if (type == "g2") h = SpecialHolonomy::G2;
    else if (type == "spin7") h = SpecialHolonomy::Spin7;
    else throw validation_error("unknown holonomy type: " + type);
    auto caps = formal_metric_constants(h);
    Json j;
    for (const auto& [name, value] : caps.caps) j[name] = value;
    emit(out, Json{{"holonomy", type}, {"caps", j}});
}

void cmd_bounds(const std::string& cls, int dim, int k, const std::string& estimate,
                std::ostream& out) {
    BoundQuery q;
    q.manifold_class =
        cls == "pqk" ? ManifoldClass::pqk : ManifoldClass::kaehler_trivial_hodge;
    q.dim = dim;
    q.k = k;

    auto kind_of = [&](const std::string& name) {
        if (name == "first" || name == "main") return EstimateKind::first;
        if (name == "second") return EstimateKind::second;
        if (name == "special" || name == "special-bp") return EstimateKind::special_bp;
        if (name == "special-b2") return EstimateKind::special_b2;
        if (name == "structural-b2") return EstimateKind::structural_b2;
        throw validation_error("unknown estimate: " + name);
    };
    q.estimate = kind_of(estimate.empty() ? "first" : estimate);
    Integer bound = formality_bound(q);

    Json all = Json::object();
    for (const auto& [name, kind] :
         std::vector<std::pair<std::string, EstimateKind>>{
             {"first", EstimateKind::first},
             {"second", EstimateKind::second},
             {"special_b2", EstimateKind::special_b2},
             {"special_bp", EstimateKind::special_bp},
             {"structural_b2", EstimateKind::structural_b2}}) {
        try {
            BoundQuery qq = q;
            qq.estimate = kind;
            all[name] = formality_bound(qq).str();
        } catch (const validation_error&) {
        }
    }
    emit(out, Json{{"class", cls},
                   {"dim", dim},
                   {"betti_index", 2 * k},
                   {"estimate", estimate.empty() ? "first" : estimate},
                   {"bound", bound.str()},
                   {"all_estimates", all},
                   {"torus_bound", binomial(dim, 2 * k).str()}});
}

void cmd_bounds_table(std::ostream& out) {
    auto cells = bound_table_comparison();
    Json rows = Json::array();
    int flagged = 0;
    for (const auto& c : cells) {
        Json est = Json::object();
        for (const auto& [name, v] : c.estimates) est[name] = v.str();
        if (!c.matched) ++flagged;
        rows.push_back(
            {{"dim", c.dim},
             {"betti_index", c.betti_index},
             {"class",
              c.manifold_class == ManifoldClass::pqk ? "pqk" : "kaehler_trivial_hodge"},
             {"table_value", c.table_value.str()},
             {"estimates", est},
             {"torus", c.torus_value.str()},
             {"matched", c.matched},
             {"matching_estimates", c.matching_estimates}});
    }
    emit(out, Json{{"cells", rows}, {"flagged", flagged}});
}

void cmd_pqk(int dim, std::ostream& out) {
    if (dim == 16) {
        auto rep = pqk16_triples();
        Json displayed = Json::array(), final_list = Json::array();
        for (const auto& t : rep.displayed) displayed.push_back({t.b4, t.b6, t.b8});
        Json vectors = Json::object();
        for (const auto& t : rep.final_) {
            final_list.push_back({t.b4, t.b6, t.b8});
            auto h = pqk16_homotopy_vector(t);
            Json v = Json::object();
            for (const auto& [deg, count] : h.vector) v["c" + std::to_string(deg)] = count;
            std::string key = "(" + std::to_string(t.b4) + "," + std::to_string(t.b6) + "," +
                              std::to_string(t.b8) + ")";
            vectors[key] = {{"vector", v},
                            {"dimension_formula", h.dimension_formula},
                            {"balanced", h.balanced}};
        }
        emit(out, Json{{"dimension", 16},
                       {"displayed", displayed},
                       {"final", final_list},
                       {"homotopy_vectors", vectors}});
        return;
    }
    if (dim == 12) {
        Json cases = Json::array();
        for (const auto& c : pqk12_analysis()) {
            Json printed = Json::object(), consistent = Json::object();
            for (const auto& [deg, count] : c.printed)
                printed["c" + std::to_string(deg)] = count;
            for (const auto& [deg, count] : c.consistent)
                consistent["c" + std::to_string(deg)] = count;
            cases.push_back({{"c4", c.c4},
                             {"published", printed},
                             {"published_dimension_formula", c.printed_balance},
                             {"published_balanced", c.printed_balanced},
                             {"consistent", consistent}});
        }
        emit(out, Json{{"dimension", 12}, {"cases", cases}});
        return;
    }
    throw validation_error("supported dimensions: 12 and 16");
}

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for rational homotopy classification"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (evaluation is deterministic)")
        ->envname("RHT_THREADS");
    bool json_flag = false, table_flag = false;
    app.add_flag("--json", json_flag, "machine-readable output (default)");
    app.add_flag("--table", table_flag, "accepted for compatibility; output stays JSON");

    // classify elliptic --dim {4|7}
    auto* classify = app.add_subcommand("classify", "classification commands");
    auto* elliptic = classify->add_subcommand("elliptic", "real types of elliptic spaces");
    int cl_dim = 7;
    elliptic->add_option("--dim", cl_dim, "dimension")->required();

    // signature enumerate --dim N [--stage arithmetic]
    auto* signature = app.add_subcommand("signature", "homotopy signature commands");
    auto* sig_enum = signature->add_subcommand("enumerate", "admissible signatures");
    int sig_dim = 7;
    std::string sig_stage = "refined";
    sig_enum->add_option("--dim", sig_dim, "dimension")->required();
    sig_enum->add_option("--stage", sig_stage, "arithmetic or refined");

    // model classify / cohomology
    auto* model = app.add_subcommand("model", "Sullivan model commands");
    auto* model_classify = model->add_subcommand("classify", "classify a model");
    std::string mc_input;
    model_classify->add_option("--input", mc_input, "model JSON file")->required();
    auto* model_cohomology = model->add_subcommand("cohomology", "Betti numbers");
    std::string mh_input;
    int mh_max = 7;
    model_cohomology->add_option("--input", mh_input, "model JSON file")->required();
    model_cohomology->add_option("--max-degree", mh_max, "top degree")->required();

    // iso test / family / search
    auto* iso = app.add_subcommand("iso", "rational/real isomorphism commands");
    auto* iso_test = iso->add_subcommand("test", "the (a^2 + s b^2, ab) family");
    std::string iso_s, iso_t, iso_field = "Q";
    iso_test->add_option("--s", iso_s, "first parameter")->required();
    iso_test->add_option("--t", iso_t, "second parameter")->required();
    iso_test->add_option("--field", iso_field, "Q or R");
    auto* iso_family = iso->add_subcommand("family", "prime-parameter family");
    int family_count = 2;
    iso_family->add_option("--count", family_count, "number of members")->required();
    auto* iso_search = iso->add_subcommand("search", "general pair comparison");
    std::string search_left, search_right;
    int search_height = 6;
    iso_search->add_option("--left", search_left, "pair \"q1;q2\"")->required();
    iso_search->add_option("--right", search_right, "pair \"q1;q2\"")->required();
    iso_search->add_option("--height", search_height, "search height bound");

    // biquotient enumerate / model / locus
    auto* biq = app.add_subcommand("biquotient", "biquotient commands");
    auto* biq_enum = biq->add_subcommand("enumerate", "candidate pairs (G, H)");
    std::string biq_stage = "refined";
    biq_enum->add_option("--stage", biq_stage, "arithmetic or refined");
    auto* biq_model = biq->add_subcommand("model", "Sullivan model from weight data");
    std::string bm_input, bm_convention;
    int bm_max = -1;
    biq_model->add_option("--input", bm_input, "spec JSON file")->required();
    biq_model->add_option("--convention", bm_convention,
                          "pullback-difference or paper-su3");
    biq_model->add_option("--max-degree", bm_max, "also report Betti numbers");
    auto* biq_locus = biq->add_subcommand("locus", "degenerate-differential locus");
    std::string bl_input;
    biq_locus->add_option("--input", bl_input, "spec JSON file")->required();

    // holonomy check / constants
    auto* holonomy = app.add_subcommand("holonomy", "holonomy obstructions");
    auto* hol_check = holonomy->add_subcommand("check", "feasibility and obstructions");
    std::string hol_type, hol_betti, hol_split;
    hol_check->add_option("--type", hol_type, "spin7, su4 or g2")->required();
    hol_check->add_option("--betti", hol_betti, "b2,b3 for the spin7 relation");
    hol_check->add_option("--b4-split", hol_split, "b4 = P,M split");
    auto* hol_const = holonomy->add_subcommand("constants", "formal-metric Betti caps");
    std::string hc_type;
    hol_const->add_option("--type", hc_type, "g2 or spin7")->required();

    // bounds [--class ... | table]
    auto* bounds = app.add_subcommand("bounds", "geometric-formality Betti bounds");
    auto* bounds_table = bounds->add_subcommand("table", "compare against the published table");
    std::string bd_class = "kaehler";
    int bd_dim = 0, bd_k = 0;
    std::string bd_estimate;
    bounds->add_option("--class", bd_class, "kaehler or pqk");
    bounds->add_option("--dim", bd_dim, "real dimension");
    bounds->add_option("--k", bd_k, "bound on the Betti number b_{2k}");
    bounds->add_option("--estimate", bd_estimate, "first, second or special");

    // pqk triples --dim {12|16}
    auto* pqk = app.add_subcommand("pqk", "positive quaternionic enumeration");
    auto* pqk_triples_cmd = pqk->add_subcommand("triples", "Betti triples and homotopy");
    int pqk_dim = 16;
    pqk_triples_cmd->add_option("--dim", pqk_dim, "12 or 16")->required();

    // facts
    app.add_subcommand("facts", "group data, equality quotients and refinement rules");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        if (code == 0) {
            out << msg.str();
            return 0;
        }
        err << msg.str();
        return 2;
    }
    (void)threads;
    (void)json_flag;
    (void)table_flag;

    if (elliptic->parsed()) cmd_classify_elliptic(cl_dim, out);
    else if (sig_enum->parsed()) cmd_signature_enumerate(sig_dim, sig_stage, out);
    else if (model_classify->parsed()) cmd_model_classify(mc_input, out);
    else if (model_cohomology->parsed()) cmd_model_cohomology(mh_input, mh_max, out);
    else if (iso_test->parsed()) cmd_iso_test(iso_s, iso_t, iso_field, out);
    else if (iso_family->parsed()) cmd_iso_family(family_count, out);
    else if (iso_search->parsed()) cmd_iso_search(search_left, search_right, search_height, out);
    else if (biq_enum->parsed()) cmd_biquotient_enumerate(biq_stage, out);
    else if (biq_model->parsed()) cmd_biquotient_model(bm_input, bm_convention, bm_max, out);
    else if (biq_locus->parsed()) cmd_biquotient_locus(bl_input, out);
    else if (hol_check->parsed()) cmd_holonomy_check(hol_type, hol_betti, hol_split, out);
    else if (hol_const->parsed()) cmd_holonomy_constants(hc_type, out);
    else if (bounds_table->parsed()) cmd_bounds_table(out);
    else if (pqk_triples_cmd->parsed()) cmd_pqk(pqk_dim, out);
    else if (bounds->parsed()) {
        if (bd_dim <= 0 || bd_k <= 0)
            throw validation_error("bounds needs --dim and --k");
        cmd_bounds(bd_class == "pqk" ? "pqk" : "kaehler_trivial_hodge", bd_dim, bd_k,
                   bd_estimate, out);
    } else if (app.get_subcommand("facts")->parsed()) {
        out << liegroups_data_json();
    } else if (classify->parsed() || signature->parsed() || model->parsed() || iso->parsed() ||
               biq->parsed() || holonomy->parsed() || pqk->parsed()) {
        throw validation_error("missing subcommand; see --help");
    }
    return 0;
}

} // namespace

} // namespace rht::cli
