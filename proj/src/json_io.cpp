#include "rht/json_io.hpp"

#include "rht/polytext.hpp"

namespace rht {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
    throw validation_error("schema violation at '" + field + "': " + what);
}

Family family_from_string(const std::string& s, const std::string& field) {
    if (s == "SU") return Family::SU;
    if (s == "SO") return Family::SO;
    if (s == "Sp") return Family::Sp;
    if (s == "G2") return Family::G2;
    if (s == "F4") return Family::F4;
    if (s == "E6") return Family::E6;
    if (s == "E7") return Family::E7;
    if (s == "E8") return Family::E8;
    if (s == "Circle" || s == "S^1") return Family::Circle;
    schema_error(field, "unknown family '" + s + "'");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::SU: return "SU";
        case Family::SO: return "SO";
        case Family::Sp: return "Sp";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::Circle: return "Circle";
    }
    return "?";
}

} // namespace

Json model_to_json(const SullivanAlgebra& model) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : model.generators()->generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    j["generators"] = gens;
    Json diff = Json::object();
    for (std::size_t i = 0; i < model.generators()->count(); ++i) {
        const Element& img = model.differential().image(i);
        if (!img.is_zero()) diff[model.generators()->name(i)] = format_element(img);
    }
    j["differential"] = diff;
    j["minimal"] = model.minimal();
    return j;
}

SullivanAlgebra model_from_json(const Json& j) {
    if (!j.is_object()) schema_error("", "expected an object");
    if (!j.contains("generators") || !j["generators"].is_array())
        schema_error("generators", "expected an array");

    std::vector<Generator> gens;
    std::size_t idx = 0;
    for (const auto& g : j["generators"]) {
        std::string field = "generators[" + std::to_string(idx++) + "]";
        if (!g.is_object() || !g.contains("name") || !g.contains("degree"))
            schema_error(field, "expected {\"name\", \"degree\"}");
        if (!g["name"].is_string()) schema_error(field + ".name", "expected a string");
        if (!g["degree"].is_number_integer())
            schema_error(field + ".degree", "expected an integer");
        gens.push_back({g["name"].get<std::string>(), g["degree"].get<int>()});
    }

    std::map<std::string, std::string> diff;
    if (j.contains("differential")) {
        if (!j["differential"].is_object())
            schema_error("differential", "expected an object of polynomial strings");
        for (const auto& [name, poly] : j["differential"].items()) {
            if (!poly.is_string())
                schema_error("differential." + name, "expected a polynomial string");
            diff[name] = poly.get<std::string>();
        }
    }

    SullivanAlgebra model = SullivanAlgebra::make(std::move(gens), std::move(diff));
    if (j.contains("minimal")) {
        if (!j["minimal"].is_boolean()) schema_error("minimal", "expected a boolean");
        if (j["minimal"].get<bool>() && !model.minimal())
            schema_error("minimal", "model is declared minimal but a differential has a "
                                     "linear term");
    }
    return model;
}

Json biquotient_spec_to_json(const BiquotientSpec& spec) {
    Json j;
    Json g = Json::array();
    for (const auto& f : spec.g_factors)
        g.push_back({{"family", family_to_string(f.family)}, {"n", f.parameter}});
    j["g"] = g;
    Json h = Json::array();
    for (const auto& hf : spec.h_factors) {
        if (const auto* c = std::get_if<CircleFactor>(&hf)) {
            h.push_back({{"kind", "circle"}, {"left", c->left}, {"right", c->right}});
        } else {
            const auto& s = std::get<SimpleFactor>(hf);
            h.push_back({{"kind", "simple"},
                         {"group",
                          {{"family", family_to_string(s.grp.family)}, {"n", s.grp.parameter}}},
                         {"left", s.left},
                         {"right", s.right}});
        }
    }
    j["h"] = h;
    j["convention"] = spec.convention == ModelConvention::pullback_difference
                          ? "pullback_difference"
                          : "paper_su3";
    return j;
}

BiquotientSpec biquotient_spec_from_json(const Json& j) {
    BiquotientSpec spec;
    if (!j.is_object()) schema_error("", "expected an object");
    if (!j.contains("g") || !j["g"].is_array()) schema_error("g", "expected an array");

    std::size_t idx = 0;
    for (const auto& g : j["g"]) {
        std::string field = "g[" + std::to_string(idx++) + "]";
        if (!g.is_object() || !g.contains("family"))
            schema_error(field, "expected {\"family\", \"n\"}");
        Family fam = family_from_string(g["family"].get<std::string>(), field + ".family");
        int n = g.value("n", 0);
        spec.g_factors.push_back({fam, n});
    }

    if (!j.contains("h") || !j["h"].is_array()) schema_error("h", "expected an array");
    idx = 0;
    std::size_t n_g = spec.g_factors.size();
    for (const auto& h : j["h"]) {
        std::string field = "h[" + std::to_string(idx++) + "]";
        if (!h.is_object() || !h.contains("kind")) schema_error(field, "expected {\"kind\"}");
        std::string kind = h["kind"].get<std::string>();
        if (kind == "circle") {
            CircleFactor c;
            if (!h.contains("left") || !h["left"].is_array())
                schema_error(field + ".left", "expected weight vectors per G factor");
            c.left = h["left"].get<std::vector<std::vector<long>>>();
            if (h.contains("right")) {
                c.right = h["right"].get<std::vector<std::vector<long>>>();
            } else {
                for (std::size_t f = 0; f < n_g && f < c.left.size(); ++f)
                    c.right.emplace_back(c.left[f].size(), 0);
            }
            spec.h_factors.push_back(std::move(c));
        } else if (kind == "simple") {
            SimpleFactor s;
            if (!h.contains("group")) schema_error(field + ".group", "missing group");
            s.grp = canonicalize(
                family_from_string(h["group"]["family"].get<std::string>(),
                                   field + ".group.family"),
                h["group"].value("n", 0));
            if (!h.contains("left") || !h["left"].is_array())
                schema_error(field + ".left", "expected embedding names per G factor");
            s.left = h["left"].get<std::vector<std::string>>();
            if (h.contains("right"))
                s.right = h["right"].get<std::vector<std::string>>();
            else
                s.right.assign(n_g, "");
            spec.h_factors.push_back(std::move(s));
        } else {
            schema_error(field + ".kind", "expected \"circle\" or \"simple\"");
        }
    }

    std::string conv = j.value("convention", "pullback_difference");
    if (conv == "pullback_difference" || conv == "pullback-difference")
        spec.convention = ModelConvention::pullback_difference;
    else if (conv == "paper_su3" || conv == "paper-su3")
        spec.convention = ModelConvention::paper_su3;
    else
        schema_error("convention", "expected pullback_difference or paper_su3");
    return spec;
}

Json betti_to_json(const BettiVector& betti) {
    Json arr = Json::array();
    for (long v : betti.dims) arr.push_back(v);
    return arr;
}

} // namespace rht
