#include "rht/liegroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rht {

namespace {
using Json = nlohmann::ordered_json;

constexpr int kParameterCap = 12; // any larger classical factor has top degree > 13
}

LieGroupDescriptor group(Family f, int parameter) { return canonicalize(f, parameter); }

LieGroupDescriptor canonicalize(Family f, int p) {
    switch (f) {
        case Family::SU:
            if (p < 2) throw validation_error("SU(n) needs n >= 2");
            if (p == 2) return {Family::Sp, 1};
            return {Family::SU, p};
        case Family::SO:
            if (p < 2) throw validation_error("SO(n) needs n >= 2");
            if (p == 2) return {Family::Circle, 0};
            if (p == 3) return {Family::Sp, 1};
            if (p == 4)
                throw unsupported_error("SO(4) is not simple; use Sp(1) x Sp(1) factors");
            if (p == 5) return {Family::Sp, 2};
            if (p == 6) return {Family::SU, 4};
            return {Family::SO, p};
        case Family::Sp:
            if (p < 1) throw validation_error("Sp(n) needs n >= 1");
            return {Family::Sp, p};
        case Family::Circle:
            return {Family::Circle, 0};
        default:
            return {f, 0};
    }
}

long dimension(const LieGroupDescriptor& g) {
    switch (g.family) {
        case Family::SU: return static_cast<long>(g.parameter) * g.parameter - 1;
        case Family::SO: return static_cast<long>(g.parameter) * (g.parameter - 1) / 2;
        case Family::Sp: return static_cast<long>(g.parameter) * (2 * g.parameter + 1);
        case Family::G2: return 14;
        case Family::F4: return 52;
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
        case Family::Circle: return 1;
    }
    throw structural_error("unknown family");
}

int rank(const LieGroupDescriptor& g) {
    switch (g.family) {
        case Family::SU: return g.parameter - 1;
        case Family::SO: return g.parameter / 2;
        case Family::Sp: return g.parameter;
        case Family::G2: return 2;
        case Family::F4: return 4;
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::Circle: return 1;
    }
    throw structural_error("unknown family");
}

std::vector<int> homotopy_degrees(const LieGroupDescriptor& g) {
    std::vector<int> out;
    switch (g.family) {
        case Family::SU:
            for (int d = 3; d <= 2 * g.parameter - 1; d += 2) out.push_back(d);
            break;
        case Family::SO: {
            int n = g.parameter;
            if (n < 2) throw validation_error("SO(n) needs n >= 2");
            if (n % 2 == 1) {
                for (int d = 3; d <= 2 * n - 3; d += 4) out.push_back(d);
            } else {
                for (int d = 3; d <= 2 * n - 5; d += 4) out.push_back(d);
                out.push_back(n - 1);
                std::sort(out.begin(), out.end());
            }
            break;
        }
        case Family::Sp:
            for (int d = 3; d <= 4 * g.parameter - 1; d += 4) out.push_back(d);
            break;
        case Family::G2: out = {3, 11}; break;
        case Family::F4: out = {3, 11, 15, 23}; break;
        case Family::E6: out = {3, 9, 11, 15, 17, 23}; break;
        case Family::E7: out = {3, 11, 15, 19, 23, 35}; break;
        case Family::E8: out = {3, 15, 23, 27, 35, 39, 47, 59}; break;
        case Family::Circle: out = {1}; break;
    }
    return out;
}

int top_degree(const LieGroupDescriptor& g) {
    auto degs = homotopy_degrees(g);
    return degs.back();
}

int second_degree(const LieGroupDescriptor& g) {
    auto degs = homotopy_degrees(g);
    return degs.size() >= 2 ? degs[degs.size() - 2] : 0;
}

std::vector<int> classifying_space_degrees(const LieGroupDescriptor& g) {
    auto degs = homotopy_degrees(g);
    for (auto& d : degs) d += 1;
    return degs;
}

bool is_simple(const LieGroupDescriptor& g) { return g.family != Family::Circle; }

std::string display(const LieGroupDescriptor& g) {
    switch (g.family) {
        case Family::SU: return "SU(" + std::to_string(g.parameter) + ")";
        case Family::SO: return "SO(" + std::to_string(g.parameter) + ")";
        case Family::Sp: return "Sp(" + std::to_string(g.parameter) + ")";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::Circle: return "S^1";
    }
    return "?";
}

std::optional<EqualityQuotient> equality_cases(const LieGroupDescriptor& h,
                                               const LieGroupDescriptor& g) {
    if (!is_simple(h) || !is_simple(g) || h == g) return std::nullopt;
    // Spin(2n)/Spin(2n-1) = S^{2n-1}, n >= 4
    if (h.family == Family::SO && g.family == Family::SO && h.parameter % 2 == 1 &&
        g.parameter == h.parameter + 1 && g.parameter >= 8) {
        int n = g.parameter / 2;
        return EqualityQuotient{"S^" + std::to_string(2 * n - 1),
                                "Spin(" + std::to_string(2 * n) + ")/Spin(" +
                                    std::to_string(2 * n - 1) + ")"};
    }
    if (h.family == Family::G2 && g.family == Family::SO && g.parameter == 7)
        return EqualityQuotient{"S^7", "Spin(7)/G2"};
    if (h.family == Family::G2 && g.family == Family::SO && g.parameter == 8)
        return EqualityQuotient{"S^7 x S^7", "Spin(8)/G2"};
    if (h.family == Family::Sp && g.family == Family::SU && g.parameter == 2 * h.parameter &&
        h.parameter >= 2) {
        return EqualityQuotient{"SU(2n)/Sp(n)", "SU(" + std::to_string(g.parameter) + ")/Sp(" +
                                                    std::to_string(h.parameter) + ")"};
    }
    if (h.family == Family::F4 && g.family == Family::E6)
        return EqualityQuotient{"E6/F4", "E6/F4"};
    return std::nullopt;
}

std::string to_string(TypeBucket b) {
    switch (b) {
        case TypeBucket::S7: return "S7";
        case TypeBucket::S4xS3: return "S4xS3";
        case TypeBucket::S2xS5: return "S2xS5";
        case TypeBucket::CP2xS3: return "CP2xS3";
        case TypeBucket::Remaining: return "remaining";
    }
    return "?";
}

std::vector<TypeBucket> all_buckets() {
    return {TypeBucket::S7, TypeBucket::S4xS3, TypeBucket::S2xS5, TypeBucket::CP2xS3,
            TypeBucket::Remaining};
}

std::vector<int> bucket_odd_degrees(TypeBucket b) {
    switch (b) {
        case TypeBucket::S7: return {7};
        case TypeBucket::S4xS3: return {3, 7};
        case TypeBucket::S2xS5: return {3, 5};
        case TypeBucket::CP2xS3: return {3, 5};
        case TypeBucket::Remaining: return {3, 3, 3};
    }
    return {};
}

std::vector<int> bucket_even_degrees(TypeBucket b) {
    switch (b) {
        case TypeBucket::S7: return {};
        case TypeBucket::S4xS3: return {4};
        case TypeBucket::S2xS5: return {2};
        case TypeBucket::CP2xS3: return {2};
        case TypeBucket::Remaining: return {2, 2};
    }
    return {};
}

std::vector<RealType7> bucket_types(TypeBucket b) {
    switch (b) {
        case TypeBucket::S7: return {RealType7::S7};
        case TypeBucket::S4xS3: return {RealType7::S4xS3};
        case TypeBucket::S2xS5: return {RealType7::S2xS5};
        case TypeBucket::CP2xS3: return {RealType7::CP2xS3};
        case TypeBucket::Remaining:
            return {RealType7::S2xS2xS3, RealType7::S3xCP2_connected_sum_CP2,
                    RealType7::S3twisted};
    }
    return {};
}

namespace {

std::string factors_display(const std::vector<LieGroupDescriptor>& fs) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += " x ";
        out += display(fs[i]);
    }
    return out;
}

std::string pair_display(const std::vector<LieGroupDescriptor>& g,
                         const std::vector<LieGroupDescriptor>& h) {
    std::string gs = factors_display(g), hs = factors_display(h);
    if (g.size() > 1) gs = "(" + gs + ")";
    if (h.size() > 1) hs = "(" + hs + ")";
    return gs + "//" + hs;
}

std::vector<LieGroupDescriptor> simple_pool() {
    std::vector<LieGroupDescriptor> pool;
    for (int n = 1; n <= kParameterCap; ++n) pool.push_back({Family::Sp, n});
    for (int n = 3; n <= kParameterCap; ++n) pool.push_back({Family::SU, n});
    for (int n = 7; n <= kParameterCap; ++n) pool.push_back({Family::SO, n});
    pool.push_back({Family::G2, 0});
    pool.push_back({Family::F4, 0});
    pool.push_back({Family::E6, 0});
    pool.push_back({Family::E7, 0});
    pool.push_back({Family::E8, 0});
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool equality_admissible(const LieGroupDescriptor& h, const LieGroupDescriptor& g) {
    return top_degree(h) == top_degree(g) && (h == g || equality_cases(h, g).has_value());
}

bool has_potential_killer(const LieGroupDescriptor& g) {
    for (const auto& h : simple_pool())
        if (equality_admissible(h, g)) return true;
    return false;
}

// Multisets of pool entries (indices non-decreasing) of size 1..max_size.
void g_multisets(const std::vector<LieGroupDescriptor>& pool, std::size_t max_size,
                 std::size_t from, std::vector<LieGroupDescriptor>& current,
                 std::vector<std::vector<LieGroupDescriptor>>& out) {
    if (!current.empty()) out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        g_multisets(pool, max_size, i, current, out);
        current.pop_back();
    }
}

// Multisets of H factors with exact total rank and dimension.
void h_multisets(const std::vector<LieGroupDescriptor>& pool, std::size_t from, long dim_left,
                 int rank_left, std::vector<LieGroupDescriptor>& current,
                 std::vector<std::vector<LieGroupDescriptor>>& out) {
    if (dim_left == 0 && rank_left == 0) {
        out.push_back(current);
        return;
    }
    if (dim_left < rank_left) return; // every rank costs at least dimension 1
    for (std::size_t i = from; i < pool.size(); ++i) {
        long d = dimension(pool[i]);
        int r = rank(pool[i]);
        if (d > dim_left || r > rank_left) continue;
        current.push_back(pool[i]);
        h_multisets(pool, i, dim_left - d, rank_left - r, current, out);
        current.pop_back();
    }
}

// Matching that covers all forced vertices by disjoint admissible equality
// edges (h index, g index).
bool cover_forced(const std::vector<std::pair<int, int>>& edges, std::vector<bool>& h_used,
                  std::vector<bool>& g_used, const std::vector<int>& forced_h,
                  const std::vector<int>& forced_g, std::size_t fh, std::size_t fg) {
    while (fh < forced_h.size() && h_used[forced_h[fh]]) ++fh;
    if (fh < forced_h.size()) {
        int h = forced_h[fh];
        for (const auto& [eh, eg] : edges) {
            if (eh != h || g_used[eg]) continue;
            h_used[eh] = true;
            g_used[eg] = true;
            if (cover_forced(edges, h_used, g_used, forced_h, forced_g, fh + 1, fg)) return true;
            h_used[eh] = false;
            g_used[eg] = false;
        }
        return false;
    }
    while (fg < forced_g.size() && g_used[forced_g[fg]]) ++fg;
    if (fg == forced_g.size()) return true;
    int g = forced_g[fg];
    for (const auto& [eh, eg] : edges) {
        if (eg != g || h_used[eh]) continue;
        h_used[eh] = true;
        g_used[eg] = true;
        if (cover_forced(edges, h_used, g_used, forced_h, forced_g, fh, fg + 1)) return true;
        h_used[eh] = false;
        g_used[eg] = false;
    }
    return false;
}

struct PairCheck {
    bool valid = false;
    bool case1 = false;
    bool case2 = false;
};

PairCheck check_pair(const std::vector<LieGroupDescriptor>& g_list,
                     const std::vector<LieGroupDescriptor>& h_list, int bucket_top) {
    PairCheck out;
    int max_d = 0;
    for (const auto& g : g_list) max_d = std::max(max_d, top_degree(g));

    std::vector<int> forced_h, forced_g;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (!is_simple(h_list[i])) continue;
        bool strict = false;
        bool has_equality = false;
        for (std::size_t j = 0; j < g_list.size(); ++j) {
            if (top_degree(h_list[i]) < top_degree(g_list[j])) strict = true;
            if (equality_admissible(h_list[i], g_list[j])) {
                has_equality = true;
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
        if (!strict) {
            if (!has_equality) return out; // nowhere to embed
            forced_h.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t j = 0; j < g_list.size(); ++j)
        if (top_degree(g_list[j]) > bucket_top) forced_g.push_back(static_cast<int>(j));

    std::vector<bool> h_used(h_list.size(), false), g_used(g_list.size(), false);
    bool matched = cover_forced(edges, h_used, g_used, forced_h, forced_g, 0, 0);
    if (!matched) return out;

    out.valid = true;
    out.case1 = forced_h.empty() && forced_g.empty();
    out.case2 = !edges.empty();
    return out;
}

// ----- refined stage ------------------------------------------------------

struct DegreeMultiset {
    std::map<int, int> counts;
    void add(int d) { counts[d] += 1; }
    void remove_one(int d) {
        auto it = counts.find(d);
        if (it == counts.end()) throw structural_error("multiset underflow");
        if (--it->second == 0) counts.erase(it);
    }
    int count(int d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
    bool operator==(const DegreeMultiset&) const = default;
};

// Outcome of one assignment of H-simples to G-factors: the surviving
// generator degrees after the forced contractions.
struct AssignmentOutcome {
    DegreeMultiset odds, evens;
    bool uses_bijective = false;
    // Some factor receives an equality-case quotient kill together with a
    // further simple factor: the presentation factors through the sphere.
    bool shares_equality_factor = false;
    std::vector<std::pair<std::size_t, std::size_t>> bijective_pairs; // (h, g) indices
};

// Enumerate single-target assignments of the simple H-factors and compute
// the surviving degrees; kills inside one G-factor pair its odd degrees
// d-1 against arriving even degrees d, greedily per degree (the surplus on
// either side survives).
void enumerate_assignments(const std::vector<LieGroupDescriptor>& g_list,
                           const std::vector<LieGroupDescriptor>& h_simples, std::size_t next,
                           std::vector<std::size_t>& target,
                           std::vector<AssignmentOutcome>& outcomes, int circle_count) {
    if (next == h_simples.size()) {
        // A free two-sided action of the assigned subgroups needs room in
        // the factor: total dimension strictly below dim G_j, except for a
        // single covering factor (the transitive case handled by
        // cancellation).
        for (std::size_t j = 0; j < g_list.size(); ++j) {
            long dim_sum = 0;
            int count = 0;
            bool bij = false;
            for (std::size_t i = 0; i < h_simples.size(); ++i) {
                if (target[i] != j) continue;
                dim_sum += dimension(h_simples[i]);
                ++count;
                if (h_simples[i] == g_list[j]) bij = true;
            }
            if (dim_sum > dimension(g_list[j])) return;
            if (dim_sum == dimension(g_list[j]) && !(count == 1 && bij)) return;
        }
        AssignmentOutcome o;
        // Evens arriving per G-factor.
        std::vector<DegreeMultiset> arriving(g_list.size());
        for (std::size_t i = 0; i < h_simples.size(); ++i)
            for (int e : classifying_space_degrees(h_simples[i])) arriving[target[i]].add(e);
        for (std::size_t j = 0; j < g_list.size(); ++j) {
            DegreeMultiset odds;
            for (int d : homotopy_degrees(g_list[j])) odds.add(d);
            for (const auto& [e, cnt] : arriving[j].counts) {
                int kills = std::min(cnt, odds.count(e - 1));
                for (int k = 0; k < kills; ++k) odds.remove_one(e - 1);
                for (int k = 0; k < cnt - kills; ++k) o.evens.add(e);
            }
            for (const auto& [d, cnt] : odds.counts)
                for (int k = 0; k < cnt; ++k) o.odds.add(d);
        }
        for (int c = 0; c < circle_count; ++c) o.evens.add(2);
        for (std::size_t i = 0; i < h_simples.size(); ++i) {
            if (h_simples[i] == g_list[target[i]]) {
                o.uses_bijective = true;
                o.bijective_pairs.emplace_back(i, target[i]);
            }
        }
        for (std::size_t j = 0; j < g_list.size(); ++j) {
            bool equality_kill = false;
            int simples_here = 0;
            for (std::size_t i = 0; i < h_simples.size(); ++i) {
                if (target[i] != j) continue;
                ++simples_here;
                if (top_degree(h_simples[i]) == top_degree(g_list[j]) &&
                    h_simples[i] != g_list[j])
                    equality_kill = true;
            }
            if (equality_kill && simples_here > 1) o.shares_equality_factor = true;
        }
        outcomes.push_back(std::move(o));
        return;
    }
    for (std::size_t j = 0; j < g_list.size(); ++j) {
        const auto& h = h_simples[next];
        const auto& g = g_list[j];
        if (top_degree(h) > top_degree(g)) continue;
        if (top_degree(h) == top_degree(g) && !equality_admissible(h, g)) continue;
        target[next] = j;
        enumerate_assignments(g_list, h_simples, next + 1, target, outcomes, circle_count);
    }
}

enum class Feasibility { clean, cancel_bijective, sphere_presentation, infeasible };

struct FeasibilityResult {
    Feasibility verdict = Feasibility::infeasible;
    std::pair<std::size_t, std::size_t> bijective_pair; // indices into simples / g_list
};

FeasibilityResult bucket_feasibility(const CandidatePair& pair) {
    std::vector<LieGroupDescriptor> h_simples;
    int circles = 0;
    for (const auto& h : pair.h_factors)
        if (is_simple(h)) h_simples.push_back(h);
        else ++circles;

    std::vector<AssignmentOutcome> outcomes;
    std::vector<std::size_t> target(h_simples.size(), 0);
    enumerate_assignments(pair.g_factors, h_simples, 0, target, outcomes, circles);

    DegreeMultiset want_odds, want_evens;
    for (int d : bucket_odd_degrees(pair.bucket)) want_odds.add(d);
    for (int d : bucket_even_degrees(pair.bucket)) want_evens.add(d);

    FeasibilityResult res;
    for (const auto& o : outcomes) {
        if (!(o.odds == want_odds && o.evens == want_evens)) continue;
        if (!o.uses_bijective && !o.shares_equality_factor) {
            res.verdict = Feasibility::clean;
            return res;
        }
        if (o.uses_bijective) {
            if (res.verdict != Feasibility::cancel_bijective) {
                res.verdict = Feasibility::cancel_bijective;
                res.bijective_pair = o.bijective_pairs.front();
            }
        } else if (res.verdict == Feasibility::infeasible) {
            res.verdict = Feasibility::sphere_presentation;
        }
    }
    return res;
}

struct NamedReduction {
    std::vector<LieGroupDescriptor> g, h;          // pattern
    std::vector<LieGroupDescriptor> new_g, new_h;  // replacement (empty = exclusion)
    bool exclude = false;
    TrailEntry rule;
};

std::vector<NamedReduction> named_reductions() {
    auto sp = [](int n) { return LieGroupDescriptor{Family::Sp, n}; };
    auto su = [](int n) { return LieGroupDescriptor{Family::SU, n}; };
    std::vector<NamedReduction> rules;
    rules.push_back({{su(3), su(4)},
                     {su(3), su(3)},
                     {su(4)},
                     {su(3)},
                     false,
                     {"rank-obstruction-su3xsu3",
                      "SU(3) x SU(3) has rank 4 and does not embed in SU(4); the orbit map is "
                      "surjective on the rational homotopy of the SU(3) factor, which cancels",
                      "embedding-fact"}});
    rules.push_back({{sp(1), su(4)},
                     {sp(1), su(3)},
                     {su(4)},
                     {su(3)},
                     false,
                     {"no-su3xsu2-in-su4",
                      "SU(3) x SU(2) does not embed in SU(4); the action is transitive on the "
                      "Sp(1) factor and both Sp(1) = SU(2) factors cancel",
                      "embedding-fact"}});
    rules.push_back({{sp(2), su(3)},
                     {sp(1), su(3)},
                     {sp(2)},
                     {sp(1)},
                     false,
                     {"no-su3-in-sp2",
                      "SU(3) is not a subgroup of Sp(2), not even up to finite covering; the "
                      "SU(3) factors cancel",
                      "embedding-fact"}});
    rules.push_back({{su(3), su(3)},
                     {sp(1), sp(1), sp(1)},
                     {},
                     {},
                     true,
                     {"sym2-degree4-generator",
                      "the model acquires a degree-4 cohomology generator whose powers survive, "
                      "an algebra of quaternionic-projective type; the cohomology cannot be "
                      "finite-dimensional",
                      "rational-homotopy-argument"}});
    for (auto& r : rules) {
        std::sort(r.g.begin(), r.g.end());
        std::sort(r.h.begin(), r.h.end());
        std::sort(r.new_g.begin(), r.new_g.end());
        std::sort(r.new_h.begin(), r.new_h.end());
    }
    return rules;
}

struct TerminalRule {
    std::vector<LieGroupDescriptor> g, h;
    std::vector<RealType7> types;
    std::string display;
    TrailEntry rule;
};

std::vector<TerminalRule> terminal_rules() {
    auto sp = [](int n) { return LieGroupDescriptor{Family::Sp, n}; };
    auto su = [](int n) { return LieGroupDescriptor{Family::SU, n}; };
    auto so = [](int n) { return LieGroupDescriptor{Family::SO, n}; };
    LieGroupDescriptor s1{Family::Circle, 0};
    LieGroupDescriptor g2{Family::G2, 0};
    std::vector<TerminalRule> rules;
    rules.push_back({{su(4)},
                     {su(3)},
                     {RealType7::S7},
                     "SU(4)//SU(3)",
                     {"su4-su3-sphere",
                      "the only embedding of SU(3) in SU(4) is the standard one up to "
                      "conjugation; the orbit map is rationally 6-connected and the biquotient "
                      "is diffeomorphic to the 7-sphere (Kapovitch-Ziller)",
                      "external-literature"}});
    rules.push_back({{sp(2)},
                     {sp(1)},
                     {RealType7::S7},
                     "Sp(2)//Sp(1)",
                     {"sp2-sp1-sphere",
                      "no homogeneous 7-manifold is rationally 2-connected with non-trivial "
                      "third homotopy (Klaus), so the orbit inclusion is rationally "
                      "3-connected; the quotient is the 7-sphere or the Gromoll-Meyer sphere "
                      "(Kapovitch-Ziller)",
                      "external-literature"}});
    rules.push_back({{so(7)},
                     {g2},
                     {RealType7::S7},
                     "Spin(7)/G2",
                     {"spin7-g2", "the homogeneous quotient Spin(7)/G2 is the 7-sphere",
                      "external-literature"}});
    rules.push_back({{so(8)},
                     {so(7)},
                     {RealType7::S7},
                     "SO(8)/SO(7)",
                     {"spin8-spin7", "the homogeneous quotient Spin(8)/Spin(7) is the 7-sphere",
                      "external-literature"}});
    rules.push_back({{sp(1), sp(2)},
                     {sp(1), sp(1)},
                     {RealType7::S4xS3},
                     "(Sp(2)/Sp(1)) x Sp(1)",
                     {"sp2sp1-sp1sp1-split",
                      "either the orbit map is surjective on the third homotopy of the Sp(1) "
                      "factor (reducing to Sp(2)//Sp(1), a sphere) or the inclusion lands in "
                      "Sp(2) and the quotient splits as (Sp(2)/(Sp(1) x Sp(1))) x Sp(1) = "
                      "S^4 x S^3 (Kapovitch-Ziller)",
                      "external-literature"}});
    rules.push_back({{su(3)},
                     {s1},
                     {RealType7::S2xS5},
                     "SU(3)//S^1",
                     {"su3-circle",
                      "for any free circle action the degree-3 differential is non-zero (its "
                      "vanishing forces equal weight vectors, a non-free action), so the "
                      "quotient has the rational type of S^2 x S^5 irrespective of the action",
                      "rational-homotopy-argument"}});
    rules.push_back({{sp(1), su(3)},
                     {s1, sp(1)},
                     {RealType7::S2xS5, RealType7::CP2xS3},
                     "(SU(3) x Sp(1))//(S^1 x Sp(1))",
                     {"su3sp1-s1sp1",
                      "if the circle acts non-trivially on the Sp(1) factor the square of the "
                      "degree-2 class vanishes (type S^2 x S^5); otherwise S^1 x Sp(1) embeds "
                      "in SU(3) with maximal rank and the quotient is CP^2 x S^3 "
                      "(Kapovitch-Ziller for the splitting)",
                      "external-literature"}});
    rules.push_back({{sp(1), su(4)},
                     {s1, sp(2)},
                     {RealType7::S2xS5},
                     "(SU(4) x Sp(1))//(Sp(2) x S^1)",
                     {"su4sp1-sp2s1",
                      "Sp(2) x S^1 is not a maximal-rank subgroup of SU(4), so the circle acts "
                      "on the Sp(1) sides with distinct weights; the square of the degree-2 "
                      "generator vanishes and the rational type is S^2 x S^5",
                      "rational-homotopy-argument"}});
    rules.push_back({{sp(1), sp(1), sp(1)},
                     {s1, s1},
                     {RealType7::S2xS2xS3, RealType7::S3xCP2_connected_sum_CP2,
                      RealType7::S3twisted},
                     "(Sp(1) x Sp(1) x Sp(1))//(S^1 x S^1)",
                     {"sp1cubed-torus",
                      "torus weight data realises all three remaining types: trivial third "
                      "weight gives S^2 x S^2 x S^3, generic definite data gives "
                      "S^3 x CP^2 # CP^2, and the weights (a,b) -> (a,b,ab) give the twisted "
                      "S^3-bundle over S^2 x S^2",
                      "rational-homotopy-argument"}});
    for (auto& r : rules) {
        std::sort(r.g.begin(), r.g.end());
        std::sort(r.h.begin(), r.h.end());
    }
    return rules;
}

} // namespace

std::string CandidatePair::display() const { return pair_display(g_factors, h_factors); }

BiquotientEnumeration enumerate_pairs(EnumerationStage stage) {
    BiquotientEnumeration out;
    out.stage = stage;

    auto pool = simple_pool();

    for (TypeBucket bucket : all_buckets()) {
        auto odd = bucket_odd_degrees(bucket);
        int bucket_top = odd.back();
        std::size_t max_factors = odd.size();

        std::vector<LieGroupDescriptor> g_pool;
        for (const auto& g : pool) {
            if (top_degree(g) <= bucket_top)
                g_pool.push_back(g);
            else if (second_degree(g) <= bucket_top && has_potential_killer(g))
                g_pool.push_back(g);
        }

        std::vector<std::vector<LieGroupDescriptor>> g_lists;
        {
            std::vector<LieGroupDescriptor> current;
            g_multisets(g_pool, max_factors, 0, current, g_lists);
        }

        for (const auto& g_list : g_lists) {
            long g_dim = 0;
            int g_rank = 0;
            int max_d = 0;
            for (const auto& g : g_list) {
                g_dim += dimension(g);
                g_rank += rank(g);
                max_d = std::max(max_d, top_degree(g));
            }
            long h_dim = g_dim - 7;
            int h_rank = g_rank - 1;
            if (h_dim < 0 || h_rank < 0) continue;

            std::vector<LieGroupDescriptor> h_pool;
            h_pool.push_back({Family::Circle, 0});
            for (const auto& h : pool)
                if (top_degree(h) <= max_d && dimension(h) <= h_dim) h_pool.push_back(h);

            std::vector<std::vector<LieGroupDescriptor>> h_lists;
            {
                std::vector<LieGroupDescriptor> current;
                h_multisets(h_pool, 0, h_dim, h_rank, current, h_lists);
            }

            for (const auto& h_list : h_lists) {
                auto check = check_pair(g_list, h_list, bucket_top);
                if (!check.valid) continue;
                CandidatePair pair;
                pair.bucket = bucket;
                pair.g_factors = g_list;
                pair.h_factors = h_list;
                std::sort(pair.g_factors.begin(), pair.g_factors.end());
                std::sort(pair.h_factors.begin(), pair.h_factors.end());
                pair.case1_possible = check.case1;
                pair.case2_possible = check.case2;
                out.arithmetic.push_back(std::move(pair));
            }
        }
    }
    std::sort(out.arithmetic.begin(), out.arithmetic.end());
    out.arithmetic.erase(std::unique(out.arithmetic.begin(), out.arithmetic.end()),
                         out.arithmetic.end());
    if (stage == EnumerationStage::arithmetic) return out;

    // ----- refined stage ---------------------------------------------------
    auto reductions = named_reductions();
    auto terminals = terminal_rules();

    std::set<std::pair<RealType7, std::string>> emitted;

    struct WorkItem {
        CandidatePair pair;
        std::vector<TrailEntry> trail;
        CandidatePair origin;
    };
    std::vector<WorkItem> work;
    for (const auto& p : out.arithmetic) work.push_back({p, {}, p});

    for (std::size_t w = 0; w < work.size(); ++w) {
        WorkItem item = work[w];
        auto& pair = item.pair;

        // Named pair-specific reductions and exclusions.
        bool transformed = false;
        for (const auto& rule : reductions) {
            if (pair.g_factors != rule.g || pair.h_factors != rule.h) continue;
            item.trail.push_back(rule.rule);
            if (rule.exclude) {
                out.eliminated.push_back({item.origin, rule.rule});
                transformed = true;
                break;
            }
            pair.g_factors = rule.new_g;
            pair.h_factors = rule.new_h;
            work.push_back(item);
            transformed = true;
            break;
        }
        if (transformed) continue;

        // Named non-embeddability fact used for the S^7 x S^7 configuration.
        {
            bool g_has_so8 = std::find(pair.g_factors.begin(), pair.g_factors.end(),
                                       LieGroupDescriptor{Family::SO, 8}) != pair.g_factors.end();
            bool h_has_g2 = std::find(pair.h_factors.begin(), pair.h_factors.end(),
                                      LieGroupDescriptor{Family::G2, 0}) != pair.h_factors.end();
            bool h_has_sp2 = std::find(pair.h_factors.begin(), pair.h_factors.end(),
                                       LieGroupDescriptor{Family::Sp, 2}) != pair.h_factors.end();
            if (g_has_so8 && h_has_g2 && h_has_sp2) {
                TrailEntry t{"no-g2xsp2-in-spin8",
                             "killing homotopy of Spin(8) would need G2 x Sp(2) inside Spin(8), "
                             "which the maximal-rank subgroup classification excludes",
                             "embedding-fact"};
                item.trail.push_back(t);
                out.eliminated.push_back({item.origin, t});
                continue;
            }
        }

        // Generator bookkeeping against the bucket signature.
        auto feas = bucket_feasibility(pair);
        if (feas.verdict == Feasibility::infeasible) {
            TrailEntry t{"signature-bookkeeping",
                         "no assignment of the H-factors to the G-factors reduces the model "
                         "generators to the signature of this type",
                         "rational-homotopy-argument"};
            item.trail.push_back(t);
            out.eliminated.push_back({item.origin, t});
            continue;
        }
        if (feas.verdict == Feasibility::sphere_presentation) {
            TrailEntry t{"sphere-presentation-reduction",
                         "every compatible configuration makes a further H-factor act on the "
                         "sphere produced by an equality-case quotient; the presentation "
                         "reduces to a quotient of the transitively acting group already "
                         "listed (Totaro presentation reductions)",
                         "external-literature"};
            item.trail.push_back(t);
            out.eliminated.push_back({item.origin, t});
            continue;
        }
        if (feas.verdict == Feasibility::cancel_bijective) {
            // A factor of H covers a factor of G; the action is transitive
            // on it and both cancel.
            std::vector<LieGroupDescriptor> h_simples;
            for (const auto& h : pair.h_factors)
                if (is_simple(h)) h_simples.push_back(h);
            LieGroupDescriptor cancel = h_simples[feas.bijective_pair.first];
            TrailEntry t{"transitive-factor-cancellation",
                         "every compatible configuration maps the " + rht::display(cancel) +
                             " factor of H isomorphically onto the equal factor of G; the "
                             "action is transitive on it and both factors cancel up to "
                             "diffeomorphism (Totaro)",
                         "external-literature"};
            item.trail.push_back(t);
            auto erase_one = [](std::vector<LieGroupDescriptor>& v,
                                const LieGroupDescriptor& x) {
                auto it = std::find(v.begin(), v.end(), x);
                if (it != v.end()) v.erase(it);
            };
            erase_one(pair.g_factors, cancel);
            erase_one(pair.h_factors, cancel);
            work.push_back(item);
            continue;
        }

        // Terminal classification of the surviving pair.
        const TerminalRule* terminal = nullptr;
        for (const auto& t : terminals)
            if (pair.g_factors == t.g && pair.h_factors == t.h) terminal = &t;

        if (!terminal) {
            RefinedRow row;
            row.g_factors = pair.g_factors;
            row.h_factors = pair.h_factors;
            row.display = pair.display();
            row.trail = item.trail;
            row.trail.push_back({"unclassified",
                                 "no terminal rule matched this surviving pair; left visible "
                                 "for inspection",
                                 "arithmetic"});
            for (RealType7 t : bucket_types(pair.bucket)) {
                row.type = t;
                if (emitted.insert({t, row.display}).second) out.refined.push_back(row);
            }
            continue;
        }

        std::vector<RealType7> final_types;
        for (RealType7 t : bucket_types(pair.bucket))
            if (std::find(terminal->types.begin(), terminal->types.end(), t) !=
                terminal->types.end())
                final_types.push_back(t);

        if (final_types.empty()) {
            TrailEntry t = terminal->rule;
            t.detail = "realises a different real type: " + t.detail;
            item.trail.push_back(t);
            out.eliminated.push_back({item.origin, t});
            continue;
        }
        for (RealType7 t : final_types) {
            if (!emitted.insert({t, terminal->display}).second) continue;
            RefinedRow row;
            row.type = t;
            row.g_factors = pair.g_factors;
            row.h_factors = pair.h_factors;
            row.display = terminal->display;
            row.trail = item.trail;
            row.trail.push_back(terminal->rule);
            out.refined.push_back(row);
        }
    }

    std::sort(out.refined.begin(), out.refined.end(), [](const RefinedRow& a, const RefinedRow& b) {
        return std::tie(a.type, a.display, a.g_factors, a.h_factors) <
               std::tie(b.type, b.display, b.g_factors, b.h_factors);
    });
    return out;
}

std::string liegroups_data_json() {
    Json doc;
    doc["version"] = "1.0";
    doc["parameter_cap"] = kParameterCap;

    Json groups = Json::array();
    for (const auto& g : simple_pool()) {
        Json rec;
        rec["name"] = display(g);
        rec["dimension"] = dimension(g);
        rec["rank"] = rank(g);
        rec["homotopy_degrees"] = homotopy_degrees(g);
        rec["top_degree"] = top_degree(g);
        rec["classifying_space_degrees"] = classifying_space_degrees(g);
        groups.push_back(rec);
    }
    {
        LieGroupDescriptor s1{Family::Circle, 0};
        Json rec;
        rec["name"] = display(s1);
        rec["dimension"] = 1;
        rec["rank"] = 1;
        rec["homotopy_degrees"] = homotopy_degrees(s1);
        rec["top_degree"] = 1;
        rec["classifying_space_degrees"] = classifying_space_degrees(s1);
        groups.push_back(rec);
    }
    doc["groups"] = groups;

    Json ident = Json::array();
    ident.push_back({{"group", "SU(2)"}, {"canonical", "Sp(1)"}});
    ident.push_back({{"group", "SO(3)"}, {"canonical", "Sp(1)"}});
    ident.push_back({{"group", "SO(5)"}, {"canonical", "Sp(2)"}});
    ident.push_back({{"group", "SO(6)"}, {"canonical", "SU(4)"}});
    ident.push_back({{"group", "SO(2)"}, {"canonical", "S^1"}});
    doc["finite_covering_identifications"] = ident;

    Json eq = Json::array();
    auto add_eq = [&](const LieGroupDescriptor& h, const LieGroupDescriptor& g) {
        auto q = equality_cases(h, g);
        if (!q) return;
        eq.push_back({{"subgroup", display(h)},
                      {"group", display(g)},
                      {"quotient", q->tag},
                      {"via", q->via}});
    };
    add_eq({Family::SO, 7}, {Family::SO, 8});
    add_eq({Family::SO, 9}, {Family::SO, 10});
    add_eq({Family::SO, 11}, {Family::SO, 12});
    add_eq({Family::G2, 0}, {Family::SO, 7});
    add_eq({Family::G2, 0}, {Family::SO, 8});
    add_eq({Family::Sp, 2}, {Family::SU, 4});
    add_eq({Family::Sp, 3}, {Family::SU, 6});
    add_eq({Family::Sp, 4}, {Family::SU, 8});
    add_eq({Family::F4, 0}, {Family::E6, 0});
    doc["equality_quotients"] = eq;

    Json facts = Json::array();
    facts.push_back({{"fact", "SU(3) x SU(3) is not a subgroup of SU(4)"},
                     {"reason", "rank 4 exceeds rank 3"},
                     {"source", "rank count"}});
    facts.push_back({{"fact", "SU(3) x SU(2) is not a subgroup of SU(4)"},
                     {"reason", "no 4-dimensional faithful sum of representations fits"},
                     {"source", "Borel-de Siebenthal subgroup classification"}});
    facts.push_back({{"fact", "SU(3) is not a subgroup of Sp(2), even up to finite covering"},
                     {"reason", "Sp(2) has no 8-dimensional rank-2 subgroup of type A2"},
                     {"source", "Borel-de Siebenthal subgroup classification"}});
    facts.push_back({{"fact", "G2 x Sp(2) is not a subgroup of Spin(8)"},
                     {"reason", "maximal-rank subgroup classification"},
                     {"source", "Borel-de Siebenthal subgroup classification"}});
    doc["embedding_facts"] = facts;

    Json rules = Json::array();
    for (const auto& r : named_reductions())
        rules.push_back({{"id", r.rule.rule},
                         {"statement", r.rule.detail},
                         {"provenance", r.rule.provenance}});
    rules.push_back({{"id", "signature-bookkeeping"},
                     {"statement",
                      "single-target assignments of H-factors with forced contractions must "
                      "reproduce the generator degrees of the target type"},
                     {"provenance", "rational-homotopy-argument"}});
    rules.push_back({{"id", "transitive-factor-cancellation"},
                     {"statement",
                      "a factor of H covering a factor of G acts transitively on it; both "
                      "factors cancel up to diffeomorphism"},
                     {"provenance", "external-literature (Totaro, biquotient normalisation)"}});
    for (const auto& t : terminal_rules())
        rules.push_back({{"id", t.rule.rule},
                         {"statement", t.rule.detail},
                         {"provenance", t.rule.provenance}});
    doc["rules"] = rules;

    Json lit = Json::array();
    lit.push_back({{"key", "Totaro"},
                   {"reference", "B. Totaro, Cheeger manifolds and the classification of "
                                 "biquotients, J. Diff. Geom. 61 (2002)"}});
    lit.push_back({{"key", "Kapovitch-Ziller"},
                   {"reference", "V. Kapovitch, W. Ziller, Biquotients with singly generated "
                                 "rational cohomology, Geom. Dedicata 104 (2004)"}});
    lit.push_back({{"key", "Klaus"},
                   {"reference", "S. Klaus, Einfach zusammenhaengende kompakte homogene Raeume "
                                 "bis zur Dimension 9, Diplomarbeit, Bonn (1988)"}});
    lit.push_back({{"key", "Borel-de Siebenthal"},
                   {"reference", "A. Borel, J. de Siebenthal, Les sous-groupes fermes de rang "
                                 "maximum des groupes de Lie clos, Comment. Math. Helv. 23 "
                                 "(1949)"}});
    doc["literature"] = lit;

    return doc.dump(2) + "\n";
}

} // namespace rht
