#include "srefl/json_io.hpp"

using nlohmann::json;

namespace srefl {

json to_json(const CycloNumber& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) {
        if (denominator(c) == 1)
            coeffs.push_back(numerator(c).str());
        else
            coeffs.push_back(numerator(c).str() + "/" + denominator(c).str());
    }
    auto a = x.approx();
    return {{"conductor", x.conductor()}, {"coeffs", coeffs}, {"approx", {a.real(), a.imag()}}};
}

json to_json(const AffineSolution& sol) {
    json out;
    out["variables"] = sol.variables;
    out["empty"] = sol.empty;
    out["rank"] = sol.rank;
    if (sol.empty) return out;
    json particular = json::array();
    for (const auto& x : sol.particular) particular.push_back(to_json(x));
    json kernel = json::array();
    for (const auto& v : sol.kernel) {
        json row = json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        kernel.push_back(row);
    }
    out["particular"] = particular;
    out["kernel"] = kernel;
    out["dimension"] = sol.dimension();
    return out;
}

json group_report(const GroupData& g) {
    json out;
    out["group"] = g.spec.str();
    out["order"] = g.order;
    out["conductor"] = g.conductor;
    json classes = json::array();
    for (const auto& c : g.classes) classes.push_back({{"representative", c.representative}, {"size", c.size}});
    out["classes"] = classes;
    out["irreps"] = g.irrep_names;
    json table = json::array();
    for (long h = 0; h < g.num_classes(); ++h) {
        json row = json::array();
        for (long s = 0; s < g.num_classes(); ++s) row.push_back(to_json(g.char_table.at(h, s)));
        table.push_back(row);
    }
    out["character_table"] = table;
    json chi_l = json::array();
    for (const auto& x : g.chi_L) chi_l.push_back(to_json(x));
    out["chi_L"] = chi_l;
    return out;
}

json mckay_report(const McKayGraph& graph) {
    json vertices = json::array();
    for (long h = 0; h < graph.num_vertices(); ++h)
        vertices.push_back({{"index", h}, {"dim", graph.dims[h]}});
    json edges = json::array();
    for (long a = 0; a < graph.num_vertices(); ++a)
        for (long b = a + 1; b < graph.num_vertices(); ++b)
            if (graph.mult[a][b] > 0)
                edges.push_back({{"a", a}, {"b", b}, {"mult", graph.mult[a][b]}});
    return {{"vertices", vertices},
            {"edges", edges},
            {"diagram", graph.diagram},
            {"extending", graph.extending}};
}

json candidate_record(const ReprCandidate& cand) {
    json partitions = json::object();
    for (long h : cand.active_blocks()) partitions[std::to_string(h)] = cand.parts[h];
    return {{"type", cand.type}, {"partitions", partitions}};
}

json family_record(const ExtendableFamily& family) {
    json out = candidate_record(family.candidate);
    json rect = json::object();
    for (long h : family.candidate.active_blocks())
        rect[std::to_string(h)] = {family.rects[h].a, family.rects[h].b};
    out["rect"] = rect;
    out["dim_induced"] = family.dim_induced.str();
    out["solution"] = to_json(family.family);
    out["contains_k0"] = family.contains_k0;
    return out;
}

json classify_report(const GroupData& g, long N, const std::vector<ExtendableFamily>& families) {
    json fams = json::array();
    for (const auto& f : families) fams.push_back(family_record(f));
    return {{"group", g.spec.str()}, {"n", N}, {"count", families.size()}, {"families", fams}};
}

json verify_record(const ReprCandidate& cand, const OracleResult& oracle,
                   const RelationReport& report, bool agrees) {
    json point = json::object();
    if (!report.point.empty()) {
        point["k"] = to_json(report.point[0]);
        json cs = json::array();
        for (size_t i = 1; i < report.point.size(); ++i) cs.push_back(to_json(report.point[i]));
        point["c"] = cs;
    }
    return {{"candidate", candidate_record(cand)},
            {"mode", report.mode == VerifyMode::Exact ? "exact" : "float"},
            {"point", point},
            {"residual_R1", report.residual_r1},
            {"residual_R2", report.residual_r2},
            {"oracle", {{"solution", to_json(oracle.solution)}, {"k_forced_zero", oracle.k_forced_zero}}},
            {"agrees_with_classifier", agrees}};
}

}  // namespace srefl
