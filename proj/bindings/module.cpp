#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "srefl/json_io.hpp"

namespace py = pybind11;
using namespace srefl;
using nlohmann::json;

namespace {

GroupData make_group(const std::string& spec) { return build_group(parse_group_spec(spec)); }

std::string group_json(const std::string& spec) { return group_report(make_group(spec)).dump(); }

std::string mckay_json(const std::string& spec) {
    return mckay_report(build_mckay(make_group(spec))).dump();
}

std::string classify_json(const std::string& spec, long n) {
    GroupData g = make_group(spec);
    return classify_report(g, n, classify_all(g, n)).dump();
}

std::string verify_json(const std::string& spec, long n, const std::string& mode_text) {
    GroupData g = make_group(spec);
    VerifyMode mode = mode_text == "float" ? VerifyMode::Float : VerifyMode::Exact;

    std::map<std::pair<std::vector<long>, std::vector<Partition>>, ExtendableFamily> classified;
    for (auto& f : classify_all(g, n))
        classified.emplace(std::make_pair(f.candidate.type, f.candidate.parts), f);

    json records = json::array();
    bool all_agree = true;
    for (const auto& cand : all_candidates(g, n)) {
        auto rep = build_induced(g, cand);
        OracleResult oracle = solve_params_from_relations(rep);
        auto it = classified.find({cand.type, cand.parts});
        bool agrees = it == classified.end()
                          ? !oracle.accepts()
                          : oracle.accepts() && affine_sets_equal(oracle.solution, it->second.family);
        all_agree = all_agree && agrees;
        std::vector<CycloNumber> point(g.num_classes(), CycloNumber::zero(g.conductor));
        if (!oracle.solution.empty) {
            if (auto p = k_nonzero_point(oracle.solution)) point = *p;
            else point = oracle.solution.particular;
        }
        records.push_back(verify_record(cand, oracle, relation_residuals(rep, point, mode), agrees));
    }
    return json{{"group", g.spec.str()},
                {"n", n},
                {"mode", mode == VerifyMode::Exact ? "exact" : "float"},
                {"all_agree", all_agree},
                {"reports", records}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_srefl_core, m) {
    m.doc() = "exact classification of wreath-product representations extending to "
              "symplectic reflection algebras";
    m.def("group_json", &group_json, py::arg("spec"),
          "character table and class data as a JSON string");
    m.def("mckay_json", &mckay_json, py::arg("spec"),
          "McKay graph and affine Dynkin diagram as a JSON string");
    m.def("classify_json", &classify_json, py::arg("spec"), py::arg("n"),
          "extendable families for S_n wr Gamma^n as a JSON string");
    m.def("verify_json", &verify_json, py::arg("spec"), py::arg("n"),
          py::arg("mode") = "exact",
          "matrix-level oracle run over all candidates as a JSON string");
    m.def("partition_dimension", &partition_dimension, py::arg("partition"),
          "dimension of the irreducible S_n module");
    m.def("mn_character", &mn_character, py::arg("partition"), py::arg("mu"),
          "symmetric-group character value chi^lambda(mu) by the Murnaghan-Nakayama rule");
}
