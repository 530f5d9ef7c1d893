#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "srefl/json_io.hpp"

using nlohmann::json;
using namespace srefl;

namespace {

void emit(const json& j, bool pretty, const std::string& out_path) {
    std::string text = pretty ? j.dump(2) : j.dump();
    text += "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

int run_verify(const std::string& spec_text, long N, const std::string& type_csv,
               const std::string& partitions_json, const std::string& mode_text, bool pretty,
               const std::string& out_path) {
    GroupData g = build_group(parse_group_spec(spec_text));
    VerifyMode mode = mode_text == "float" ? VerifyMode::Float : VerifyMode::Exact;

    std::optional<std::vector<long>> type_filter;
    if (!type_csv.empty()) {
        std::vector<long> t;
        std::string cur;
        for (char ch : type_csv + ",") {
            if (ch == ',') {
                if (cur.empty()) throw std::invalid_argument("bad --type list");
                t.push_back(std::stol(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (static_cast<long>(t.size()) != g.num_classes())
            throw std::invalid_argument("--type must list one size per irreducible");
        type_filter = t;
    }
    std::optional<std::map<long, Partition>> parts_filter;
    if (!partitions_json.empty()) {
        json pj = json::parse(partitions_json);
        std::map<long, Partition> pf;
        for (auto& [key, val] : pj.items()) pf[std::stol(key)] = val.get<Partition>();
        parts_filter = std::move(pf);
    }

    std::map<std::pair<std::vector<long>, std::vector<Partition>>, ExtendableFamily> classified;
    for (auto& f : classify_all(g, N))
        classified.emplace(std::make_pair(f.candidate.type, f.candidate.parts), f);

    json records = json::array();
    bool all_agree = true;
    for (const auto& cand : all_candidates(g, N)) {
        if (type_filter && cand.type != *type_filter) continue;
        if (parts_filter) {
            bool ok = true;
            for (const auto& [h, lam] : *parts_filter)
                if (h < 0 || h >= g.num_classes() || cand.parts[h] != lam) ok = false;
            if (!ok) continue;
        }
        InducedRep rep;
        try {
            rep = build_induced(g, cand);
        } catch (const std::invalid_argument& e) {
            std::string msg = e.what();
            if (msg.find("guard") != std::string::npos) {
                json skip = candidate_record(cand);
                skip["skipped"] = msg;
                records.push_back(skip);
                continue;
            }
            throw;
        }
        OracleResult oracle = solve_params_from_relations(rep);
        auto it = classified.find({cand.type, cand.parts});
        bool agrees;
        if (it == classified.end()) {
            agrees = !oracle.accepts();
        } else {
            agrees = oracle.accepts() && affine_sets_equal(oracle.solution, it->second.family);
        }
        all_agree = all_agree && agrees;

        std::vector<CycloNumber> point(g.num_classes(), CycloNumber::zero(g.conductor));
        if (!oracle.solution.empty) {
            if (auto p = k_nonzero_point(oracle.solution)) point = *p;
            else point = oracle.solution.particular;
        }
        RelationReport report = relation_residuals(rep, point, mode);
        records.push_back(verify_record(cand, oracle, report, agrees));
    }
    emit(json{{"group", g.spec.str()},
              {"n", N},
              {"mode", mode == VerifyMode::Exact ? "exact" : "float"},
              {"all_agree", all_agree},
              {"reports", records}},
         pretty, out_path);
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of wreath-product representations extending to symplectic reflection algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string spec_text, out_path, type_csv, partitions_json, mode_text = "exact";
    long N = 1;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--out", out_path, "write JSON to a file instead of stdout");

    auto* cmd_group = app.add_subcommand("group", "character table and class data");
    cmd_group->add_option("spec", spec_text, "group spec: C<m>, D<q>, T, O, I")->required();

    auto* cmd_mckay = app.add_subcommand("mckay", "McKay graph and affine diagram");
    cmd_mckay->add_option("spec", spec_text)->required();

    auto* cmd_classify = app.add_subcommand("classify", "extendable families for S_N wr Gamma^N");
    cmd_classify->add_option("spec", spec_text)->required();
    cmd_classify->add_option("--n", N, "number of tensor factors")->required();

    auto* cmd_verify = app.add_subcommand("verify", "matrix-level oracle vs the classifier");
    cmd_verify->add_option("spec", spec_text)->required();
    cmd_verify->add_option("--n", N)->required();
    cmd_verify->add_option("--type", type_csv, "restrict to one type vector (comma list)");
    cmd_verify->add_option("--partitions", partitions_json, "restrict partitions, JSON {\"h\":[...]}");
    cmd_verify->add_option("--mode", mode_text)->check(CLI::IsMember({"exact", "float"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_group->parsed()) {
            emit(group_report(build_group(parse_group_spec(spec_text))), pretty, out_path);
        } else if (cmd_mckay->parsed()) {
            emit(mckay_report(build_mckay(build_group(parse_group_spec(spec_text)))), pretty, out_path);
        } else if (cmd_classify->parsed()) {
            GroupData g = build_group(parse_group_spec(spec_text));
            emit(classify_report(g, N, classify_all(g, N)), pretty, out_path);
        } else if (cmd_verify->parsed()) {
            return run_verify(spec_text, N, type_csv, partitions_json, mode_text, pretty, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        return msg.find("unsupported") != std::string::npos ? 3 : 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
