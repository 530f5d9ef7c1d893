#pragma once

#include "json.hpp"
#include "srefl/classify.hpp"
#include "srefl/verifier.hpp"

namespace srefl {

/// Canonical rendering of a cyclotomic scalar: exact coefficient vector in
/// Q(zeta_conductor) plus a float (re, im) pair for human reading only.
nlohmann::json to_json(const CycloNumber& x);
nlohmann::json to_json(const AffineSolution& sol);

nlohmann::json group_report(const GroupData& g);
nlohmann::json mckay_report(const McKayGraph& graph);
nlohmann::json family_record(const ExtendableFamily& family);
nlohmann::json classify_report(const GroupData& g, long N,
                               const std::vector<ExtendableFamily>& families);
nlohmann::json candidate_record(const ReprCandidate& cand);
nlohmann::json verify_record(const ReprCandidate& cand, const OracleResult& oracle,
                             const RelationReport& report, bool agrees);

}  // namespace srefl
