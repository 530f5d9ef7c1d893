#pragma once

#include <vector>

#include "srefl/groups.hpp"
#include "srefl/mckay.hpp"
#include "srefl/partitions.hpp"

namespace srefl {

/// A candidate irreducible of the wreath product S_N x| Gamma^N: its type
/// (N_1,...,N_nu) and one partition per active block (empty elsewhere).
struct ReprCandidate {
    std::vector<long> type;
    std::vector<Partition> parts;

    long total() const;
    std::vector<long> active_blocks() const;  // h with type[h] > 0, increasing
};

/// One row per active block h, unknowns (k, c_2,...,c_nu):
///   dim Y_h + k (b_h - a_h)|Gamma|/2 + sum_s c_s |C_s| chi_{Y_h}(C_s) = 0.
struct HyperplaneSystem {
    CycloMatrix A;                    // r x nu coefficient matrix
    std::vector<CycloNumber> rhs;     // -dim Y_h per row
    std::vector<std::string> variables;
    std::vector<long> rows_for;       // active block per row
};

struct ExtendableFamily {
    ReprCandidate candidate;
    std::vector<RectShape> rects;     // (0,0) on inactive blocks
    AffineSolution family;            // in (k, c_2,...,c_nu)
    Integer dim_induced = 0;          // M * dim W * dim Y
    bool contains_k0 = false;         // does the family meet {k = 0}?
    size_t rank = 0;                  // r = number of active blocks
};

struct SupportAssignment {
    std::vector<long> support;        // independent set of irrep indices
    std::vector<long> sizes;          // N_h >= 1 per support vertex
};

/// All (independent support, positive block sizes summing to N) pairs, in
/// deterministic order (support lex, then sizes lex descending-first).
std::vector<SupportAssignment> admissible_supports(const McKayGraph& graph, long N);

/// Exact hyperplane rows for a candidate whose active partitions are all
/// rectangles; otherwise throws ("Thm 3.1 I i) violated").
HyperplaneSystem hyperplane_system(const GroupData& g, const ReprCandidate& candidate);

/// The full classification for (Gamma, N): every admissible support, every
/// rectangular partition assignment, each with its exact parameter family.
std::vector<ExtendableFamily> classify_all(const GroupData& g, long N);

/// dim of the affine family; throws on any invariant breach (must be nu - r).
long solution_dimension(const ExtendableFamily& family);

/// Every candidate whatsoever (all compositions of N over the nu blocks, all
/// partition tuples, no independence or rectangle filtering) — the sweep
/// domain for the matrix-level oracle.
std::vector<ReprCandidate> all_candidates(const GroupData& g, long N);

}  // namespace srefl
