#pragma once

#include <optional>
#include <vector>

#include "srefl/classify.hpp"
#include "srefl/groups.hpp"
#include "srefl/partitions.hpp"

namespace srefl {

/// Matrices of one irreducible of a cyclic/dicyclic group, indexed parallel
/// to enumerate_elements(g). Multiplicativity, identity and class traces are
/// validated at build.
struct IrrepMatrices {
    long h = 0;
    std::vector<CycloMatrix> by_element;
};

IrrepMatrices irrep_matrices(const GroupData& g, long h);

/// Minimal-length representatives of the left cosets of the Young subgroup
/// S_{N_1} x ... x S_{N_nu} in S_N: the permutations (as 0-based image
/// vectors) increasing on each block interval, in lexicographic order.
/// Guarded at N <= 8.
std::vector<std::vector<long>> coset_representatives(const std::vector<long>& type);

/// The induced representation W (x) Y -> of a candidate, as combinatorial
/// data plus exact irrep matrices per active block. Generator images are
/// produced on demand; the group-relation invariants (Coxeter, gamma
/// commutation, sigma gamma_i sigma^-1 = gamma_{sigma(i)}) are checked
/// exactly at build time.
struct InducedRep {
    GroupData group;
    ReprCandidate candidate;
    std::vector<GroupElement> elements;
    std::vector<long> inverse_of;              // element index -> inverse
    std::vector<long> active;                  // active irrep indices, increasing
    std::vector<long> slot_of_pos;             // tensor position -> active slot
    std::vector<long> slot_offset;             // first position of each slot
    std::vector<std::vector<long>> cosets;     // sigma_l as image vectors
    std::vector<IrrepMatrices> irreps;         // per active slot
    std::vector<long> wdims;                   // per slot: # standard tableaux
    std::vector<long> ydims;                   // per position: dim Y_h
    long M = 1, dim_w = 1, dim_y = 1, dim = 1;
    long N = 0;
};

InducedRep build_induced(const GroupData& g, const ReprCandidate& candidate);

enum class VerifyMode { Exact, Float };

/// Residuals of (R1)/(R2) at one parameter point (k, c_2,...,c_nu). Exact
/// mode evaluates in the cyclotomic field (residual reported as the largest
/// absolute value of the complex embeddings of nonzero entries); float mode
/// uses the orthogonal form and complex doubles.
struct RelationReport {
    VerifyMode mode = VerifyMode::Exact;
    double residual_r1 = 0;
    double residual_r2 = 0;
    bool exact_zero = false;           // exact mode only: all entries exactly 0
    std::vector<CycloNumber> point;
};

RelationReport relation_residuals(const InducedRep& rep, const std::vector<CycloNumber>& point,
                                  VerifyMode mode);

/// The independent oracle: stack every matrix entry of (R1) for each i and
/// of (R2) for each i != j, u, v as a linear equation in (k, c_2,...,c_nu)
/// and solve exactly.
struct OracleResult {
    AffineSolution solution;
    bool k_forced_zero = false;        // some (R2) coefficient is nonzero

    bool accepts() const;              // nonempty with a k != 0 point
};

OracleResult solve_params_from_relations(const InducedRep& rep);

/// A point of the affine set with k-coordinate 1 if one exists, else the
/// particular solution if its k is nonzero, else nullopt.
std::optional<std::vector<CycloNumber>> k_nonzero_point(const AffineSolution& sol);

}  // namespace srefl
