#pragma once

#include <string>
#include <vector>

#include "srefl/groups.hpp"

namespace srefl {

/// McKay graph of a finite SL(2,C) subgroup: vertices are irreducibles,
/// edge multiplicities are tensor multiplicities with the tautological
/// representation. Always one of the affine diagrams.
struct McKayGraph {
    std::vector<long> dims;                     // vertex labels d_h
    std::vector<std::vector<long>> mult;        // symmetric, zero diagonal
    std::string diagram;                        // "A~n", "D~n", "E~6", "E~7", "E~8"
    long extending = 0;                         // trivial representation

    long num_vertices() const { return static_cast<long>(dims.size()); }
};

/// Multiplicity of Y_h in Y_h' (x) L, by character inner product; throws
/// if the result is not a non-negative integer (corrupt character data).
long tensor_multiplicity_with_L(const GroupData& g, long h, long hprime);

/// Full multiplicity matrix plus identification of the affine diagram by
/// label-respecting graph isomorphism against the five templates.
McKayGraph build_mckay(const GroupData& g);

/// True iff m_{hh'} > 0. Loop queries (h == h') are ill-posed and throw.
bool is_adjacent(const McKayGraph& graph, long h, long hprime);

/// All maximal-size independent sets are equivalent for our purposes; this
/// returns the maximum cardinality (vertex count is small, exhaustive).
long max_independent_set(const McKayGraph& graph);

/// All independent subsets of the vertex set with size in [1, max_size],
/// in lexicographic order.
std::vector<std::vector<long>> independent_sets(const McKayGraph& graph, long max_size);

}  // namespace srefl
