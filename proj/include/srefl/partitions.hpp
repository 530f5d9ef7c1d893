#pragma once

#include <optional>
#include <vector>

#include "srefl/rational.hpp"

namespace srefl {

/// Weakly decreasing list of positive parts; the empty vector is the
/// partition of 0.
using Partition = std::vector<long>;

struct RectShape {
    long a = 0;  // height
    long b = 0;  // width
};

bool is_valid_partition(const Partition& p);
long partition_size(const Partition& p);

/// All partitions of n in reverse-lexicographic order ((n) first,
/// (1,...,1) last). n < 0 throws.
std::vector<Partition> enumerate_partitions(long n);

/// (a, b) when all parts are equal (b repeated a times); (0, 0) for the
/// empty partition; nullopt otherwise.
std::optional<RectShape> rectangle_of(const Partition& p);

/// Sum over cells of (column - row), 0-indexed.
long content(const Partition& p);

/// Number of removable corners (distinct part sizes).
long num_corners(const Partition& p);

/// Symmetric group character chi_lambda on the class of cycle type mu,
/// by rim-hook recursion. Requires |lambda| = |mu|.
long mn_character(const Partition& lambda, const Partition& mu);

/// dim W_lambda = number of standard Young tableaux.
long partition_dimension(const Partition& lambda);

/// Multiplicity of W_lambda in h (x) W_lambda, where h is the reflection
/// representation; equals corners - 1.
long refl_hom_multiplicity(const Partition& lambda);

/// Standard tableaux in a fixed deterministic order. tableau[k] = (row, col)
/// of the entry k+1.
using Tableau = std::vector<std::pair<long, long>>;
std::vector<Tableau> standard_tableaux(const Partition& lambda);

using RationalMatrix = std::vector<std::vector<Rational>>;
using RealMatrix = std::vector<std::vector<double>>;

/// Young's seminormal form: exact rational matrices for the adjacent
/// transpositions s_1..s_{N-1}. Non-orthogonal but defined over Q.
std::vector<RationalMatrix> young_seminormal_gens(const Partition& lambda);

/// Young's orthogonal form (axial-distance construction), in floats.
std::vector<RealMatrix> young_orthogonal_gens(const Partition& lambda);

/// Matrix of an arbitrary permutation (0-based image vector) as a product
/// of seminormal generators.
RationalMatrix seminormal_matrix(const Partition& lambda, const std::vector<long>& perm);
RealMatrix orthogonal_matrix(const Partition& lambda, const std::vector<long>& perm);

struct ScalarCheck {
    bool is_scalar = false;
    std::optional<Rational> scalar;
};

/// Whether sum_{j >= 2} s_{1j} acts as a scalar on W_lambda, and the scalar
/// when it does (exact, via the seminormal form). Partitions with at most
/// one cell are vacuously scalar 0.
ScalarCheck transposition_sum_check(const Partition& lambda);

}  // namespace srefl
