#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srefl/matrix.hpp"

namespace srefl {

enum class GroupFamily { Cyclic, Dicyclic, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/// Which finite subgroup of SL(2,C) to build. `param` is the order for
/// cyclic groups and q for dicyclic (|Gamma| = 4q).
struct GroupSpec {
    GroupFamily family;
    long param = 0;

    std::string str() const;
};

/// Parses "C<m>", "D<q>", "T", "O", "I" (case-insensitive). Throws
/// std::invalid_argument on anything else, including C1 (the trivial group
/// gives an algebra containing a Weyl algebra, so nothing finite-dimensional
/// exists downstream).
GroupSpec parse_group_spec(const std::string& text);

struct ConjClass {
    std::string representative;  // normal-form word, for display
    long size = 0;
};

/// Group element in normal form alpha^s beta^t, with its tautological
/// 2x2 matrix. Cyclic groups use t = 0 throughout.
struct GroupElement {
    long s = 0;
    int t = 0;
    long class_index = 0;  // index into GroupData::classes
    CycloMatrix taut;      // 2x2, determinant 1

    std::string word() const;
};

struct GroupData {
    GroupSpec spec;
    long order = 0;
    long conductor = 0;  // every character value lives in Q(zeta_conductor)
    std::vector<ConjClass> classes;
    CycloMatrix char_table;              // nu x nu, chi_h(C_s)
    std::vector<CycloNumber> chi_L;      // tautological character per class
    std::optional<long> taut_index;      // irrep index of L when L is irreducible
    std::vector<std::string> irrep_names;

    long num_classes() const { return static_cast<long>(classes.size()); }
    long dim(long h) const;          // chi_h(C_1), as a plain integer
    long trivial_index() const;      // row with chi == 1 everywhere
};

/// Builds class data and the exact character table; validates the
/// orthogonality relations, |Gamma| = sum |C_s| and |Gamma| = sum dim^2
/// before returning.
GroupData build_group(const GroupSpec& spec);

/// All |Gamma| elements with tautological matrices and class membership.
/// Only cyclic and dicyclic groups are enumerable (see verifier limits).
std::vector<GroupElement> enumerate_elements(const GroupData& g);

/// |C_s| chi_h(C_s) / dim Y_h: the scalar of the central element
/// sum_{gamma in C_s} gamma acting in Y_h.
CycloNumber central_class_scalar(const GroupData& g, long h, long s);

}  // namespace srefl
