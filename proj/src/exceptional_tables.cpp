#include "srefl/groups.hpp"

// Character tables of the three binary polyhedral groups, embedded as
// constants. Classes are ordered by element order, then class size.
// build_group re-validates orthogonality and the dimension sums before any
// of this data is used, so a transcription slip cannot pass silently.

namespace srefl {

namespace {

struct TableEntry {
    // value = a + b * u where u is the group's irrationality
    // (T: u = omega = zeta_3; O: u = sqrt(2); I: u = golden ratio phi)
    int a, b;
};

GroupData assemble(GroupSpec spec, long order, long conductor,
                   const std::vector<std::pair<std::string, long>>& classes,
                   const std::vector<std::vector<TableEntry>>& rows,
                   const CycloNumber& u, long taut_index,
                   const std::vector<std::string>& names) {
    GroupData g;
    g.spec = spec;
    g.order = order;
    g.conductor = conductor;
    for (const auto& [rep, size] : classes) g.classes.push_back({rep, size});
    const long nu = g.num_classes();
    g.char_table = CycloMatrix(nu, nu, conductor);
    for (long h = 0; h < nu; ++h)
        for (long s = 0; s < nu; ++s) {
            const TableEntry& e = rows[h][s];
            g.char_table.set(h, s,
                             CycloNumber::from_rational(e.a, conductor) + Rational(e.b) * u);
        }
    g.chi_L.resize(nu);
    for (long s = 0; s < nu; ++s) g.chi_L[s] = g.char_table.at(taut_index, s);
    g.taut_index = taut_index;
    g.irrep_names = names;
    return g;
}

GroupData binary_tetrahedral() {
    // u = omega = zeta_3; omega^2 = -1 - omega
    const long m = 3;
    CycloNumber w = CycloNumber::zeta(3);
    auto W = TableEntry{0, 1};    // omega
    auto W2 = TableEntry{-1, -1}; // omega^2
    auto nW = TableEntry{0, -1};
    auto nW2 = TableEntry{1, 1};
    std::vector<std::pair<std::string, long>> classes = {
        {"e", 1}, {"-e", 1}, {"3a", 4}, {"3b", 4}, {"4a", 6}, {"6a", 4}, {"6b", 4}};
    std::vector<std::vector<TableEntry>> rows = {
        {{1,0},{1,0},{1,0},{1,0},{1,0},{1,0},{1,0}},
        {{1,0},{1,0},W,W2,{1,0},W,W2},
        {{1,0},{1,0},W2,W,{1,0},W2,W},
        {{2,0},{-2,0},{-1,0},{-1,0},{0,0},{1,0},{1,0}},   // tautological
        {{2,0},{-2,0},nW,nW2,{0,0},W,W2},
        {{2,0},{-2,0},nW2,nW,{0,0},W2,W},
        {{3,0},{3,0},{0,0},{0,0},{-1,0},{0,0},{0,0}}};
    return assemble({GroupFamily::BinaryTetrahedral, 0}, 24, m, classes, rows, w, 3,
                    {"triv", "w", "w2", "L", "Lw", "Lw2", "Y3"});
}

GroupData binary_octahedral() {
    // u = sqrt(2) = zeta_8 + zeta_8^-1
    const long m = 8;
    CycloNumber u = CycloNumber::zeta(8) + CycloNumber::zeta(8, -1);
    std::vector<std::pair<std::string, long>> classes = {
        {"e", 1}, {"-e", 1}, {"3a", 8}, {"4a", 6}, {"4b", 12}, {"6a", 8}, {"8a", 6}, {"8b", 6}};
    std::vector<std::vector<TableEntry>> rows = {
        {{1,0},{1,0},{1,0},{1,0},{1,0},{1,0},{1,0},{1,0}},
        {{1,0},{1,0},{1,0},{1,0},{-1,0},{1,0},{-1,0},{-1,0}},
        {{2,0},{2,0},{-1,0},{2,0},{0,0},{-1,0},{0,0},{0,0}},
        {{2,0},{-2,0},{-1,0},{0,0},{0,0},{1,0},{0,1},{0,-1}},  // tautological
        {{2,0},{-2,0},{-1,0},{0,0},{0,0},{1,0},{0,-1},{0,1}},
        {{3,0},{3,0},{0,0},{-1,0},{-1,0},{0,0},{1,0},{1,0}},
        {{3,0},{3,0},{0,0},{-1,0},{1,0},{0,0},{-1,0},{-1,0}},
        {{4,0},{-4,0},{1,0},{0,0},{0,0},{-1,0},{0,0},{0,0}}};
    return assemble({GroupFamily::BinaryOctahedral, 0}, 48, m, classes, rows, u, 3,
                    {"triv", "sgn", "Y2", "L", "Lsgn", "Y3", "Y3sgn", "Y4"});
}

GroupData binary_icosahedral() {
    // u = phi = (1 + sqrt(5))/2 = -zeta_5^2 - zeta_5^3; note 1 - phi = phi'
    const long m = 5;
    CycloNumber u = -(CycloNumber::zeta(5, 2) + CycloNumber::zeta(5, 3));
    auto P = TableEntry{0, 1};     // phi
    auto Q = TableEntry{1, -1};    // phi' = 1 - phi
    auto nP = TableEntry{0, -1};
    auto nQ = TableEntry{-1, 1};
    std::vector<std::pair<std::string, long>> classes = {
        {"e", 1}, {"-e", 1}, {"3a", 20}, {"4a", 30},
        {"5a", 12}, {"5b", 12}, {"6a", 20}, {"10a", 12}, {"10b", 12}};
    std::vector<std::vector<TableEntry>> rows = {
        {{1,0},{1,0},{1,0},{1,0},{1,0},{1,0},{1,0},{1,0},{1,0}},
        {{2,0},{-2,0},{-1,0},{0,0},nQ,nP,{1,0},P,Q},    // tautological
        {{2,0},{-2,0},{-1,0},{0,0},nP,nQ,{1,0},Q,P},
        {{3,0},{3,0},{0,0},{-1,0},Q,P,{0,0},P,Q},
        {{3,0},{3,0},{0,0},{-1,0},P,Q,{0,0},Q,P},
        {{4,0},{4,0},{1,0},{0,0},{-1,0},{-1,0},{1,0},{-1,0},{-1,0}},
        {{4,0},{-4,0},{1,0},{0,0},{-1,0},{-1,0},{-1,0},{1,0},{1,0}},
        {{5,0},{5,0},{-1,0},{1,0},{0,0},{0,0},{-1,0},{0,0},{0,0}},
        {{6,0},{-6,0},{0,0},{0,0},{1,0},{1,0},{0,0},{-1,0},{-1,0}}};
    return assemble({GroupFamily::BinaryIcosahedral, 0}, 120, m, classes, rows, u, 1,
                    {"triv", "L", "L2", "Y3", "Y3b", "Y4", "Y4b", "Y5", "Y6"});
}

}  // namespace

GroupData build_exceptional(GroupFamily family) {
    switch (family) {
        case GroupFamily::BinaryTetrahedral: return binary_tetrahedral();
        case GroupFamily::BinaryOctahedral: return binary_octahedral();
        case GroupFamily::BinaryIcosahedral: return binary_icosahedral();
        default: throw std::logic_error("not an exceptional family");
    }
}

}  // namespace srefl
