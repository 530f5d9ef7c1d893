#include "srefl/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace srefl {

std::string GroupSpec::str() const {
    switch (family) {
        case GroupFamily::Cyclic: return "C" + std::to_string(param);
        case GroupFamily::Dicyclic: return "D" + std::to_string(param);
        case GroupFamily::BinaryTetrahedral: return "T";
        case GroupFamily::BinaryOctahedral: return "O";
        case GroupFamily::BinaryIcosahedral: return "I";
    }
    return "?";
}

GroupSpec parse_group_spec(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty group spec");
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
    auto numeric_tail = [&](const char* what) -> long {
        if (t.size() < 2 || !std::all_of(t.begin() + 1, t.end(),
                                         [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument(std::string("bad ") + what + " spec: " + text);
        return std::stol(t.substr(1));
    };
    if (t == "T") return {GroupFamily::BinaryTetrahedral, 0};
    if (t == "O") return {GroupFamily::BinaryOctahedral, 0};
    if (t == "I") return {GroupFamily::BinaryIcosahedral, 0};
    if (t[0] == 'C') {
        long m = numeric_tail("cyclic");
        if (m == 1)
            throw std::invalid_argument(
                "trivial group rejected: the algebra for Gamma = {e} contains a copy of the "
                "Weyl algebra and has no finite-dimensional representations");
        if (m < 1) throw std::invalid_argument("cyclic order must be >= 2");
        return {GroupFamily::Cyclic, m};
    }
    if (t[0] == 'D') {
        long q = numeric_tail("dicyclic");
        if (q < 2) throw std::invalid_argument("dicyclic parameter must be >= 2 (|Gamma| = 4q >= 8)");
        return {GroupFamily::Dicyclic, q};
    }
    throw std::invalid_argument("unknown group spec: " + text);
}

std::string GroupElement::word() const {
    std::string w;
    if (s == 0 && t == 0) return "e";
    if (s == 1) w = "a";
    else if (s > 1) w = "a^" + std::to_string(s);
    if (t) w += w.empty() ? "b" : "*b";
    return w;
}

long GroupData::dim(long h) const {
    Rational d = char_table.at(h, 0).to_rational();
    return static_cast<long>(numerator(d));
}

long GroupData::trivial_index() const {
    for (long h = 0; h < num_classes(); ++h) {
        bool all_one = true;
        for (long s = 0; s < num_classes(); ++s)
            if (char_table.at(h, s) != CycloNumber::one(conductor)) { all_one = false; break; }
        if (all_one) return h;
    }
    throw std::logic_error("no trivial character row");
}

namespace {

void validate(const GroupData& g) {
    const long nu = g.num_classes();
    long sz = 0;
    for (const auto& c : g.classes) sz += c.size;
    if (sz != g.order) throw std::logic_error("class sizes do not sum to |Gamma|");
    long dimsq = 0;
    for (long h = 0; h < nu; ++h) dimsq += g.dim(h) * g.dim(h);
    if (dimsq != g.order) throw std::logic_error("sum of dim^2 != |Gamma|");
    // row orthogonality, exact
    for (long h = 0; h < nu; ++h)
        for (long h2 = 0; h2 <= h; ++h2) {
            CycloNumber acc = CycloNumber::zero(g.conductor);
            for (long s = 0; s < nu; ++s)
                acc += Rational(g.classes[s].size) *
                       (g.char_table.at(h, s) * g.char_table.at(h2, s).conj());
            CycloNumber expect = CycloNumber::from_rational(h == h2 ? Rational(g.order) : 0, g.conductor);
            if (acc != expect) throw std::logic_error("character table fails row orthogonality");
        }
    // L is self-dual, so chi_L must be real on every class
    for (long s = 0; s < nu; ++s)
        if (g.chi_L[s] != g.chi_L[s].conj())
            throw std::logic_error("tautological character is not real-valued");
    g.trivial_index();
}

GroupData build_cyclic(long m) {
    GroupData g;
    g.spec = {GroupFamily::Cyclic, m};
    g.order = m;
    g.conductor = m;
    for (long s = 0; s < m; ++s) {
        GroupElement e;
        e.s = s;
        g.classes.push_back({e.word(), 1});
    }
    // chi_h(alpha^s) = eps^(h s), rows h = 1..m in table order (trivial last)
    g.char_table = CycloMatrix(m, m, m);
    for (long h = 1; h <= m; ++h) {
        for (long s = 0; s < m; ++s)
            g.char_table.set(h - 1, s, CycloNumber::zeta(m, h * s));
        g.irrep_names.push_back("chi" + std::to_string(h));
    }
    // L = diag(eps, eps^-1) splits as chi_1 + chi_(m-1)
    g.chi_L.resize(m);
    for (long s = 0; s < m; ++s)
        g.chi_L[s] = CycloNumber::zeta(m, s) + CycloNumber::zeta(m, -s);
    g.taut_index = std::nullopt;
    return g;
}

GroupData build_dicyclic(long q) {
    const long order = 4 * q;
    const long m = std::lcm(2 * q, 4L);
    const long nu = q + 3;
    GroupData g;
    g.spec = {GroupFamily::Dicyclic, q};
    g.order = order;
    g.conductor = m;

    auto eps = [&](long k) { return CycloNumber::zeta(2 * q, k).promoted(m); };
    const CycloNumber one = CycloNumber::one(m);
    const CycloNumber iu = CycloNumber::zeta(4).promoted(m);

    // class order: e, alpha^{+-1}, ..., alpha^{+-(q-1)}, alpha^q, beta-even, beta-odd
    g.classes.push_back({"e", 1});
    for (long s = 1; s < q; ++s) g.classes.push_back({"a^+-" + std::to_string(s), 2});
    g.classes.push_back({"a^" + std::to_string(q), 1});
    g.classes.push_back({"b*a^even", q});
    g.classes.push_back({"b*a^odd", q});

    g.char_table = CycloMatrix(nu, nu, m);
    // two-dimensional rows first, as in the printed tables
    for (long h = 1; h <= q - 1; ++h) {
        long row = h - 1;
        g.char_table.set(row, 0, CycloNumber::from_rational(2, m));
        for (long s = 1; s < q; ++s) g.char_table.set(row, s, eps(s * h) + eps(-s * h));
        g.char_table.set(row, q, CycloNumber::from_rational(h % 2 ? -2 : 2, m));
        // beta classes: 0
        g.irrep_names.push_back("d" + std::to_string(h));
    }
    // four one-dimensional rows: determined by (rho(alpha), rho(beta))
    const bool q_even = (q % 2 == 0);
    const CycloNumber rb = q_even ? -one : (-one) * iu;  // rho(beta) for the first of the last pair
    struct OneDim { CycloNumber ra, rbv; };
    std::vector<OneDim> ones = {{one, one}, {one, -one}, {-one, rb}, {-one, CycloNumber::zero(m) - rb}};
    for (size_t k = 0; k < ones.size(); ++k) {
        long row = q - 1 + static_cast<long>(k);
        const auto& [ra, rbv] = ones[k];
        g.char_table.set(row, 0, one);
        for (long s = 1; s < q; ++s)
            g.char_table.set(row, s, s % 2 ? ra : one);
        g.char_table.set(row, q, q % 2 ? ra : one);
        g.char_table.set(row, q + 1, rbv);        // beta * alpha^even
        g.char_table.set(row, q + 2, rbv * ra);   // beta * alpha^odd
        g.irrep_names.push_back("d" + std::to_string(q - 1 + k + 1));
    }
    g.chi_L.resize(nu);
    for (long s = 0; s < nu; ++s) g.chi_L[s] = g.char_table.at(0, s);
    g.taut_index = 0;
    return g;
}

}  // namespace

GroupData build_exceptional(GroupFamily family);  // exceptional_tables.cpp

GroupData build_group(const GroupSpec& spec) {
    GroupData g;
    switch (spec.family) {
        case GroupFamily::Cyclic:
            if (spec.param < 2)
                throw std::invalid_argument(
                    "trivial group rejected: the algebra for Gamma = {e} contains a copy of the "
                    "Weyl algebra and has no finite-dimensional representations");
            g = build_cyclic(spec.param);
            break;
        case GroupFamily::Dicyclic:
            if (spec.param < 2) throw std::invalid_argument("dicyclic parameter must be >= 2");
            g = build_dicyclic(spec.param);
            break;
        default:
            g = build_exceptional(spec.family);
            break;
    }
    validate(g);
    return g;
}

std::vector<GroupElement> enumerate_elements(const GroupData& g) {
    std::vector<GroupElement> out;
    if (g.spec.family == GroupFamily::Cyclic) {
        const long m = g.order;
        for (long s = 0; s < m; ++s) {
            GroupElement e;
            e.s = s;
            e.t = 0;
            e.class_index = s;
            e.taut = CycloMatrix(2, 2, m);
            e.taut.set(0, 0, CycloNumber::zeta(m, s));
            e.taut.set(1, 1, CycloNumber::zeta(m, -s));
            out.push_back(std::move(e));
        }
        return out;
    }
    if (g.spec.family == GroupFamily::Dicyclic) {
        const long q = g.spec.param;
        const long m = g.conductor;
        auto eps = [&](long k) { return CycloNumber::zeta(2 * q, k).promoted(m); };
        // alpha -> diag(eps, eps^-1); beta -> [[0, eps^q],[1, 0]] = [[0,-1],[1,0]]
        for (int t = 0; t <= 1; ++t)
            for (long s = 0; s < 2 * q; ++s) {
                GroupElement e;
                e.s = s;
                e.t = t;
                if (t == 0)
                    e.class_index = (s == 0) ? 0 : (s == q ? q : std::min(s, 2 * q - s));
                else
                    e.class_index = (s % 2 == 0) ? q + 1 : q + 2;
                e.taut = CycloMatrix(2, 2, m);
                if (t == 0) {
                    e.taut.set(0, 0, eps(s));
                    e.taut.set(1, 1, eps(-s));
                } else {
                    // alpha^s * beta
                    e.taut.set(0, 1, eps(s + q));
                    e.taut.set(1, 0, eps(-s));
                }
                out.push_back(std::move(e));
            }
        return out;
    }
    throw std::invalid_argument("element-level enumeration unsupported for exceptional groups");
}

CycloNumber central_class_scalar(const GroupData& g, long h, long s) {
    if (h < 0 || h >= g.num_classes() || s < 0 || s >= g.num_classes())
        throw std::out_of_range("irrep or class index out of range");
    return (Rational(g.classes[s].size) * g.char_table.at(h, s)) /
           CycloNumber::from_rational(g.dim(h), g.conductor);
}

}  // namespace srefl
