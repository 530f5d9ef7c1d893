#include "srefl/mckay.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace srefl {

long tensor_multiplicity_with_L(const GroupData& g, long h, long hprime) {
    const long nu = g.num_classes();
    if (h < 0 || h >= nu || hprime < 0 || hprime >= nu)
        throw std::out_of_range("irrep index out of range");
    CycloNumber acc = CycloNumber::zero(g.conductor);
    for (long s = 0; s < nu; ++s)
        acc += Rational(g.classes[s].size) *
               (g.chi_L[s] * g.char_table.at(hprime, s) * g.char_table.at(h, s).conj());
    CycloNumber mult = acc / CycloNumber::from_rational(g.order, g.conductor);
    if (!mult.is_rational())
        throw std::logic_error("non-integral tensor multiplicity: corrupted character data");
    Rational r = mult.to_rational();
    if (denominator(r) != 1 || r < 0)
        throw std::logic_error("non-integral tensor multiplicity: corrupted character data");
    return static_cast<long>(numerator(r));
}

namespace {

struct Template {
    std::string name;
    std::vector<long> dims;
    std::vector<std::vector<long>> mult;
};

Template make_template(const std::string& name, std::vector<long> dims,
                       const std::vector<std::tuple<long, long, long>>& edges) {
    Template t;
    t.name = name;
    t.dims = std::move(dims);
    long n = static_cast<long>(t.dims.size());
    t.mult.assign(n, std::vector<long>(n, 0));
    for (auto [a, b, m] : edges) {
        t.mult[a][b] = m;
        t.mult[b][a] = m;
    }
    return t;
}

Template affine_A(long n) {  // n+1 vertices, all label 1
    std::vector<long> dims(n + 1, 1);
    std::vector<std::tuple<long, long, long>> edges;
    if (n == 1) {
        edges.push_back({0, 1, 2});  // double edge
    } else {
        for (long i = 0; i <= n; ++i) edges.push_back({i, (i + 1) % (n + 1), 1});
    }
    return make_template("A~" + std::to_string(n), std::move(dims), edges);
}

Template affine_D(long n) {  // n+1 vertices: chain of 2's with forked 1's
    // vertices: 0,1 outer; 2..n-2 the chain; n-1,n outer
    std::vector<long> dims(n + 1, 2);
    dims[0] = dims[1] = dims[n - 1] = dims[n] = 1;
    std::vector<std::tuple<long, long, long>> edges = {{0, 2, 1}, {1, 2, 1}};
    for (long i = 2; i < n - 2; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({n - 2, n - 1, 1});
    edges.push_back({n - 2, n, 1});
    return make_template("D~" + std::to_string(n), std::move(dims), edges);
}

Template affine_E(long n) {
    if (n == 6)
        // star: center 3, three arms 2-1
        return make_template("E~6", {3, 2, 2, 2, 1, 1, 1},
                             {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}, {2, 5, 1}, {3, 6, 1}});
    if (n == 7)
        // 1-2-3-4-3-2-1 with a 2 under the center
        return make_template("E~7", {1, 2, 3, 4, 3, 2, 1, 2},
                             {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {3, 7, 1}});
    // 1-2-3-4-5-6-4-2 with a 3 under the 6
    return make_template("E~8", {1, 2, 3, 4, 5, 6, 4, 2, 3},
                         {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {5, 8, 1}});
}

// Label-respecting graph isomorphism graph -> tmpl, requiring the extending
// vertex to land on a label-1 template vertex. Backtracking is fine at
// nu <= 13.
bool isomorphic(const McKayGraph& graph, const Template& tmpl) {
    const long n = graph.num_vertices();
    if (static_cast<long>(tmpl.dims.size()) != n) return false;
    std::vector<long> map(n, -1), used(n, 0);

    auto compatible = [&](long v, long tv) {
        if (graph.dims[v] != tmpl.dims[tv]) return false;
        if (v == graph.extending && tmpl.dims[tv] != 1) return false;
        for (long u = 0; u < n; ++u)
            if (map[u] >= 0 && graph.mult[v][u] != tmpl.mult[tv][map[u]]) return false;
        return true;
    };
    std::function<bool(long)> assign = [&](long v) -> bool {
        if (v == n) return true;
        for (long tv = 0; tv < n; ++tv) {
            if (used[tv] || !compatible(v, tv)) continue;
            map[v] = tv;
            used[tv] = 1;
            if (assign(v + 1)) return true;
            map[v] = -1;
            used[tv] = 0;
        }
        return false;
    };
    return assign(0);
}

}  // namespace

McKayGraph build_mckay(const GroupData& g) {
    const long nu = g.num_classes();
    McKayGraph graph;
    graph.dims.resize(nu);
    graph.mult.assign(nu, std::vector<long>(nu, 0));
    for (long h = 0; h < nu; ++h) graph.dims[h] = g.dim(h);
    for (long h = 0; h < nu; ++h)
        for (long h2 = 0; h2 <= h; ++h2) {
            long m = tensor_multiplicity_with_L(g, h, h2);
            long mt = tensor_multiplicity_with_L(g, h2, h);
            if (m != mt) throw std::logic_error("McKay multiplicities not symmetric");
            if (h == h2 && m != 0) throw std::logic_error("McKay graph has a loop vertex");
            graph.mult[h][h2] = graph.mult[h2][h] = m;
        }
    // affine null vector: 2 d_h = sum_h' m_{hh'} d_h'
    for (long h = 0; h < nu; ++h) {
        long acc = 0;
        for (long h2 = 0; h2 < nu; ++h2) acc += graph.mult[h][h2] * graph.dims[h2];
        if (acc != 2 * graph.dims[h])
            throw std::logic_error("affine null-vector property fails");
    }
    graph.extending = g.trivial_index();

    std::vector<Template> candidates;
    candidates.push_back(affine_A(nu - 1));
    if (nu >= 5) candidates.push_back(affine_D(nu - 1));
    if (nu == 7) candidates.push_back(affine_E(6));
    if (nu == 8) candidates.push_back(affine_E(7));
    if (nu == 9) candidates.push_back(affine_E(8));
    for (const auto& t : candidates)
        if (isomorphic(graph, t)) {
            graph.diagram = t.name;
            return graph;
        }
    throw std::logic_error("McKay graph matches no affine template");
}

bool is_adjacent(const McKayGraph& graph, long h, long hprime) {
    if (h == hprime) throw std::invalid_argument("loop adjacency query is ill-posed");
    return graph.mult[h][hprime] > 0;
}

long max_independent_set(const McKayGraph& graph) {
    const long n = graph.num_vertices();
    long best = 0;
    for (long mask = 1; mask < (1L << n); ++mask) {
        bool ok = true;
        for (long a = 0; a < n && ok; ++a)
            if (mask >> a & 1)
                for (long b = a + 1; b < n && ok; ++b)
                    if ((mask >> b & 1) && graph.mult[a][b] > 0) ok = false;
        if (ok) best = std::max<long>(best, __builtin_popcountl(mask));
    }
    return best;
}

std::vector<std::vector<long>> independent_sets(const McKayGraph& graph, long max_size) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    const long n = graph.num_vertices();
    std::function<void(long)> grow = [&](long start) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<long>(cur.size()) == max_size) return;
        for (long v = start; v < n; ++v) {
            bool ok = true;
            for (long u : cur)
                if (graph.mult[u][v] > 0) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            grow(v + 1);
            cur.pop_back();
        }
    };
    grow(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace srefl
