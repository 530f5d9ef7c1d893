#include "srefl/classify.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace srefl {

long ReprCandidate::total() const {
    return std::accumulate(type.begin(), type.end(), 0L);
}

std::vector<long> ReprCandidate::active_blocks() const {
    std::vector<long> out;
    for (size_t h = 0; h < type.size(); ++h)
        if (type[h] > 0) out.push_back(static_cast<long>(h));
    return out;
}

namespace {

// Compositions of n into `slots` positive parts, largest-first lexicographic.
std::vector<std::vector<long>> positive_compositions(long n, long slots) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(slots);
    std::function<void(long, long)> grow = [&](long idx, long rest) {
        if (idx == slots - 1) {
            cur[idx] = rest;
            out.push_back(cur);
            return;
        }
        for (long v = rest - (slots - 1 - idx); v >= 1; --v) {
            cur[idx] = v;
            grow(idx + 1, rest - v);
        }
    };
    if (slots >= 1 && n >= slots) grow(0, n);
    return out;
}

std::vector<Partition> rectangular_partitions(long n) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n))
        if (rectangle_of(p)) out.push_back(p);
    return out;
}

Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<SupportAssignment> admissible_supports(const McKayGraph& graph, long N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    std::vector<SupportAssignment> out;
    for (const auto& support : independent_sets(graph, N))
        for (const auto& sizes : positive_compositions(N, static_cast<long>(support.size())))
            out.push_back({support, sizes});
    return out;
}

HyperplaneSystem hyperplane_system(const GroupData& g, const ReprCandidate& candidate) {
    const long nu = g.num_classes();
    if (static_cast<long>(candidate.type.size()) != nu ||
        candidate.parts.size() != candidate.type.size())
        throw std::invalid_argument("candidate shape does not match the group");
    auto active = candidate.active_blocks();

    HyperplaneSystem sys;
    sys.variables.push_back("k");
    for (long s = 1; s < nu; ++s) sys.variables.push_back("c" + std::to_string(s + 1));
    sys.A = CycloMatrix(active.size(), nu, g.conductor);
    sys.rows_for = active;

    for (size_t row = 0; row < active.size(); ++row) {
        long h = active[row];
        const Partition& lam = candidate.parts[h];
        if (partition_size(lam) != candidate.type[h])
            throw std::invalid_argument("partition size does not match its block");
        auto rect = rectangle_of(lam);
        if (!rect) throw std::invalid_argument("Thm 3.1 I i) violated: block partition is not a rectangle");
        sys.A.set(row, 0,
                  CycloNumber::from_rational(Rational((rect->b - rect->a) * g.order, 2), g.conductor));
        for (long s = 1; s < nu; ++s)
            sys.A.set(row, s, Rational(g.classes[s].size) * g.char_table.at(h, s));
        sys.rhs.push_back(CycloNumber::from_rational(-g.dim(h), g.conductor));
    }
    return sys;
}

std::vector<ExtendableFamily> classify_all(const GroupData& g, long N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    const long nu = g.num_classes();
    McKayGraph graph = build_mckay(g);
    std::vector<ExtendableFamily> out;

    for (const auto& assign : admissible_supports(graph, N)) {
        const long r = static_cast<long>(assign.support.size());
        // all tuples of rectangular partitions over the support
        std::vector<std::vector<Partition>> choices(r);
        for (long i = 0; i < r; ++i) choices[i] = rectangular_partitions(assign.sizes[i]);
        std::vector<size_t> pick(r, 0);
        while (true) {
            ReprCandidate cand;
            cand.type.assign(nu, 0);
            cand.parts.assign(nu, {});
            for (long i = 0; i < r; ++i) {
                cand.type[assign.support[i]] = assign.sizes[i];
                cand.parts[assign.support[i]] = choices[i][pick[i]];
            }

            ExtendableFamily fam;
            fam.candidate = cand;
            fam.rects.assign(nu, RectShape{0, 0});
            for (long h : cand.active_blocks()) fam.rects[h] = *rectangle_of(cand.parts[h]);

            HyperplaneSystem sys = hyperplane_system(g, cand);
            fam.family = solve_affine(sys.A, sys.rhs, sys.variables);
            fam.rank = fam.family.rank;
            if (fam.family.empty) throw std::logic_error("hyperplane system inconsistent (Prop 4.5 breach)");
            if (fam.rank != static_cast<size_t>(r))
                throw std::logic_error("hyperplane system rank != number of active blocks");

            // induced dimension M * dim W * dim Y
            Integer dim = factorial(N);
            for (long h : cand.active_blocks()) {
                dim /= factorial(cand.type[h]);
                dim *= partition_dimension(cand.parts[h]);
                for (long j = 0; j < cand.type[h]; ++j) dim *= g.dim(h);
            }
            fam.dim_induced = dim;

            // does some solution point have k = 0?
            bool kernel_moves_k = false;
            for (const auto& vec : fam.family.kernel)
                if (!vec[0].is_zero()) kernel_moves_k = true;
            fam.contains_k0 = kernel_moves_k || fam.family.particular[0].is_zero();

            out.push_back(std::move(fam));

            long i = r - 1;
            for (; i >= 0; --i) {
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
            }
            if (i < 0) break;
        }
    }
    return out;
}

long solution_dimension(const ExtendableFamily& family) {
    long nu = static_cast<long>(family.family.variables.size());
    long dim = static_cast<long>(family.family.dimension());
    if (dim != nu - static_cast<long>(family.rank))
        throw std::logic_error("solution dimension != nu - r");
    return dim;
}

std::vector<ReprCandidate> all_candidates(const GroupData& g, long N) {
    const long nu = g.num_classes();
    std::vector<ReprCandidate> out;
    std::vector<long> type(nu, 0);
    std::function<void(long, long)> types = [&](long h, long rest) {
        if (h == nu - 1) {
            type[h] = rest;
            // all partition tuples for this type
            std::vector<long> active;
            for (long i = 0; i < nu; ++i)
                if (type[i] > 0) active.push_back(i);
            std::vector<std::vector<Partition>> choices(active.size());
            for (size_t i = 0; i < active.size(); ++i)
                choices[i] = enumerate_partitions(type[active[i]]);
            std::vector<size_t> pick(active.size(), 0);
            while (true) {
                ReprCandidate cand;
                cand.type = type;
                cand.parts.assign(nu, {});
                for (size_t i = 0; i < active.size(); ++i)
                    cand.parts[active[i]] = choices[i][pick[i]];
                out.push_back(std::move(cand));
                long i = static_cast<long>(active.size()) - 1;
                for (; i >= 0; --i) {
                    if (++pick[i] < choices[i].size()) break;
                    pick[i] = 0;
                }
                if (i < 0) break;
            }
            return;
        }
        for (long v = rest; v >= 0; --v) {
            type[h] = v;
            types(h + 1, rest - v);
        }
    };
    types(0, N);
    return out;
}

}  // namespace srefl
