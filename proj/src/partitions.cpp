#include "srefl/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace srefl {

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

long partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

std::vector<Partition> enumerate_partitions(long n) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(long, long)> grow = [&](long rest, long maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            grow(rest - p, p);
            cur.pop_back();
        }
    };
    grow(n, n);
    return out;
}

std::optional<RectShape> rectangle_of(const Partition& p) {
    if (p.empty()) return RectShape{0, 0};
    for (long part : p)
        if (part != p[0]) return std::nullopt;
    return RectShape{static_cast<long>(p.size()), p[0]};
}

long content(const Partition& p) {
    long c = 0;
    for (size_t row = 0; row < p.size(); ++row)
        for (long col = 0; col < p[row]; ++col) c += col - static_cast<long>(row);
    return c;
}

long num_corners(const Partition& p) {
    long corners = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (i + 1 == p.size() || p[i + 1] < p[i]) ++corners;
    return corners;
}

namespace {

// Rim-hook recursion on beta-numbers: removing a hook of length t means
// replacing some beta number b by b - t; the sign counts the beta numbers
// jumped over.
long mn_rec(std::vector<long> betas, const Partition& mu, size_t idx) {
    if (idx == mu.size()) return 1;
    long t = mu[idx];
    long total = 0;
    for (size_t i = 0; i < betas.size(); ++i) {
        long target = betas[i] - t;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        long jumped = 0;
        for (long b : betas)
            if (b > target && b < betas[i]) ++jumped;
        std::vector<long> next = betas;
        next[i] = target;
        long sub = mn_rec(std::move(next), mu, idx + 1);
        total += (jumped % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
    if (!is_valid_partition(lambda) || !is_valid_partition(mu))
        throw std::invalid_argument("invalid partition");
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("partition sizes differ");
    std::vector<long> betas(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i)
        betas[i] = lambda[i] + static_cast<long>(lambda.size() - 1 - i);
    return mn_rec(std::move(betas), mu, 0);
}

long partition_dimension(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Partition ones(partition_size(lambda), 1);
    return mn_character(lambda, ones);
}

namespace {

// z_mu = prod k^{m_k} m_k!, the centralizer order; class size = N!/z_mu.
Rational class_size(const Partition& mu, long n) {
    Integer fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    Integer z = 1;
    std::map<long, long> mult;
    for (long p : mu) mult[p]++;
    for (auto [k, m] : mult) {
        for (long i = 0; i < m; ++i) z *= k;
        for (long i = 2; i <= m; ++i) z *= i;
    }
    return Rational(fact, z);
}

}  // namespace

long refl_hom_multiplicity(const Partition& lambda) {
    const long n = partition_size(lambda);
    if (n < 2) throw std::invalid_argument("reflection representation needs N >= 2");
    Integer fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    Rational acc = 0;
    for (const auto& mu : enumerate_partitions(n)) {
        long fixed = static_cast<long>(std::count(mu.begin(), mu.end(), 1L));
        long chi = mn_character(lambda, mu);
        acc += class_size(mu, n) * Rational(fixed - 1) * Rational(chi) * Rational(chi);
    }
    Rational mult = acc / Rational(fact);
    if (denominator(mult) != 1)
        throw std::logic_error("non-integral multiplicity in character inner product");
    return static_cast<long>(numerator(mult));
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    std::vector<Tableau> out;
    const long n = partition_size(lambda);
    std::vector<long> fill(lambda.size(), 0);  // cells used per row
    Tableau cur;
    std::function<void(long)> place = [&](long k) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (size_t row = 0; row < lambda.size(); ++row) {
            if (fill[row] >= lambda[row]) continue;
            if (row > 0 && fill[row] >= fill[row - 1]) continue;
            cur.push_back({static_cast<long>(row), fill[row]});
            fill[row]++;
            place(k + 1);
            fill[row]--;
            cur.pop_back();
        }
    };
    place(0);
    return out;
}

namespace {

// Axial distance of k, k+1 (1-based values) in tableau T.
long axial_distance(const Tableau& T, long k) {
    auto [r1, c1] = T[k - 1];
    auto [r2, c2] = T[k];
    return (c2 - r2) - (c1 - r1);
}

// Generic seminormal/orthogonal generator construction. `coupling` maps the
// axial distance d (> 1) of the lower tableau to the pair of off-diagonal
// entries (upper, lower).
template <typename Scalar, typename DiagFn, typename OffFn>
std::vector<std::vector<std::vector<Scalar>>> young_gens(const Partition& lambda,
                                                         DiagFn diag, OffFn off) {
    const long n = std::max<long>(partition_size(lambda), 1);
    auto tabs = standard_tableaux(lambda);
    const size_t dim = tabs.size();
    std::map<Tableau, size_t> index;
    for (size_t i = 0; i < dim; ++i) index[tabs[i]] = i;

    std::vector<std::vector<std::vector<Scalar>>> gens;
    for (long k = 1; k < n; ++k) {
        std::vector<std::vector<Scalar>> M(dim, std::vector<Scalar>(dim, Scalar(0)));
        for (size_t i = 0; i < dim; ++i) {
            long d = axial_distance(tabs[i], k);
            if (d == 1 || d == -1) {
                M[i][i] = diag(d);  // same row or same column: +-1
                continue;
            }
            if (d < 0) continue;  // handled from the partner with d > 0
            Tableau other = tabs[i];
            std::swap(other[k - 1], other[k]);
            size_t j = index.at(other);
            auto [up, low] = off(d);
            M[i][i] = diag(d);
            M[j][j] = diag(-d);
            // columns are images: s e_i = (1/d) e_i + low * e_j
            M[j][i] = low;
            M[i][j] = up;
        }
        gens.push_back(std::move(M));
    }
    return gens;
}

template <typename Scalar>
std::vector<std::vector<Scalar>> perm_matrix(
    const std::vector<std::vector<std::vector<Scalar>>>& gens, size_t dim,
    std::vector<long> perm) {
    std::vector<std::vector<Scalar>> M(dim, std::vector<Scalar>(dim, Scalar(0)));
    for (size_t i = 0; i < dim; ++i) M[i][i] = Scalar(1);
    // bubble-sort decomposition: perm = product of adjacent swaps
    auto mul = [&](const std::vector<std::vector<Scalar>>& A,
                   const std::vector<std::vector<Scalar>>& B) {
        std::vector<std::vector<Scalar>> C(dim, std::vector<Scalar>(dim, Scalar(0)));
        for (size_t r = 0; r < dim; ++r)
            for (size_t k = 0; k < dim; ++k) {
                if (A[r][k] == Scalar(0)) continue;
                for (size_t c = 0; c < dim; ++c) C[r][c] += A[r][k] * B[k][c];
            }
        return C;
    };
    // write perm as word in s_i, applying swaps right-to-left
    for (size_t pass = 0; pass + 1 < perm.size(); ++pass)
        for (size_t i = 0; i + 1 < perm.size(); ++i)
            if (perm[i] > perm[i + 1]) {
                std::swap(perm[i], perm[i + 1]);
                M = mul(gens[i], M);
            }
    return M;
}

}  // namespace

std::vector<RationalMatrix> young_seminormal_gens(const Partition& lambda) {
    return young_gens<Rational>(
        lambda, [](long d) { return d > 0 ? Rational(1, d) : -Rational(1, -d); },
        [](long d) {
            Rational inv2(1, d * d);
            return std::pair<Rational, Rational>(Rational(1) - inv2, Rational(1));
        });
}

std::vector<RealMatrix> young_orthogonal_gens(const Partition& lambda) {
    return young_gens<double>(
        lambda, [](long d) { return 1.0 / static_cast<double>(d); },
        [](long d) {
            double c = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
            return std::pair<double, double>(c, c);
        });
}

RationalMatrix seminormal_matrix(const Partition& lambda, const std::vector<long>& perm) {
    auto gens = young_seminormal_gens(lambda);
    return perm_matrix<Rational>(gens, standard_tableaux(lambda).size(), perm);
}

RealMatrix orthogonal_matrix(const Partition& lambda, const std::vector<long>& perm) {
    auto gens = young_orthogonal_gens(lambda);
    return perm_matrix<double>(gens, standard_tableaux(lambda).size(), perm);
}

ScalarCheck transposition_sum_check(const Partition& lambda) {
    const long n = partition_size(lambda);
    if (n <= 1) return {true, Rational(0)};
    auto gens = young_seminormal_gens(lambda);
    const size_t dim = standard_tableaux(lambda).size();
    std::vector<std::vector<Rational>> sum(dim, std::vector<Rational>(dim, Rational(0)));
    for (long j = 2; j <= n; ++j) {
        // (1 j) as a 0-based image vector
        std::vector<long> perm(n);
        std::iota(perm.begin(), perm.end(), 0L);
        std::swap(perm[0], perm[j - 1]);
        auto M = perm_matrix<Rational>(gens, dim, perm);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c) sum[r][c] += M[r][c];
    }
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            if (r == c ? sum[r][c] != sum[0][0] : sum[r][c] != 0)
                return {false, std::nullopt};
        }
    return {true, sum[0][0]};
}

}  // namespace srefl
