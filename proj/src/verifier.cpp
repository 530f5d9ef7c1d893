#include "srefl/verifier.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace srefl {

namespace {

bool enumerable(const GroupData& g) {
    return g.spec.family == GroupFamily::Cyclic || g.spec.family == GroupFamily::Dicyclic;
}

long elem_index(const GroupData& g, long s, int t) {
    if (g.spec.family == GroupFamily::Cyclic) {
        long m = g.order;
        return ((s % m) + m) % m;
    }
    long n = 2 * g.spec.param;
    long ss = ((s % n) + n) % n;
    return t ? n + ss : ss;
}

long elem_inverse_index(const GroupData& g, const GroupElement& x) {
    if (g.spec.family == GroupFamily::Cyclic) return elem_index(g, -x.s, 0);
    long q = g.spec.param;
    return x.t ? elem_index(g, q + x.s, 1) : elem_index(g, -x.s, 0);
}

long elem_product_index(const GroupData& g, const GroupElement& x, const GroupElement& y) {
    if (g.spec.family == GroupFamily::Cyclic) return elem_index(g, x.s + y.s, 0);
    long q = g.spec.param;
    if (x.t == 0) return elem_index(g, x.s + y.s, y.t);
    // beta alpha^s = alpha^{-s} beta, beta^2 = alpha^q
    return y.t ? elem_index(g, x.s - y.s + q, 0) : elem_index(g, x.s - y.s, 1);
}

}  // namespace

IrrepMatrices irrep_matrices(const GroupData& g, long h) {
    if (!enumerable(g))
        throw std::invalid_argument("matrix verification unsupported for exceptional groups");
    if (h < 0 || h >= g.num_classes()) throw std::out_of_range("irrep index out of range");
    auto elems = enumerate_elements(g);
    const long m = g.conductor;
    IrrepMatrices out;
    out.h = h;

    if (g.spec.family == GroupFamily::Cyclic) {
        for (const auto& e : elems) {
            CycloMatrix M(1, 1, m);
            M.set(0, 0, CycloNumber::zeta(m, (h + 1) * e.s));
            out.by_element.push_back(std::move(M));
        }
    } else {
        const long q = g.spec.param;
        auto eps = [&](long t) { return CycloNumber::zeta(2 * q, t).promoted(m); };
        if (h <= q - 2) {
            // two-dimensional: alpha -> diag(eps^hh, eps^-hh), beta -> [[0, eps^{hh q}],[1,0]]
            const long hh = h + 1;
            for (const auto& e : elems) {
                CycloMatrix M(2, 2, m);
                if (e.t == 0) {
                    M.set(0, 0, eps(hh * e.s));
                    M.set(1, 1, eps(-hh * e.s));
                } else {
                    M.set(0, 1, eps(hh * (e.s + q)));
                    M.set(1, 0, eps(-hh * e.s));
                }
                out.by_element.push_back(std::move(M));
            }
        } else {
            const long idx = h - (q - 1);
            const CycloNumber one = CycloNumber::one(m);
            const CycloNumber iu = CycloNumber::zeta(4).promoted(m);
            CycloNumber ra = idx >= 2 ? -one : one;
            CycloNumber rb0 = (q % 2 == 0) ? -one : -iu;
            CycloNumber rbv = idx == 0 ? one : idx == 1 ? -one : idx == 2 ? rb0 : -rb0;
            for (const auto& e : elems) {
                CycloNumber v = one;
                for (long s = 0; s < e.s; ++s) v *= ra;
                if (e.t) v *= rbv;
                CycloMatrix M(1, 1, m);
                M.set(0, 0, v);
                out.by_element.push_back(std::move(M));
            }
        }
    }

    // validate: identity, multiplicativity, class traces
    const long d = g.dim(h);
    if (out.by_element[0] != CycloMatrix::identity(d, m))
        throw std::logic_error("irrep matrices: rho(e) != identity");
    for (size_t x = 0; x < elems.size(); ++x)
        for (size_t y = 0; y < elems.size(); ++y) {
            long p = elem_product_index(g, elems[x], elems[y]);
            if (out.by_element[x] * out.by_element[y] != out.by_element[p])
                throw std::logic_error("irrep matrices: multiplicativity fails");
        }
    for (size_t x = 0; x < elems.size(); ++x)
        if (out.by_element[x].trace() != g.char_table.at(h, elems[x].class_index).promoted(m))
            throw std::logic_error("irrep matrices: trace mismatch with character table");
    return out;
}

std::vector<std::vector<long>> coset_representatives(const std::vector<long>& type) {
    long N = std::accumulate(type.begin(), type.end(), 0L);
    if (N < 1) throw std::invalid_argument("empty type");
    if (N > 8)
        throw std::invalid_argument(
            "N > 8 exceeds the desk-scale guard: the induced construction enumerates S_N");
    // block intervals in irrep order
    std::vector<std::pair<long, long>> intervals;
    long off = 0;
    for (long nh : type) {
        if (nh < 0) throw std::invalid_argument("negative block size");
        if (nh > 0) intervals.push_back({off, off + nh});
        off += nh;
    }
    std::vector<long> perm(N);
    std::iota(perm.begin(), perm.end(), 0L);
    std::vector<std::vector<long>> out;
    do {
        bool ok = true;
        for (auto [a, b] : intervals)
            for (long p = a; p + 1 < b && ok; ++p)
                if (perm[p] > perm[p + 1]) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Generic sparse-operator machinery over a scalar policy (exact cyclotomic
// with seminormal S_N matrices, or complex doubles with the orthogonal form).

namespace {

struct ExactPolicy {
    using Num = CycloNumber;
    long m;
    Num zero() const { return CycloNumber::zero(m); }
    Num one() const { return CycloNumber::one(m); }
    Num cyc(const CycloNumber& x) const { return x.promoted(m); }
    Num rat(const Rational& r) const { return CycloNumber::from_rational(r, m); }
    bool nz(const Num& x) const { return !x.is_zero(); }
    static double mag(const Num& x) { return std::abs(x.approx()); }
    std::vector<std::vector<Num>> wmat(const Partition& lam, const std::vector<long>& perm) const {
        auto M = seminormal_matrix(lam, perm);
        std::vector<std::vector<Num>> out(M.size());
        for (size_t r = 0; r < M.size(); ++r)
            for (size_t c = 0; c < M.size(); ++c) out[r].push_back(rat(M[r][c]));
        return out;
    }
};

struct FloatPolicy {
    using Num = std::complex<double>;
    Num zero() const { return {0.0, 0.0}; }
    Num one() const { return {1.0, 0.0}; }
    Num cyc(const CycloNumber& x) const { return x.approx(); }
    Num rat(const Rational& r) const { return {to_double(r), 0.0}; }
    bool nz(const Num& x) const { return x != Num{0.0, 0.0}; }
    static double mag(const Num& x) { return std::abs(x); }
    std::vector<std::vector<Num>> wmat(const Partition& lam, const std::vector<long>& perm) const {
        auto M = orthogonal_matrix(lam, perm);
        std::vector<std::vector<Num>> out(M.size());
        for (size_t r = 0; r < M.size(); ++r)
            for (size_t c = 0; c < M.size(); ++c) out[r].push_back(Num{M[r][c], 0.0});
        return out;
    }
};

template <class Num>
struct SpOp {
    long dim = 0;
    std::vector<std::vector<std::pair<long, Num>>> cols;  // column -> (row, value)
};

template <class Pol>
void compact_column(std::vector<std::pair<long, typename Pol::Num>>& col, const Pol& pol) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, typename Pol::Num>> out;
    for (auto& [r, v] : col) {
        if (!out.empty() && out.back().first == r)
            out.back().second = out.back().second + v;
        else
            out.push_back({r, v});
    }
    col.clear();
    for (auto& [r, v] : out)
        if (pol.nz(v)) col.push_back({r, v});
}

template <class Pol>
SpOp<typename Pol::Num> compose(const SpOp<typename Pol::Num>& P,
                                const SpOp<typename Pol::Num>& Q, const Pol& pol) {
    SpOp<typename Pol::Num> R;
    R.dim = P.dim;
    R.cols.resize(Q.dim);
    for (long c = 0; c < Q.dim; ++c) {
        for (const auto& [r1, v1] : Q.cols[c])
            for (const auto& [r2, v2] : P.cols[r1]) R.cols[c].push_back({r2, v2 * v1});
        compact_column(R.cols[c], pol);
    }
    return R;
}

template <class Pol>
bool ops_equal(const SpOp<typename Pol::Num>& A, const SpOp<typename Pol::Num>& B, const Pol& pol) {
    if (A.dim != B.dim || A.cols.size() != B.cols.size()) return false;
    for (size_t c = 0; c < A.cols.size(); ++c) {
        std::vector<std::pair<long, typename Pol::Num>> diff = A.cols[c];
        for (const auto& [r, v] : B.cols[c]) diff.push_back({r, pol.zero() - v});
        compact_column(diff, pol);
        if (!diff.empty()) return false;
    }
    return true;
}

// basis bookkeeping ---------------------------------------------------------

struct Basis {
    std::vector<long> ystride;  // per position
    std::vector<long> wstride;  // per slot
    long dim_w, dim_y;

    explicit Basis(const InducedRep& rep) : dim_w(rep.dim_w), dim_y(rep.dim_y) {
        ystride.assign(rep.ydims.size(), 1);
        for (long p = static_cast<long>(rep.ydims.size()) - 2; p >= 0; --p)
            ystride[p] = ystride[p + 1] * rep.ydims[p + 1];
        wstride.assign(rep.wdims.size(), 1);
        for (long b = static_cast<long>(rep.wdims.size()) - 2; b >= 0; --b)
            wstride[b] = wstride[b + 1] * rep.wdims[b + 1];
    }

    long ydigit(long y, long p, long dp) const { return (y / ystride[p]) % dp; }
    long index(long l, long w, long y) const { return (l * dim_w + w) * dim_y + y; }
};

std::vector<long> invert_perm(const std::vector<long>& p) {
    std::vector<long> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

long coset_index(const InducedRep& rep, const std::vector<long>& sigma) {
    auto it = std::lower_bound(rep.cosets.begin(), rep.cosets.end(), sigma);
    if (it == rep.cosets.end() || *it != sigma)
        throw std::logic_error("coset representative not found");
    return static_cast<long>(it - rep.cosets.begin());
}

// matrix of a permutation tau (image vector on positions) in the induced rep
template <class Pol>
SpOp<typename Pol::Num> perm_op(const InducedRep& rep, const std::vector<long>& tau, const Pol& pol) {
    using Num = typename Pol::Num;
    const Basis bas(rep);
    const long nslots = static_cast<long>(rep.active.size());
    SpOp<Num> op;
    op.dim = rep.dim;
    op.cols.resize(rep.dim);

    for (long l = 0; l < rep.M; ++l) {
        const auto& sigma = rep.cosets[l];
        std::vector<long> pi(rep.N);
        for (long p = 0; p < rep.N; ++p) pi[p] = tau[sigma[p]];
        // canonical representative: sort the values on each block interval
        std::vector<long> rep_sigma = pi;
        for (long b = 0; b < nslots; ++b) {
            long off = rep.slot_offset[b];
            long nb = rep.candidate.type[rep.active[b]];
            std::sort(rep_sigma.begin() + off, rep_sigma.begin() + off + nb);
        }
        long r = coset_index(rep, rep_sigma);
        auto inv_r = invert_perm(rep_sigma);
        std::vector<long> wt(rep.N);  // the inertia-factor part
        for (long p = 0; p < rep.N; ++p) wt[p] = inv_r[pi[p]];

        // per-slot W matrices
        std::vector<std::vector<std::vector<Num>>> wms(nslots);
        for (long b = 0; b < nslots; ++b) {
            long off = rep.slot_offset[b];
            long nb = rep.candidate.type[rep.active[b]];
            std::vector<long> bp(nb);
            for (long t = 0; t < nb; ++t) bp[t] = wt[off + t] - off;
            wms[b] = pol.wmat(rep.candidate.parts[rep.active[b]], bp);
        }

        for (long y = 0; y < rep.dim_y; ++y) {
            // y'_{wt(p)} = y_p
            long y2 = 0;
            for (long p = 0; p < rep.N; ++p)
                y2 += bas.ydigit(y, p, rep.ydims[p]) * bas.ystride[wt[p]];
            for (long w = 0; w < rep.dim_w; ++w) {
                long col = bas.index(l, w, y);
                for (long w2 = 0; w2 < rep.dim_w; ++w2) {
                    Num val = pol.one();
                    bool zero = false;
                    for (long b = 0; b < nslots && !zero; ++b) {
                        long wb = (w / bas.wstride[b]) % rep.wdims[b];
                        long wb2 = (w2 / bas.wstride[b]) % rep.wdims[b];
                        const Num& e = wms[b][wb2][wb];
                        if (!pol.nz(e)) zero = true;
                        else val = val * e;
                    }
                    if (zero) continue;
                    op.cols[col].push_back({bas.index(r, w2, y2), val});
                }
            }
        }
    }
    return op;
}

// matrix of a single group element placed in tensor position i
template <class Pol>
SpOp<typename Pol::Num> gamma_op(const InducedRep& rep, long elem, long pos_i, const Pol& pol) {
    using Num = typename Pol::Num;
    const Basis bas(rep);
    SpOp<Num> op;
    op.dim = rep.dim;
    op.cols.resize(rep.dim);
    for (long l = 0; l < rep.M; ++l) {
        auto inv_sigma = invert_perm(rep.cosets[l]);
        long p = inv_sigma[pos_i];
        long b = rep.slot_of_pos[p];
        const CycloMatrix& rho = rep.irreps[b].by_element[elem];
        long d = rep.ydims[p];
        for (long y = 0; y < rep.dim_y; ++y) {
            long t = bas.ydigit(y, p, d);
            for (long w = 0; w < rep.dim_w; ++w) {
                long col = bas.index(l, w, y);
                for (long t2 = 0; t2 < d; ++t2) {
                    Num v = pol.cyc(rho.at(t2, t));
                    if (!pol.nz(v)) continue;
                    op.cols[col].push_back({col + (t2 - t) * bas.ystride[p], v});
                }
            }
        }
    }
    return op;
}

std::vector<long> transposition(long N, long i, long j) {
    std::vector<long> tau(N);
    std::iota(tau.begin(), tau.end(), 0L);
    std::swap(tau[i], tau[j]);
    return tau;
}

// precomputed small tensors for the relation sums -----------------------------

template <class Pol>
struct RelEngine {
    using Num = typename Pol::Num;
    const InducedRep& rep;
    const Pol& pol;
    Basis bas;
    long nslots, nu;
    // K[a][b]: sum_gamma rho_a(gamma) (x) rho_b(gamma^-1), (da db)^2
    std::vector<std::vector<std::vector<std::vector<Num>>>> K;
    // S[uv][a][b]: same weighted by omega_L(gamma u, v)
    std::array<std::vector<std::vector<std::vector<std::vector<Num>>>>, 4> S;
    // gsum[a][s-1]: sum over class s of rho_a, d x d
    std::vector<std::vector<std::vector<std::vector<Num>>>> gsum;
    std::map<std::pair<long, long>, SpOp<Num>> sops;  // i < j

    RelEngine(const InducedRep& r, const Pol& p) : rep(r), pol(p), bas(r) {
        nslots = static_cast<long>(rep.active.size());
        nu = rep.group.num_classes();
        const auto& elems = rep.elements;

        auto dims = [&](long b) { return rep.group.dim(rep.active[b]); };
        K.assign(nslots, {});
        for (auto& s : S) s.assign(nslots, {});
        for (long a = 0; a < nslots; ++a) {
            K[a].resize(nslots);
            for (auto& s : S) s[a].resize(nslots);
            for (long b = 0; b < nslots; ++b) {
                long da = dims(a), db = dims(b), n = da * db;
                K[a][b].assign(n, std::vector<Num>(n, pol.zero()));
                for (auto& s : S) s[a][b].assign(n, std::vector<Num>(n, pol.zero()));
                for (size_t e = 0; e < elems.size(); ++e) {
                    const CycloMatrix& ra = rep.irreps[a].by_element[e];
                    const CycloMatrix& rb = rep.irreps[b].by_element[rep.inverse_of[e]];
                    // omega weights from the taut matrix [[ta,tb],[tc,td]]:
                    // (u,v) = (0,0): -tc; (0,1): ta; (1,0): -td; (1,1): tb
                    const CycloMatrix& T = elems[e].taut;
                    std::array<Num, 4> wts = {
                        pol.zero() - pol.cyc(T.at(1, 0)), pol.cyc(T.at(0, 0)),
                        pol.zero() - pol.cyc(T.at(1, 1)), pol.cyc(T.at(0, 1))};
                    for (long ta2 = 0; ta2 < da; ++ta2)
                        for (long ta = 0; ta < da; ++ta) {
                            Num va = pol.cyc(ra.at(ta2, ta));
                            if (!pol.nz(va)) continue;
                            for (long tb2 = 0; tb2 < db; ++tb2)
                                for (long tb = 0; tb < db; ++tb) {
                                    Num v = va * pol.cyc(rb.at(tb2, tb));
                                    if (!pol.nz(v)) continue;
                                    long rr = ta2 * db + tb2, cc = ta * db + tb;
                                    K[a][b][rr][cc] = K[a][b][rr][cc] + v;
                                    for (int uv = 0; uv < 4; ++uv)
                                        S[uv][a][b][rr][cc] = S[uv][a][b][rr][cc] + wts[uv] * v;
                                }
                        }
                }
            }
        }

        gsum.assign(nslots, {});
        for (long a = 0; a < nslots; ++a) {
            long d = dims(a);
            gsum[a].assign(nu - 1, std::vector<std::vector<Num>>(d, std::vector<Num>(d, pol.zero())));
            for (size_t e = 0; e < elems.size(); ++e) {
                long s = elems[e].class_index;
                if (s == 0) continue;
                const CycloMatrix& ra = rep.irreps[a].by_element[e];
                for (long r2 = 0; r2 < d; ++r2)
                    for (long c2 = 0; c2 < d; ++c2)
                        gsum[a][s - 1][r2][c2] = gsum[a][s - 1][r2][c2] + pol.cyc(ra.at(r2, c2));
            }
        }

        for (long i = 0; i < rep.N; ++i)
            for (long j = i + 1; j < rep.N; ++j)
                sops.emplace(std::make_pair(i, j), perm_op(rep, transposition(rep.N, i, j), pol));
    }

    // ordered slot pairs (a,b) realized by some pair of distinct positions
    bool pair_realized(long a, long b) const {
        if (a != b) return true;
        return rep.candidate.type[rep.active[a]] >= 2;
    }

    // largest |entry| over all (R2) coefficient operators; nonzero iff some
    // coefficient is nonzero (the operators repeat one small tensor block)
    double r2_max_coeff(bool* any_nonzero) const {
        double best = 0;
        bool nzf = false;
        for (long a = 0; a < nslots; ++a)
            for (long b = 0; b < nslots; ++b) {
                if (!pair_realized(a, b)) continue;
                for (int uv = 0; uv < 4; ++uv)
                    for (const auto& row : S[uv][a][b])
                        for (const auto& v : row)
                            if (pol.nz(v)) {
                                nzf = true;
                                best = std::max(best, Pol::mag(v));
                            }
            }
        if (any_nonzero) *any_nonzero = nzf;
        return best;
    }

    // visit every (R1) equation for operator entry (row, col) of index i:
    // fn(row, col, kcoeff, ccoeffs) with the identity handled by the caller
    template <class Fn>
    void r1_columns(long i, Fn fn) const {
        auto dims = [&](long b) { return rep.group.dim(rep.active[b]); };
        for (long l = 0; l < rep.M; ++l) {
            auto inv_sigma = invert_perm(rep.cosets[l]);
            long p = inv_sigma[i];
            long a = rep.slot_of_pos[p];
            long da = dims(a);
            for (long y = 0; y < rep.dim_y; ++y) {
                long ta = bas.ydigit(y, p, da);
                for (long w = 0; w < rep.dim_w; ++w) {
                    long col = bas.index(l, w, y);
                    std::map<long, Num> kmap;
                    for (long j = 0; j < rep.N; ++j) {
                        if (j == i) continue;
                        long q = inv_sigma[j];
                        long b = rep.slot_of_pos[q];
                        long db = dims(b);
                        long tb = bas.ydigit(y, q, db);
                        const auto& sop = sops.at({std::min(i, j), std::max(i, j)});
                        const auto& Kab = K[a][b];
                        long cc = ta * db + tb;
                        for (long rr = 0; rr < da * db; ++rr) {
                            const Num& v = Kab[rr][cc];
                            if (!pol.nz(v)) continue;
                            long ta2 = rr / db, tb2 = rr % db;
                            long mid = col + (ta2 - ta) * bas.ystride[p] + (tb2 - tb) * bas.ystride[q];
                            for (const auto& [r2, u] : sop.cols[mid]) {
                                auto it = kmap.find(r2);
                                if (it == kmap.end()) kmap.emplace(r2, u * v);
                                else it->second = it->second + u * v;
                            }
                        }
                    }
                    // c_s columns act on the y digit at p only
                    std::map<long, std::vector<Num>> rows;  // row -> [k, c_2..c_nu]
                    auto slot_row = [&](long r2) -> std::vector<Num>& {
                        auto it = rows.find(r2);
                        if (it == rows.end())
                            it = rows.emplace(r2, std::vector<Num>(nu, pol.zero())).first;
                        return it->second;
                    };
                    for (auto& [r2, v] : kmap) slot_row(r2)[0] = pol.rat(Rational(1, 2)) * v;
                    for (long s = 1; s < nu; ++s)
                        for (long t2 = 0; t2 < da; ++t2) {
                            const Num& v = gsum[a][s - 1][t2][ta];
                            if (!pol.nz(v)) continue;
                            slot_row(col + (t2 - ta) * bas.ystride[p])[s] = v;
                        }
                    slot_row(col);  // ensure the diagonal equation exists
                    for (auto& [r2, coeffs] : rows) fn(r2, col, coeffs);
                }
            }
        }
    }
};

// incremental exact row reduction for stacking many equations ----------------

struct RowReducer {
    long n;
    std::vector<std::vector<CycloNumber>> rows;  // augmented, pivot normalized to 1
    std::vector<long> pivots;
    bool inconsistent = false;
    std::unordered_set<std::string> seen;

    explicit RowReducer(long unknowns) : n(unknowns) {}

    void add(std::vector<CycloNumber> row) {
        if (inconsistent) return;
        std::string key;
        for (const auto& x : row) {
            key += x.str();
            key += '|';
        }
        if (!seen.insert(std::move(key)).second) return;
        for (size_t idx = 0; idx < rows.size(); ++idx) {
            const CycloNumber& f = row[pivots[idx]];
            if (f.is_zero()) continue;
            CycloNumber ff = f;
            for (long j = 0; j <= n; ++j) row[j] -= ff * rows[idx][j];
        }
        long piv = -1;
        for (long j = 0; j < n; ++j)
            if (!row[j].is_zero()) { piv = j; break; }
        if (piv < 0) {
            if (!row[n].is_zero()) inconsistent = true;
            return;
        }
        CycloNumber inv = row[piv].inverse();
        for (auto& x : row) x *= inv;
        rows.push_back(std::move(row));
        pivots.push_back(piv);
    }
};

long max_induced_dim() {
    if (const char* env = std::getenv("SREFL_MAX_DIM")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 20000;
}

}  // namespace

InducedRep build_induced(const GroupData& g, const ReprCandidate& candidate) {
    if (!enumerable(g))
        throw std::invalid_argument("matrix verification unsupported for exceptional groups");
    const long nu = g.num_classes();
    if (static_cast<long>(candidate.type.size()) != nu ||
        candidate.parts.size() != candidate.type.size())
        throw std::invalid_argument("candidate shape does not match the group");

    InducedRep rep;
    rep.group = g;
    rep.candidate = candidate;
    rep.N = candidate.total();
    if (rep.N < 1) throw std::invalid_argument("empty candidate");
    rep.elements = enumerate_elements(g);
    for (const auto& e : rep.elements) rep.inverse_of.push_back(elem_inverse_index(g, e));
    rep.active = candidate.active_blocks();

    long off = 0;
    for (long h : rep.active) {
        if (partition_size(candidate.parts[h]) != candidate.type[h])
            throw std::invalid_argument("partition size does not match its block");
        rep.slot_offset.push_back(off);
        for (long t = 0; t < candidate.type[h]; ++t) {
            rep.slot_of_pos.push_back(static_cast<long>(rep.slot_offset.size()) - 1);
            rep.ydims.push_back(g.dim(h));
            rep.dim_y *= g.dim(h);
        }
        off += candidate.type[h];
        long f = static_cast<long>(standard_tableaux(candidate.parts[h]).size());
        rep.wdims.push_back(f);
        rep.dim_w *= f;
        rep.irreps.push_back(irrep_matrices(g, h));
    }
    rep.cosets = coset_representatives(candidate.type);
    rep.M = static_cast<long>(rep.cosets.size());
    rep.dim = rep.M * rep.dim_w * rep.dim_y;
    if (rep.dim > max_induced_dim())
        throw std::invalid_argument(
            "induced dimension " + std::to_string(rep.dim) +
            " exceeds the guard; set SREFL_MAX_DIM to raise it");

    // exact well-formedness checks
    ExactPolicy pol{g.conductor};
    std::vector<SpOp<CycloNumber>> s(rep.N > 1 ? rep.N - 1 : 0);
    for (long i = 0; i + 1 < rep.N; ++i) s[i] = perm_op(rep, transposition(rep.N, i, i + 1), pol);
    SpOp<CycloNumber> id;
    id.dim = rep.dim;
    id.cols.resize(rep.dim);
    for (long c = 0; c < rep.dim; ++c) id.cols[c].push_back({c, pol.one()});

    for (size_t i = 0; i < s.size(); ++i) {
        if (!ops_equal(compose(s[i], s[i], pol), id, pol))
            throw std::logic_error("induced rep: s_i^2 != 1");
        if (i + 1 < s.size()) {
            auto lhs = compose(s[i], compose(s[i + 1], s[i], pol), pol);
            auto rhs = compose(s[i + 1], compose(s[i], s[i + 1], pol), pol);
            if (!ops_equal(lhs, rhs, pol)) throw std::logic_error("induced rep: braid relation fails");
        }
        for (size_t j = i + 2; j < s.size(); ++j)
            if (!ops_equal(compose(s[i], s[j], pol), compose(s[j], s[i], pol), pol))
                throw std::logic_error("induced rep: distant transpositions do not commute");
    }

    std::vector<long> gens = {elem_index(g, 1, 0)};
    if (g.spec.family == GroupFamily::Dicyclic) gens.push_back(elem_index(g, 0, 1));
    std::vector<std::vector<SpOp<CycloNumber>>> gops(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (long i = 0; i < rep.N; ++i) gops[gi].push_back(gamma_op(rep, gens[gi], i, pol));
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (size_t gj = 0; gj < gens.size(); ++gj)
            for (long i = 0; i < rep.N; ++i)
                for (long j = i + 1; j < rep.N; ++j)
                    if (!ops_equal(compose(gops[gi][i], gops[gj][j], pol),
                                   compose(gops[gj][j], gops[gi][i], pol), pol))
                        throw std::logic_error("induced rep: gamma factors do not commute");
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (size_t i = 0; i < s.size(); ++i)
            for (long p = 0; p < rep.N; ++p) {
                long image = (p == static_cast<long>(i)) ? p + 1
                             : (p == static_cast<long>(i) + 1) ? p - 1 : p;
                auto conj = compose(s[i], compose(gops[gi][p], s[i], pol), pol);
                if (!ops_equal(conj, gops[gi][image], pol))
                    throw std::logic_error("induced rep: sigma gamma_i sigma^-1 != gamma_sigma(i)");
            }
    return rep;
}

namespace {

template <class Pol>
void residuals_impl(const InducedRep& rep, const std::vector<CycloNumber>& point, const Pol& pol,
                    RelationReport& out) {
    using Num = typename Pol::Num;
    RelEngine<Pol> eng(rep, pol);
    const long nu = rep.group.num_classes();
    if (static_cast<long>(point.size()) != nu)
        throw std::invalid_argument("parameter point must have nu coordinates (k, c_2..c_nu)");
    std::vector<Num> pt;
    for (const auto& x : point) pt.push_back(pol.cyc(x));

    bool any = false;
    double r2coeff = eng.r2_max_coeff(&any);
    Num half_k = pol.rat(Rational(1, 2)) * pt[0];
    out.residual_r2 = Pol::mag(half_k) * r2coeff;
    bool exact_zero = !any || !pol.nz(pt[0]);

    double r1 = 0;
    for (long i = 0; i < rep.N; ++i)
        eng.r1_columns(i, [&](long row, long col, const std::vector<Num>& coeffs) {
            Num val = row == col ? pol.one() : pol.zero();
            val = val + pt[0] * coeffs[0];  // coeffs[0] already includes the 1/2
            for (long sidx = 1; sidx < nu; ++sidx) val = val + pt[sidx] * coeffs[sidx];
            if (pol.nz(val)) exact_zero = false;
            r1 = std::max(r1, Pol::mag(val));
        });
    out.residual_r1 = r1;
    out.exact_zero = exact_zero && out.residual_r2 == 0;
}

}  // namespace

RelationReport relation_residuals(const InducedRep& rep, const std::vector<CycloNumber>& point,
                                  VerifyMode mode) {
    RelationReport out;
    out.mode = mode;
    out.point = point;
    if (mode == VerifyMode::Exact) {
        ExactPolicy pol{rep.group.conductor};
        residuals_impl(rep, point, pol, out);
    } else {
        FloatPolicy pol;
        residuals_impl(rep, point, pol, out);
        out.exact_zero = false;
    }
    return out;
}

bool OracleResult::accepts() const {
    if (solution.empty) return false;
    if (k_forced_zero) return false;
    for (const auto& v : solution.kernel)
        if (!v[0].is_zero()) return true;
    return !solution.particular[0].is_zero();
}

OracleResult solve_params_from_relations(const InducedRep& rep) {
    ExactPolicy pol{rep.group.conductor};
    RelEngine<ExactPolicy> eng(rep, pol);
    const long nu = rep.group.num_classes();
    std::vector<std::string> vars;
    vars.push_back("k");
    for (long s = 1; s < nu; ++s) vars.push_back("c" + std::to_string(s + 1));

    OracleResult res;
    RowReducer red(nu);

    // (R2): every equation is k * coeff = 0, so a single nonzero coefficient
    // pins k = 0
    eng.r2_max_coeff(&res.k_forced_zero);
    if (res.k_forced_zero) {
        std::vector<CycloNumber> row(nu + 1, pol.zero());
        row[0] = pol.one();
        red.add(std::move(row));
    }

    // (R1): one equation per operator entry, affine in (k, c)
    for (long i = 0; i < rep.N && !red.inconsistent; ++i)
        eng.r1_columns(i, [&](long row, long col, const std::vector<CycloNumber>& coeffs) {
            if (red.inconsistent) return;
            std::vector<CycloNumber> eq = coeffs;
            eq.push_back(row == col ? -pol.one() : pol.zero());
            red.add(std::move(eq));
        });

    CycloMatrix A(red.rows.size() + (red.inconsistent ? 1 : 0), nu, rep.group.conductor);
    std::vector<CycloNumber> b;
    for (size_t r = 0; r < red.rows.size(); ++r) {
        for (long j = 0; j < nu; ++j) A.set(r, j, red.rows[r][j]);
        b.push_back(red.rows[r][nu]);
    }
    if (red.inconsistent) b.push_back(pol.one());  // 0 = 1
    res.solution = solve_affine(A, b, vars);
    return res;
}

std::optional<std::vector<CycloNumber>> k_nonzero_point(const AffineSolution& sol) {
    if (sol.empty) return std::nullopt;
    std::vector<CycloNumber> pt = sol.particular;
    for (const auto& v : sol.kernel)
        if (!v[0].is_zero()) {
            CycloNumber t = (CycloNumber::one(v[0].conductor()) - pt[0].promoted(
                                 std::lcm(v[0].conductor(), pt[0].conductor()))) / v[0];
            for (size_t j = 0; j < pt.size(); ++j) pt[j] = pt[j] + t * v[j];
            return pt;
        }
    if (!pt[0].is_zero()) return pt;
    return std::nullopt;
}

}  // namespace srefl
