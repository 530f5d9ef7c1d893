#include "srefl/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace srefl {

CycloMatrix CycloMatrix::identity(size_t n, long conductor) {
    CycloMatrix I(n, n, conductor);
    for (size_t i = 0; i < n; ++i) I.set(i, i, CycloNumber::one(conductor));
    return I;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    long m = std::lcm(m_, o.m_);
    CycloMatrix r(rows_, o.cols_, m);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycloNumber& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.set(i, j, r.at(i, j) + a * o.at(k, j));
            }
        }
    return r;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    CycloMatrix r(rows_, cols_, std::lcm(m_, o.m_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
    return *this + o.scaled(CycloNumber::from_rational(-1));
}

CycloMatrix CycloMatrix::scaled(const CycloNumber& s) const {
    CycloMatrix r(rows_, cols_, std::lcm(m_, s.conductor()));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * s);
    return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

CycloNumber CycloMatrix::trace() const {
    CycloNumber t = CycloNumber::zero(m_);
    for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

namespace {

struct Eliminated {
    std::vector<std::vector<CycloNumber>> rows;  // reduced augmented rows
    std::vector<long> pivot_col;                 // per reduced row
    bool inconsistent = false;
    size_t unknowns = 0;
};

// Row-reduce the augmented system [A | b] with deterministic pivoting:
// for each column in order, take the first remaining row with a nonzero
// entry.
Eliminated eliminate(const CycloMatrix& A, const std::vector<CycloNumber>& b) {
    const size_t n = A.cols();
    const long m = A.conductor();
    Eliminated e;
    e.unknowns = n;
    std::vector<std::vector<CycloNumber>> work;
    for (size_t i = 0; i < A.rows(); ++i) {
        std::vector<CycloNumber> row;
        row.reserve(n + 1);
        for (size_t j = 0; j < n; ++j) row.push_back(A.at(i, j));
        row.push_back(i < b.size() ? b[i].promoted(std::lcm(b[i].conductor(), m))
                                   : CycloNumber::zero(m));
        work.push_back(std::move(row));
    }
    size_t next = 0;
    for (size_t col = 0; col < n && next < work.size(); ++col) {
        size_t piv = next;
        while (piv < work.size() && work[piv][col].is_zero()) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[next], work[piv]);
        CycloNumber inv = work[next][col].inverse();
        for (auto& x : work[next]) x *= inv;
        for (size_t r = 0; r < work.size(); ++r) {
            if (r == next || work[r][col].is_zero()) continue;
            CycloNumber f = work[r][col];
            for (size_t j = 0; j <= n; ++j) work[r][j] -= f * work[next][j];
        }
        e.pivot_col.push_back(static_cast<long>(col));
        ++next;
    }
    // any leftover row 0 = nonzero marks inconsistency
    for (size_t r = next; r < work.size(); ++r)
        if (!work[r][n].is_zero()) e.inconsistent = true;
    work.resize(next);
    e.rows = std::move(work);
    return e;
}

}  // namespace

AffineSolution solve_affine(const CycloMatrix& A, const std::vector<CycloNumber>& b,
                            std::vector<std::string> variables) {
    if (b.size() != A.rows()) throw std::invalid_argument("rhs length mismatch");
    const size_t n = A.cols();
    const long m = A.conductor();
    Eliminated e = eliminate(A, b);

    AffineSolution sol;
    sol.variables = std::move(variables);
    if (sol.variables.empty())
        for (size_t j = 0; j < n; ++j) sol.variables.push_back("v" + std::to_string(j));
    sol.rank = e.rows.size();
    if (e.inconsistent) {
        sol.empty = true;
        return sol;
    }

    std::vector<bool> is_pivot(n, false);
    for (long c : e.pivot_col) is_pivot[c] = true;

    sol.particular.assign(n, CycloNumber::zero(m));
    for (size_t r = 0; r < e.rows.size(); ++r) sol.particular[e.pivot_col[r]] = e.rows[r][n];

    for (size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<CycloNumber> v(n, CycloNumber::zero(m));
        v[freec] = CycloNumber::one(m);
        for (size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivot_col[r]] = -e.rows[r][freec];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

size_t matrix_rank(const CycloMatrix& A) {
    return eliminate(A, std::vector<CycloNumber>(A.rows(), CycloNumber::zero(A.conductor()))).rows.size();
}

bool affine_contains(const AffineSolution& sol, const std::vector<CycloNumber>& v) {
    if (sol.empty) return false;
    const size_t n = sol.particular.size();
    if (v.size() != n) return false;
    // solve kernel * x = v - particular
    long m = 1;
    for (const auto& x : sol.particular) m = std::lcm(m, x.conductor());
    for (const auto& k : sol.kernel)
        for (const auto& x : k) m = std::lcm(m, x.conductor());
    for (const auto& x : v) m = std::lcm(m, x.conductor());
    CycloMatrix K(n, sol.kernel.size(), m);
    for (size_t j = 0; j < sol.kernel.size(); ++j)
        for (size_t i = 0; i < n; ++i) K.set(i, j, sol.kernel[j][i]);
    std::vector<CycloNumber> rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = v[i] - sol.particular[i];
    if (sol.kernel.empty()) {
        for (const auto& x : rhs)
            if (!x.is_zero()) return false;
        return true;
    }
    return !solve_affine(K, rhs).empty;
}

bool affine_sets_equal(const AffineSolution& a, const AffineSolution& b) {
    if (a.empty || b.empty) return a.empty == b.empty;
    if (a.kernel.size() != b.kernel.size()) return false;
    if (!affine_contains(b, a.particular)) return false;
    // direction spans: each generator of a, shifted to a point, must lie in b
    for (const auto& k : a.kernel) {
        std::vector<CycloNumber> pt(a.particular.size());
        for (size_t i = 0; i < pt.size(); ++i) pt[i] = a.particular[i] + k[i];
        if (!affine_contains(b, pt)) return false;
    }
    return true;
}

}  // namespace srefl
