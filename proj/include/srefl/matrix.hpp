#pragma once

#include <vector>

#include "srefl/cyclo.hpp"

namespace srefl {

/// Dense matrix of cyclotomic numbers. All entries are promoted to a common
/// conductor on construction so arithmetic never mixes fields.
class CycloMatrix {
public:
    CycloMatrix() : rows_(0), cols_(0), m_(1) {}
    CycloMatrix(size_t rows, size_t cols, long conductor = 1)
        : rows_(rows), cols_(cols), m_(conductor),
          data_(rows * cols, CycloNumber::zero(conductor)) {}

    static CycloMatrix identity(size_t n, long conductor = 1);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long conductor() const { return m_; }

    const CycloNumber& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, const CycloNumber& v) { data_[r * cols_ + c] = v.promoted(m_); }

    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix operator+(const CycloMatrix& o) const;
    CycloMatrix operator-(const CycloMatrix& o) const;
    CycloMatrix scaled(const CycloNumber& s) const;
    bool operator==(const CycloMatrix& o) const;

    CycloNumber trace() const;

private:
    size_t rows_, cols_;
    long m_;
    std::vector<CycloNumber> data_;
};

/// Exact affine solution set {particular + span(kernel)} of A v = b,
/// or `empty` when the system is inconsistent.
struct AffineSolution {
    std::vector<std::string> variables;
    bool empty = false;
    std::vector<CycloNumber> particular;
    std::vector<std::vector<CycloNumber>> kernel;  // linearly independent
    size_t rank = 0;

    size_t dimension() const { return kernel.size(); }
};

/// Gaussian elimination over Q(zeta_m) with first-nonzero pivoting in column
/// order, so kernel bases are reproducible.
AffineSolution solve_affine(const CycloMatrix& A, const std::vector<CycloNumber>& b,
                            std::vector<std::string> variables = {});

/// Rank of A by the same elimination.
size_t matrix_rank(const CycloMatrix& A);

/// True if v lies in particular + span(kernel) of `sol` (exact membership).
bool affine_contains(const AffineSolution& sol, const std::vector<CycloNumber>& v);

/// True if the two affine sets are identical subsets of the parameter space.
bool affine_sets_equal(const AffineSolution& a, const AffineSolution& b);

}  // namespace srefl
