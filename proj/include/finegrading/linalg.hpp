#pragma once

#include <optional>
#include <vector>

#include "finegrading/cyclotomic.hpp"

namespace fgr {

/// Dense exact matrix over the cyclotomic rationals.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static CycMatrix identity(size_t n);
    static CycMatrix diagonal(const std::vector<CycNum>& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    CycNum& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const CycNum& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<CycNum>& flat() const { return a_; }

    bool is_zero() const;
    bool operator==(const CycMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator-() const;
    CycMatrix scaled(const CycNum& s) const;
    CycMatrix transpose() const;
    CycMatrix conjugate_entries() const;  // entrywise complex conjugation
    CycNum trace() const;

    CycMatrix kron(const CycMatrix& o) const;

    CycNum det() const;                   // square only
    CycMatrix inverse() const;            // throws if singular
    bool is_invertible() const;

    /// Commutator xy - yx.
    static CycMatrix bracket(const CycMatrix& x, const CycMatrix& y);

    /// Row-major flattening as a coordinate vector.
    std::vector<CycNum> vec() const { return a_; }
    static CycMatrix unvec(const std::vector<CycNum>& v, size_t rows, size_t cols);

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<CycNum> a_;
};

/// Incremental reduced row echelon form over the cyclotomics; rows are
/// coordinate vectors of a common length. Supports span membership and
/// residual reduction.
class Echelon {
public:
    explicit Echelon(size_t width) : width_(width) {}

    /// Reduce v against the current rows; if a nonzero residual remains, add
    /// it as a new pivot row and return true (rank grew).
    bool add(std::vector<CycNum> v);
    /// Residual of v modulo the row space (empty pivots untouched).
    std::vector<CycNum> reduce(std::vector<CycNum> v) const;
    bool contains(const std::vector<CycNum>& v) const;
    /// Coordinates of v in terms of the added vectors, if v lies in their span.
    /// Only valid when the added vectors were independent (rank == count).
    std::optional<std::vector<CycNum>> coordinates(const std::vector<CycNum>& v) const;

    size_t rank() const { return rows_.size(); }
    size_t width() const { return width_; }

private:
    size_t width_;
    std::vector<std::vector<CycNum>> rows_;   // reduced echelon rows
    std::vector<size_t> pivots_;              // pivot column per row
    std::vector<std::vector<CycNum>> coeff_;  // expression of each row in added vectors
    size_t added_ = 0;
};

/// Basis of the kernel {x : a x = 0}.
std::vector<std::vector<CycNum>> nullspace(const CycMatrix& a);

/// One solution of a x = b, if any.
std::optional<std::vector<CycNum>> solve(const CycMatrix& a, const std::vector<CycNum>& b);

/// Columnwise solutions of a X = B with a single elimination; nullopt if any
/// column is inconsistent.
std::optional<CycMatrix> solve_matrix(const CycMatrix& a, const CycMatrix& b);

size_t rank_of(const CycMatrix& a);

}  // namespace fgr
