#include "finegrading/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace fgr {

CycMatrix CycMatrix::identity(size_t n) {
    CycMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
    return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNum>& d) {
    CycMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool CycMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("CycMatrix: shape mismatch");
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const { return *this + (-o); }

CycMatrix CycMatrix::operator-() const {
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("CycMatrix: product shape mismatch");
    CycMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycNum& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const CycNum& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

CycMatrix CycMatrix::conjugate_entries() const {
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].conjugate();
    return r;
}

CycNum CycMatrix::trace() const {
    CycNum t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
    CycMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (size_t k = 0; k < o.rows_; ++k)
                for (size_t l = 0; l < o.cols_; ++l) {
                    if (o.at(k, l).is_zero()) continue;
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
                }
        }
    return r;
}

CycNum CycMatrix::det() const {
    if (!is_square()) throw std::runtime_error("CycMatrix::det: not square");
    CycMatrix m = *this;
    CycNum d(1);
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = rows_;
        for (size_t i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows_) return CycNum(0);
        if (piv != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(piv, j));
            d = -d;
        }
        d *= m.at(col, col);
        CycNum inv = m.at(col, col).inverse();
        for (size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycNum f = m.at(i, col) * inv;
            for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

CycMatrix CycMatrix::inverse() const {
    if (!is_square()) throw std::runtime_error("CycMatrix::inverse: not square");
    CycMatrix m = *this;
    CycMatrix r = identity(rows_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t piv = rows_;
        for (size_t i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows_) throw std::runtime_error("CycMatrix::inverse: singular matrix");
        if (piv != col)
            for (size_t j = 0; j < cols_; ++j) {
                std::swap(m.at(col, j), m.at(piv, j));
                std::swap(r.at(col, j), r.at(piv, j));
            }
        CycNum inv = m.at(col, col).inverse();
        for (size_t j = 0; j < cols_; ++j) {
            m.at(col, j) *= inv;
            r.at(col, j) *= inv;
        }
        for (size_t i = 0; i < rows_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            CycNum f = m.at(i, col);
            for (size_t j = 0; j < cols_; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                r.at(i, j) -= f * r.at(col, j);
            }
        }
    }
    return r;
}

bool CycMatrix::is_invertible() const { return is_square() && !det().is_zero(); }

CycMatrix CycMatrix::bracket(const CycMatrix& x, const CycMatrix& y) { return x * y - y * x; }

CycMatrix CycMatrix::unvec(const std::vector<CycNum>& v, size_t rows, size_t cols) {
    if (v.size() != rows * cols) throw std::runtime_error("CycMatrix::unvec: size mismatch");
    CycMatrix m(rows, cols);
    for (size_t i = 0; i < v.size(); ++i) m.a_[i] = v[i];
    return m;
}

std::string CycMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

bool Echelon::add(std::vector<CycNum> v) {
    if (v.size() != width_) throw std::runtime_error("Echelon: width mismatch");
    std::vector<CycNum> expr(added_ + 1);
    expr[added_] = CycNum(1);
    ++added_;
    // reduce against existing rows, tracking the expression
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNum& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        CycNum f = c;
        for (size_t j = 0; j < width_; ++j) v[j] -= f * rows_[r][j];
        for (size_t j = 0; j < coeff_[r].size(); ++j) expr[j] -= f * coeff_[r][j];
    }
    size_t piv = width_;
    for (size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv == width_) return false;
    CycNum inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : expr) x *= inv;
    // back-substitute into earlier rows to keep reduced form
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNum& c = rows_[r][piv];
        if (c.is_zero()) continue;
        CycNum f = c;
        for (size_t j = 0; j < width_; ++j) rows_[r][j] -= f * v[j];
        coeff_[r].resize(added_);
        for (size_t j = 0; j < expr.size(); ++j) coeff_[r][j] -= f * expr[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    coeff_.push_back(std::move(expr));
    return true;
}

std::vector<CycNum> Echelon::reduce(std::vector<CycNum> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNum& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        CycNum f = c;
        for (size_t j = 0; j < width_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool Echelon::contains(const std::vector<CycNum>& v) const {
    auto res = reduce(v);
    for (const auto& x : res)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::vector<CycNum>> Echelon::coordinates(const std::vector<CycNum>& v) const {
    std::vector<CycNum> w = v;
    std::vector<CycNum> expr(added_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const CycNum& c = w[pivots_[r]];
        if (c.is_zero()) continue;
        CycNum f = c;
        for (size_t j = 0; j < width_; ++j) w[j] -= f * rows_[r][j];
        for (size_t j = 0; j < coeff_[r].size(); ++j) expr[j] += f * coeff_[r][j];
    }
    for (const auto& x : w)
        if (!x.is_zero()) return std::nullopt;
    return expr;
}

std::vector<std::vector<CycNum>> nullspace(const CycMatrix& a) {
    const size_t n = a.cols();
    // reduced row echelon of a
    std::vector<std::vector<CycNum>> rows;
    std::vector<size_t> pivots;
    for (size_t i = 0; i < a.rows(); ++i) {
        std::vector<CycNum> v(n);
        for (size_t j = 0; j < n; ++j) v[j] = a.at(i, j);
        for (size_t r = 0; r < rows.size(); ++r) {
            CycNum f = v[pivots[r]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) v[j] -= f * rows[r][j];
        }
        size_t piv = n;
        for (size_t j = 0; j < n; ++j)
            if (!v[j].is_zero()) {
                piv = j;
                break;
            }
        if (piv == n) continue;
        CycNum inv = v[piv].inverse();
        for (auto& x : v) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            CycNum f = rows[r][piv];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) rows[r][j] -= f * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycNum>> basis;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<CycNum> v(n);
        v[j] = CycNum(1);
        for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<CycNum>> solve(const CycMatrix& a, const std::vector<CycNum>& b) {
    if (b.size() != a.rows()) throw std::runtime_error("solve: dimension mismatch");
    CycMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t piv = a.rows();
        for (size_t i = row; i < a.rows(); ++i)
            if (!aug.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == a.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j <= a.cols(); ++j) std::swap(aug.at(row, j), aug.at(piv, j));
        CycNum inv = aug.at(row, col).inverse();
        for (size_t j = col; j <= a.cols(); ++j) aug.at(row, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            CycNum f = aug.at(i, col);
            for (size_t j = col; j <= a.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    for (size_t i = row; i < a.rows(); ++i)
        if (!aug.at(i, a.cols()).is_zero()) return std::nullopt;
    std::vector<CycNum> x(a.cols());
    for (size_t r = 0; r < row; ++r) x[pivcol[r]] = aug.at(r, a.cols());
    return x;
}

std::optional<CycMatrix> solve_matrix(const CycMatrix& a, const CycMatrix& b) {
    if (b.rows() != a.rows()) throw std::runtime_error("solve_matrix: dimension mismatch");
    const size_t n = a.cols(), k = b.cols();
    CycMatrix aug(a.rows(), n + k);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
    }
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t col = 0; col < n && row < a.rows(); ++col) {
        size_t piv = a.rows();
        for (size_t i = row; i < a.rows(); ++i)
            if (!aug.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == a.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < n + k; ++j) std::swap(aug.at(row, j), aug.at(piv, j));
        CycNum inv = aug.at(row, col).inverse();
        for (size_t j = col; j < n + k; ++j) aug.at(row, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            CycNum f = aug.at(i, col);
            for (size_t j = col; j < n + k; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    for (size_t i = row; i < a.rows(); ++i)
        for (size_t j = 0; j < k; ++j)
            if (!aug.at(i, n + j).is_zero()) return std::nullopt;
    CycMatrix x(n, k);
    for (size_t r = 0; r < row; ++r)
        for (size_t j = 0; j < k; ++j) x.at(pivcol[r], j) = aug.at(r, n + j);
    return x;
}

size_t rank_of(const CycMatrix& a) {
    Echelon ech(a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        std::vector<CycNum> v(a.cols());
        for (size_t j = 0; j < a.cols(); ++j) v[j] = a.at(i, j);
        ech.add(std::move(v));
    }
    return ech.rank();
}

}  // namespace fgr
