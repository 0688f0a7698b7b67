#include "acm/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace acm {

ExprMatrix ExprMatrix::identity(std::size_t n) {
    ExprMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
    return m;
}

ExprMatrix ExprMatrix::transpose() const {
    ExprMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ExprMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExprMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExprMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExprMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    ExprMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Expr acc;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc += a(i, k) * b(k, j);
            }
            r(i, j) = acc;
        }
    return r;
}

ExprMatrix operator*(const Expr& s, const ExprMatrix& a) {
    ExprMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
}

bool operator==(const ExprMatrix& a, const ExprMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

class Laplace {
public:
    explicit Laplace(const ExprMatrix& m) : m_(m) {}

    Expr det(std::uint32_t used) {
        const auto row = static_cast<std::size_t>(std::popcount(used));
        if (row == m_.rows()) return Expr(1);
        if (auto it = memo_.find(used); it != memo_.end()) return it->second;
        Expr acc;
        int sign = 1;
        for (std::size_t c = 0; c < m_.cols(); ++c) {
            if (used & (1u << c)) continue;
            const Expr& a = m_(row, c);
            if (!a.is_zero()) {
                Expr minor = det(used | (1u << c));
                if (!minor.is_zero()) acc = sign > 0 ? acc + a * minor : acc - a * minor;
            }
            sign = -sign;
        }
        memo_.emplace(used, acc);
        return acc;
    }

private:
    const ExprMatrix& m_;
    std::unordered_map<std::uint32_t, Expr> memo_;
};

ExprMatrix minor_matrix(const ExprMatrix& m, std::size_t skip_row, std::size_t skip_col) {
    ExprMatrix r(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, ri = 0; i < m.rows(); ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0, rj = 0; j < m.cols(); ++j) {
            if (j == skip_col) continue;
            r(ri, rj++) = m(i, j);
        }
        ++ri;
    }
    return r;
}

}  // namespace

Expr determinant(const ExprMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() > 31) throw std::invalid_argument("matrix too large");
    if (m.rows() == 0) return Expr(1);
    return Laplace(m).det(0);
}

ExprMatrix inverse(const ExprMatrix& m) {
    const std::size_t n = m.rows();
    const Expr det = determinant(m);
    if (det.is_zero()) throw SingularMatrix("matrix determinant is identically zero");
    const Expr inv_det = pow(det, -1);
    ExprMatrix r(n, n);
    if (n == 1) {
        r(0, 0) = inv_det;
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Expr cof = determinant(minor_matrix(m, j, i));
            if (cof.is_zero()) continue;
            if ((i + j) % 2 == 1) cof = -cof;
            r(i, j) = cof * inv_det;
        }
    return r;
}

}  // namespace acm
