#pragma once

#include "acm/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace acm {

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense row-major matrix of scalar fields.
class ExprMatrix {
public:
    ExprMatrix() = default;
    ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExprMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Expr& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Expr& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ExprMatrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;  // structural equality of canonical forms

    friend ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator*(const Expr& s, const ExprMatrix& a);
    friend bool operator==(const ExprMatrix& a, const ExprMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Expr> data_;
};

/// Laplace expansion memoised over column subsets; skips zero entries.
Expr determinant(const ExprMatrix& m);

/// Adjugate over determinant. Throws SingularMatrix when the determinant is
/// the literal zero.
ExprMatrix inverse(const ExprMatrix& m);

}  // namespace acm
