#pragma once

// Levi-Civita connection, curvature and derived tensors, all frame-indexed.
//
// Sign conventions:
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   S(Y,Z)  = trace(X -> R(X,Y)Z)
//   S*(X,Y) = 1/2 trace(Z -> phi R(X, phi Y) Z)
//   r = g^{ij} S_ij,  r* = g^{ij} S*_ij

#include "acm/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace acm {

class DegeneratePlane : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rank-3 frame array, index order (i, j, k).
class ExprTensor3 {
public:
    ExprTensor3() = default;
    explicit ExprTensor3(std::size_t n) : n_(n), data_(n * n * n) {}
    std::size_t dim() const { return n_; }
    Expr& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const Expr& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

private:
    std::size_t n_ = 0;
    std::vector<Expr> data_;
};

/// nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
struct ConnectionTable {
    ExprTensor3 gamma;

    std::size_t dim() const { return gamma.dim(); }
    FrameVector nabla(std::size_t i, std::size_t j) const;
};

/// Solves 2 g(nabla_{e_i} e_j, e_k) = (six-term Koszul right-hand side) with
/// the inverse metric.
ConnectionTable koszul(const Manifold& m);

FrameVector covariant_derivative(const Manifold& m, const ConnectionTable& conn, const FrameVector& x,
                                 const FrameVector& y);
/// (nabla_X A) as an operator: (nabla_X A) Y = nabla_X (A Y) - A (nabla_X Y).
ExprMatrix nabla_operator(const Manifold& m, const ConnectionTable& conn, const ExprMatrix& op, const FrameVector& x);
/// (nabla_X omega)(Y) = X(omega(Y)) - omega(nabla_X Y), omega given by its frame values.
Expr nabla_one_form(const Manifold& m, const ConnectionTable& conn, const FrameVector& omega, const FrameVector& x,
                    const FrameVector& y);

struct CurvatureTable {
    std::size_t n = 0;
    std::vector<Expr> components;  // R^l_{ijk} at ((i*n + j)*n + k)*n + l
    ExprMatrix ricci;              // S(e_i, e_j)
    ExprMatrix ricci_operator;     // Q, g(Q X, Y) = S(X, Y)
    Expr scalar;                   // r
    ExprMatrix star_ricci;         // S*(e_i, e_j)
    Expr star_scalar;              // r*

    std::size_t dim() const { return n; }
    const Expr& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return components[((i * n + j) * n + k) * n + l];
    }
    /// R(e_i, e_j) e_k.
    FrameVector r(std::size_t i, std::size_t j, std::size_t k) const;
};

CurvatureTable riemann(const Manifold& m, const ConnectionTable& conn);

/// R(X,Y)Z for arbitrary frame-component fields.
FrameVector curvature_apply(const CurvatureTable& t, const FrameVector& x, const FrameVector& y, const FrameVector& z);

/// g(R(X,Y)Y,X) / (g(X,X) g(Y,Y) - g(X,Y)^2). Throws DegeneratePlane when the
/// denominator vanishes at every sample point.
Expr sectional_curvature(const Manifold& m, const CurvatureTable& t, const FrameVector& x, const FrameVector& y);

struct SpectrumSample {
    Point point;
    std::vector<double> real;
    std::vector<double> imag;
};

struct StructureTensors {
    ExprMatrix h;        // 1/2 L_xi phi
    ExprMatrix h_prime;  // h o phi
    ExprMatrix ell;      // X -> R(X, xi) xi
    std::vector<SpectrumSample> spectrum;         // eigenvalues of h' per sample
    std::optional<std::vector<Rational>> exact;   // when h' has constant entries
};

StructureTensors h_tensors(const Manifold& m, const CurvatureTable& t);

/// Eigenvalues of a constant operator recognised as rationals, verified by
/// exact det(A - q I) = 0; nullopt if any eigenvalue is not recognised.
std::optional<std::vector<Rational>> exact_eigenvalues(const ExprMatrix& op);

/// (L_V g)(e_i, e_j) = V(g_ij) - g([V,e_i], e_j) - g(e_i, [V,e_j]).
ExprMatrix lie_derivative_metric(const Manifold& m, const FrameVector& v);
ExprMatrix lie_derivative_metric(const Manifold& m, const VectorField& v);

/// Hess f(e_i, e_j) = e_i(e_j f) - (nabla_{e_i} e_j) f.
ExprMatrix hessian(const Manifold& m, const ConnectionTable& conn, const Expr& f);

struct ExteriorForms {
    ExprMatrix d_eta;         // d eta(e_i, e_j)
    ExprMatrix fundamental;   // Phi(e_i, e_j) = g(e_i, phi e_j)
    ExprTensor3 d_phi;        // d Phi(e_i, e_j, e_k)
    ExprTensor3 eta_wedge_phi;
};

/// d omega(X,Y) = X(omega(Y)) - Y(omega(X)) - omega([X,Y]).
ExprMatrix exterior_derivative(const Manifold& m, const FrameVector& omega);
/// d Omega(X,Y,Z) = X Omega(Y,Z) - Y Omega(X,Z) + Z Omega(X,Y)
///                  - Omega([X,Y],Z) + Omega([X,Z],Y) - Omega([Y,Z],X).
ExprTensor3 exterior_derivative(const Manifold& m, const ExprMatrix& omega);
ExteriorForms exterior(const Manifold& m);

/// N_phi(e_i, e_j) = [phi,phi](e_i,e_j) + 2 d eta(e_i,e_j) xi, stored at i*dim + j.
std::vector<FrameVector> nijenhuis(const Manifold& m);
FrameVector nijenhuis(const Manifold& m, const FrameVector& x, const FrameVector& y);

}  // namespace acm
