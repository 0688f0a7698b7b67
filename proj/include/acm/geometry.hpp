#pragma once

// Manifold specification over a single chart: frame, metric on the frame,
// almost contact data, vector-field algebra and musical isomorphisms.
//
// Conventions used throughout the library:
//   * frame row i holds the coordinate components of e_i;
//   * metric(i, j) = g(e_i, e_j), possibly indefinite;
//   * (1,1) tensors are FrameOperator matrices with op(k, j) = (A e_j)^k,
//     i.e. they act on frame-component column vectors;
//   * eta is always derived: eta_i = g(e_i, xi).

#include "acm/matrix.hpp"
#include "acm/sampling.hpp"
#include "acm/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acm {

template <class Tag>
class Components {
public:
    Components() = default;
    explicit Components(std::size_t n) : c_(n) {}
    explicit Components(std::vector<Expr> c) : c_(std::move(c)) {}

    std::size_t size() const { return c_.size(); }
    Expr& operator[](std::size_t i) { return c_[i]; }
    const Expr& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Expr>& values() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool is_zero() const {
        for (const auto& e : c_)
            if (!e.is_zero()) return false;
        return true;
    }

    static Components basis(std::size_t n, std::size_t k) {
        Components v(n);
        v[k] = Expr(1);
        return v;
    }

    friend Components operator+(const Components& a, const Components& b) {
        Components r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend Components operator-(const Components& a, const Components& b) {
        Components r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend Components operator-(const Components& a) {
        Components r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    }
    friend Components operator*(const Expr& s, const Components& a) {
        Components r(a.size());
        if (s.is_zero()) return r;
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
        return r;
    }
    friend bool operator==(const Components& a, const Components& b) { return a.c_ == b.c_; }

private:
    std::vector<Expr> c_;
};

struct CoordinateTag {};
struct FrameTag {};

/// Components in the coordinate basis d/dx_i.
using VectorField = Components<CoordinateTag>;
/// Components in the frame e_1..e_m.
using FrameVector = Components<FrameTag>;

class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, std::optional<Point> witness = std::nullopt)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::optional<Point>& witness() const { return witness_; }

private:
    std::optional<Point> witness_;
};

class SingularFrame : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Declarative description; Manifold validates and derives from it.
struct ManifoldSpec {
    std::string name;
    std::vector<std::string> coordinates;
    ExprMatrix frame;   // row i = e_i in coordinate components
    ExprMatrix metric;  // g(e_i, e_j)
    ExprMatrix phi;     // row j = frame components of phi(e_j)
    FrameVector xi;
    Domain domain;
    SamplingOptions sampling;
    double tol = kDefaultTolerance;
};

class Manifold {
public:
    /// Validates dimensions, odd dimension >= 3, metric symmetry, and that
    /// det(frame) and det(metric) are nonzero at every sample point.
    explicit Manifold(ManifoldSpec spec);

    const ManifoldSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    const std::vector<std::string>& coordinates() const { return spec_.coordinates; }
    std::size_t dim() const { return dim_; }
    /// n in dim = 2n + 1.
    long n() const { return static_cast<long>((dim_ - 1) / 2); }
    double tol() const { return spec_.tol; }
    const Sampler& sampler() const { return sampler_; }

    const ExprMatrix& frame() const { return spec_.frame; }
    const ExprMatrix& frame_inverse() const { return frame_inv_; }
    const ExprMatrix& metric() const { return spec_.metric; }
    const ExprMatrix& metric_inverse() const { return metric_inv_; }
    /// Column form: phi_op(k, j) = (phi e_j)^k.
    const ExprMatrix& phi() const { return phi_op_; }
    const FrameVector& xi() const { return spec_.xi; }
    /// eta(e_i) = g(e_i, xi).
    const FrameVector& eta() const { return eta_; }
    /// [e_i, e_j] in frame components.
    const FrameVector& structure(std::size_t i, std::size_t j) const { return brackets_[i * dim_ + j]; }

    /// e_i(f).
    Expr frame_derivative(std::size_t i, const Expr& f) const;

    Manifold with_sampling(SamplingOptions opts) const;

private:
    ManifoldSpec spec_;
    std::size_t dim_ = 0;
    Sampler sampler_;
    ExprMatrix frame_inv_;
    ExprMatrix metric_inv_;
    ExprMatrix phi_op_;
    FrameVector eta_;
    std::vector<FrameVector> brackets_;
};

// --- coordinate-basis operations ----------------------------------------

/// [X,Y]^k = sum_i X^i d_i Y^k - Y^i d_i X^k.
VectorField lie_bracket(const VectorField& x, const VectorField& y);
/// X(f) in coordinates.
Expr directional(const VectorField& x, const Expr& f);
VectorField frame_vector_field(const Manifold& m, std::size_t i);

FrameVector to_frame(const Manifold& m, const VectorField& x);
VectorField to_coordinates(const Manifold& m, const FrameVector& c);

Expr metric_apply(const Manifold& m, const VectorField& x, const VectorField& y);
Expr eta_apply(const Manifold& m, const VectorField& x);
VectorField phi_apply(const Manifold& m, const VectorField& x);

/// Raises a 1-form given by its frame values omega(e_j).
VectorField sharp(const Manifold& m, const FrameVector& omega);
/// Df with g(Df, X) = X(f).
VectorField gradient(const Manifold& m, const Expr& f);

// --- frame-component operations ------------------------------------------

Expr derivative(const Manifold& m, const FrameVector& x, const Expr& f);
FrameVector frame_bracket(const Manifold& m, const FrameVector& x, const FrameVector& y);
Expr inner(const Manifold& m, const FrameVector& x, const FrameVector& y);
Expr eta_of(const Manifold& m, const FrameVector& x);
FrameVector apply(const ExprMatrix& op, const FrameVector& x);
FrameVector phi_of(const Manifold& m, const FrameVector& x);
/// Frame components of the gradient.
FrameVector gradient_frame(const Manifold& m, const Expr& f);

/// Bilinear form b(x, y) = sum x^i y^j b(i, j).
Expr bilinear(const ExprMatrix& b, const FrameVector& x, const FrameVector& y);
/// Frame matrix of g(A ., .) lowered: (A^flat)(i, j) = g(A e_i, e_j).
ExprMatrix lower(const Manifold& m, const ExprMatrix& op);
/// Operator A with g(A X, Y) = b(X, Y).
ExprMatrix raise(const Manifold& m, const ExprMatrix& b);
/// eta (x) eta as a frame matrix.
ExprMatrix eta_eta(const Manifold& m);
/// eta (x) xi as an operator: X -> eta(X) xi.
ExprMatrix eta_xi(const Manifold& m);
/// sum g^{ij} b(i, j).
Expr metric_trace(const Manifold& m, const ExprMatrix& b);
Expr trace(const ExprMatrix& op);

}  // namespace acm
