#include "acm/geometry.hpp"

#include <sstream>

namespace acm {

namespace {

Sampler make_sampler(const ManifoldSpec& spec) {
    try {
        return Sampler(spec.domain, spec.sampling);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("sampling domain: ") + e.what());
    }
}

void require_square(const ExprMatrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        std::ostringstream os;
        os << what << " must be " << n << "x" << n << " (got " << m.rows() << "x" << m.cols() << ")";
        throw ValidationError(os.str());
    }
}

void require_nonsingular(const Expr& det, const Sampler& s, double tol, const char* what) {
    for (const auto& p : s.points()) {
        bool bad = false;
        try {
            bad = numerically_zero(eval(det, p), tol);
        } catch (const DivisionByZero&) {
            bad = true;
        }
        if (bad) throw SingularFrame(std::string(what) + " determinant vanishes at a sample point", p);
    }
}

}  // namespace

Manifold::Manifold(ManifoldSpec spec)
    : spec_(std::move(spec)), dim_(spec_.coordinates.size()), sampler_(make_sampler(spec_)) {
    if (dim_ < 3 || dim_ % 2 == 0)
        throw ValidationError("dimension must be odd and at least 3 (got " + std::to_string(dim_) + ")");
    require_square(spec_.frame, dim_, "frame");
    require_square(spec_.metric, dim_, "metric");
    require_square(spec_.phi, dim_, "phi");
    if (spec_.xi.size() != dim_) throw ValidationError("xi must have one component per frame vector");
    if (spec_.domain.dimension() != dim_) throw ValidationError("domain box must cover every coordinate");
    if (!spec_.metric.is_symmetric()) throw ValidationError("metric must be symmetric");

    const Expr det_e = determinant(spec_.frame);
    if (det_e.is_zero()) throw SingularFrame("frame vectors are linearly dependent");
    require_nonsingular(det_e, sampler_, spec_.tol, "frame");
    const Expr det_g = determinant(spec_.metric);
    if (det_g.is_zero()) throw SingularFrame("metric is degenerate");
    require_nonsingular(det_g, sampler_, spec_.tol, "metric");

    frame_inv_ = inverse(spec_.frame);
    metric_inv_ = inverse(spec_.metric);
    phi_op_ = spec_.phi.transpose();

    eta_ = FrameVector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Expr acc;
        for (std::size_t k = 0; k < dim_; ++k) acc += spec_.metric(i, k) * spec_.xi[k];
        eta_[i] = acc;
    }
    Expr eta_xi_value;
    for (std::size_t i = 0; i < dim_; ++i) eta_xi_value += eta_[i] * spec_.xi[i];
    const ZeroTest unit = is_zero(eta_xi_value - Expr(1), sampler_, spec_.tol);
    if (unit.verdict == Verdict::NonZero) throw ValidationError("eta(xi) = g(xi, xi) must equal 1", unit.witness);

    brackets_.assign(dim_ * dim_, FrameVector(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            FrameVector c = to_frame(*this, lie_bracket(frame_vector_field(*this, i), frame_vector_field(*this, j)));
            brackets_[j * dim_ + i] = -c;
            brackets_[i * dim_ + j] = std::move(c);
        }
}

Expr Manifold::frame_derivative(std::size_t i, const Expr& f) const {
    Expr acc;
    for (std::size_t a = 0; a < dim_; ++a) {
        const Expr& e = spec_.frame(i, a);
        if (e.is_zero()) continue;
        Expr d = partial(f, static_cast<int>(a));
        if (!d.is_zero()) acc += e * d;
    }
    return acc;
}

Manifold Manifold::with_sampling(SamplingOptions opts) const {
    ManifoldSpec s = spec_;
    s.sampling = opts;
    return Manifold(std::move(s));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    if (x.size() != y.size()) throw std::invalid_argument("lie_bracket: dimension mismatch");
    VectorField r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = directional(x, y[k]) - directional(y, x[k]);
    return r;
}

Expr directional(const VectorField& x, const Expr& f) {
    Expr acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        Expr d = partial(f, static_cast<int>(i));
        if (!d.is_zero()) acc += x[i] * d;
    }
    return acc;
}

VectorField frame_vector_field(const Manifold& m, std::size_t i) {
    VectorField v(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a) v[a] = m.frame()(i, a);
    return v;
}

FrameVector to_frame(const Manifold& m, const VectorField& x) {
    const auto& inv = m.frame_inverse();
    FrameVector c(m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Expr acc;
        for (std::size_t a = 0; a < m.dim(); ++a) {
            if (x[a].is_zero() || inv(a, k).is_zero()) continue;
            acc += x[a] * inv(a, k);
        }
        c[k] = acc;
    }
    return c;
}

VectorField to_coordinates(const Manifold& m, const FrameVector& c) {
    VectorField x(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a) {
        Expr acc;
        for (std::size_t k = 0; k < m.dim(); ++k) {
            if (c[k].is_zero() || m.frame()(k, a).is_zero()) continue;
            acc += c[k] * m.frame()(k, a);
        }
        x[a] = acc;
    }
    return x;
}

Expr metric_apply(const Manifold& m, const VectorField& x, const VectorField& y) {
    return inner(m, to_frame(m, x), to_frame(m, y));
}

Expr eta_apply(const Manifold& m, const VectorField& x) { return eta_of(m, to_frame(m, x)); }

VectorField phi_apply(const Manifold& m, const VectorField& x) {
    return to_coordinates(m, phi_of(m, to_frame(m, x)));
}

VectorField sharp(const Manifold& m, const FrameVector& omega) {
    FrameVector c(m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Expr acc;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (omega[j].is_zero()) continue;
            acc += m.metric_inverse()(k, j) * omega[j];
        }
        c[k] = acc;
    }
    return to_coordinates(m, c);
}

VectorField gradient(const Manifold& m, const Expr& f) { return to_coordinates(m, gradient_frame(m, f)); }

FrameVector gradient_frame(const Manifold& m, const Expr& f) {
    FrameVector df(m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) df[j] = m.frame_derivative(j, f);
    FrameVector c(m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Expr acc;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (df[j].is_zero()) continue;
            acc += m.metric_inverse()(k, j) * df[j];
        }
        c[k] = acc;
    }
    return c;
}

Expr derivative(const Manifold& m, const FrameVector& x, const Expr& f) {
    if (f.is_constant()) return Expr();
    Expr acc;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (x[i].is_zero()) continue;
        Expr d = m.frame_derivative(i, f);
        if (!d.is_zero()) acc += x[i] * d;
    }
    return acc;
}

FrameVector frame_bracket(const Manifold& m, const FrameVector& x, const FrameVector& y) {
    const std::size_t n = m.dim();
    FrameVector r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = derivative(m, x, y[k]) - derivative(m, y, x[k]);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const FrameVector& c = m.structure(i, j);
            if (c.is_zero()) continue;
            const Expr w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero()) r[k] += w * c[k];
        }
    }
    return r;
}

Expr bilinear(const ExprMatrix& b, const FrameVector& x, const FrameVector& y) {
    Expr acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero() || b(i, j).is_zero()) continue;
            acc += x[i] * y[j] * b(i, j);
        }
    }
    return acc;
}

Expr inner(const Manifold& m, const FrameVector& x, const FrameVector& y) { return bilinear(m.metric(), x, y); }

Expr eta_of(const Manifold& m, const FrameVector& x) {
    Expr acc;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (!x[i].is_zero() && !m.eta()[i].is_zero()) acc += x[i] * m.eta()[i];
    return acc;
}

FrameVector apply(const ExprMatrix& op, const FrameVector& x) {
    FrameVector r(op.rows());
    for (std::size_t k = 0; k < op.rows(); ++k) {
        Expr acc;
        for (std::size_t j = 0; j < op.cols(); ++j)
            if (!x[j].is_zero() && !op(k, j).is_zero()) acc += op(k, j) * x[j];
        r[k] = acc;
    }
    return r;
}

FrameVector phi_of(const Manifold& m, const FrameVector& x) { return apply(m.phi(), x); }

ExprMatrix lower(const Manifold& m, const ExprMatrix& op) { return op.transpose() * m.metric(); }

ExprMatrix raise(const Manifold& m, const ExprMatrix& b) { return (b * m.metric_inverse()).transpose(); }

ExprMatrix eta_eta(const Manifold& m) {
    ExprMatrix r(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m.eta()[i] * m.eta()[j];
    return r;
}

ExprMatrix eta_xi(const Manifold& m) {
    ExprMatrix r(m.dim(), m.dim());
    for (std::size_t k = 0; k < m.dim(); ++k)
        for (std::size_t j = 0; j < m.dim(); ++j) r(k, j) = m.eta()[j] * m.xi()[k];
    return r;
}

Expr metric_trace(const Manifold& m, const ExprMatrix& b) {
    Expr acc;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!b(i, j).is_zero() && !m.metric_inverse()(i, j).is_zero()) acc += m.metric_inverse()(i, j) * b(i, j);
    return acc;
}

Expr trace(const ExprMatrix& op) {
    Expr acc;
    for (std::size_t i = 0; i < op.rows(); ++i) acc += op(i, i);
    return acc;
}

}  // namespace acm
