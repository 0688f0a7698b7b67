#include "acm/curvature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace acm {

FrameVector ConnectionTable::nabla(std::size_t i, std::size_t j) const {
    FrameVector v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = gamma(i, j, k);
    return v;
}

ConnectionTable koszul(const Manifold& m) {
    const std::size_t n = m.dim();
    const ExprMatrix& g = m.metric();
    // lowered[i][j][k] = g(nabla_i e_j, e_k)
    ExprTensor3 lowered(n);
    auto g_with = [&](std::size_t a, const FrameVector& c) {
        Expr acc;
        for (std::size_t q = 0; q < n; ++q)
            if (!c[q].is_zero() && !g(a, q).is_zero()) acc += g(a, q) * c[q];
        return acc;
    };
    const Expr half = Expr::rational(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Expr rhs = m.frame_derivative(i, g(j, k)) + m.frame_derivative(j, g(k, i)) -
                           m.frame_derivative(k, g(i, j)) - g_with(i, m.structure(j, k)) -
                           g_with(j, m.structure(i, k)) + g_with(k, m.structure(i, j));
                lowered(i, j, k) = half * rhs;
            }
    ConnectionTable conn{ExprTensor3(n)};
    const ExprMatrix& ginv = m.metric_inverse();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Expr acc;
                for (std::size_t k = 0; k < n; ++k)
                    if (!ginv(l, k).is_zero() && !lowered(i, j, k).is_zero()) acc += ginv(l, k) * lowered(i, j, k);
                conn.gamma(i, j, l) = acc;
            }
    return conn;
}

FrameVector covariant_derivative(const Manifold& m, const ConnectionTable& conn, const FrameVector& x,
                                 const FrameVector& y) {
    const std::size_t n = m.dim();
    FrameVector r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = derivative(m, x, y[k]);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Expr w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!conn.gamma(i, j, k).is_zero()) r[k] += w * conn.gamma(i, j, k);
        }
    }
    return r;
}

ExprMatrix nabla_operator(const Manifold& m, const ConnectionTable& conn, const ExprMatrix& op, const FrameVector& x) {
    const std::size_t n = m.dim();
    ExprMatrix r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const FrameVector ej = FrameVector::basis(n, j);
        FrameVector col = covariant_derivative(m, conn, x, apply(op, ej)) - apply(op, covariant_derivative(m, conn, x, ej));
        for (std::size_t k = 0; k < n; ++k) r(k, j) = col[k];
    }
    return r;
}

Expr nabla_one_form(const Manifold& m, const ConnectionTable& conn, const FrameVector& omega, const FrameVector& x,
                    const FrameVector& y) {
    Expr val;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (!omega[i].is_zero() && !y[i].is_zero()) val += omega[i] * y[i];
    const FrameVector d = covariant_derivative(m, conn, x, y);
    Expr acc = derivative(m, x, val);
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (!omega[i].is_zero() && !d[i].is_zero()) acc -= omega[i] * d[i];
    return acc;
}

FrameVector CurvatureTable::r(std::size_t i, std::size_t j, std::size_t k) const {
    FrameVector v(n);
    for (std::size_t l = 0; l < n; ++l) v[l] = (*this)(i, j, k, l);
    return v;
}

CurvatureTable riemann(const Manifold& m, const ConnectionTable& conn) {
    const std::size_t n = m.dim();
    CurvatureTable t;
    t.n = n;
    t.components.assign(n * n * n * n, Expr());
    auto at = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> Expr& {
        return t.components[((i * n + j) * n + k) * n + l];
    };
    const ExprTensor3& gm = conn.gamma;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const FrameVector& c = m.structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Expr acc = m.frame_derivative(i, gm(j, k, l)) - m.frame_derivative(j, gm(i, k, l));
                    for (std::size_t q = 0; q < n; ++q) {
                        if (!gm(j, k, q).is_zero() && !gm(i, q, l).is_zero()) acc += gm(j, k, q) * gm(i, q, l);
                        if (!gm(i, k, q).is_zero() && !gm(j, q, l).is_zero()) acc -= gm(i, k, q) * gm(j, q, l);
                        if (!c[q].is_zero() && !gm(q, k, l).is_zero()) acc -= c[q] * gm(q, k, l);
                    }
                    at(j, i, k, l) = -acc;
                    at(i, j, k, l) = std::move(acc);
                }
        }

    t.ricci = ExprMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Expr acc;
            for (std::size_t i = 0; i < n; ++i) acc += t(i, j, k, i);
            t.ricci(j, k) = acc;
        }
    t.ricci_operator = raise(m, t.ricci);
    t.scalar = metric_trace(m, t.ricci);

    // S*(e_a, e_b) = 1/2 sum_{i,l,j} phi(i,l) phi(j,b) R^l_{a j i}
    const ExprMatrix& phi = m.phi();
    const Expr half = Expr::rational(1, 2);
    t.star_ricci = ExprMatrix(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Expr acc;
            for (std::size_t j = 0; j < n; ++j) {
                if (phi(j, b).is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t l = 0; l < n; ++l) {
                        if (phi(i, l).is_zero()) continue;
                        const Expr& rv = t(a, j, i, l);
                        if (!rv.is_zero()) acc += phi(i, l) * phi(j, b) * rv;
                    }
            }
            t.star_ricci(a, b) = half * acc;
        }
    t.star_scalar = metric_trace(m, t.star_ricci);
    return t;
}

FrameVector curvature_apply(const CurvatureTable& t, const FrameVector& x, const FrameVector& y, const FrameVector& z) {
    const std::size_t n = t.dim();
    FrameVector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const Expr xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (z[k].is_zero()) continue;
                const Expr w = xy * z[k];
                for (std::size_t l = 0; l < n; ++l)
                    if (!t(i, j, k, l).is_zero()) r[l] += w * t(i, j, k, l);
            }
        }
    }
    return r;
}

Expr sectional_curvature(const Manifold& m, const CurvatureTable& t, const FrameVector& x, const FrameVector& y) {
    const Expr num = inner(m, curvature_apply(t, x, y, y), x);
    const Expr gxy = inner(m, x, y);
    const Expr den = inner(m, x, x) * inner(m, y, y) - gxy * gxy;
    if (den.is_zero()) throw DegeneratePlane("plane section is degenerate");
    bool any = false;
    for (const auto& p : m.sampler().points()) {
        try {
            if (!numerically_zero(eval(den, p), m.tol())) {
                any = true;
                break;
            }
        } catch (const DivisionByZero&) {
        }
    }
    if (!any) throw DegeneratePlane("plane section is degenerate at every sample point");
    return num / den;
}

std::optional<std::vector<Rational>> exact_eigenvalues(const ExprMatrix& op) {
    const std::size_t n = op.rows();
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!op(i, j).is_constant()) return std::nullopt;
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = op(i, j).constant().get_d();
        }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    std::vector<Rational> out;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const auto ev = solver.eigenvalues()[k];
        if (std::abs(ev.imag()) > 1e-9) return std::nullopt;
        std::optional<Rational> hit;
        for (long den = 1; den <= 64 && !hit; ++den) {
            const double num = std::round(ev.real() * static_cast<double>(den));
            if (std::abs(num / static_cast<double>(den) - ev.real()) > 1e-9) continue;
            Rational q(static_cast<long>(num), den);
            q.canonicalize();
            if (determinant(op - Expr(q) * ExprMatrix::identity(n)).is_zero()) hit = q;
        }
        if (!hit) return std::nullopt;
        out.push_back(*hit);
    }
    std::sort(out.begin(), out.end());
    return out;
}

StructureTensors h_tensors(const Manifold& m, const CurvatureTable& t) {
    const std::size_t n = m.dim();
    StructureTensors s;
    s.h = ExprMatrix(n, n);
    s.ell = ExprMatrix(n, n);
    const Expr half = Expr::rational(1, 2);
    for (std::size_t j = 0; j < n; ++j) {
        const FrameVector ej = FrameVector::basis(n, j);
        // (L_xi phi) e_j = [xi, phi e_j] - phi [xi, e_j]
        const FrameVector l = frame_bracket(m, m.xi(), phi_of(m, ej)) - phi_of(m, frame_bracket(m, m.xi(), ej));
        const FrameVector lx = curvature_apply(t, ej, m.xi(), m.xi());
        for (std::size_t k = 0; k < n; ++k) {
            s.h(k, j) = half * l[k];
            s.ell(k, j) = lx[k];
        }
    }
    s.h_prime = s.h * m.phi();

    for (const auto& p : m.sampler().points()) {
        Eigen::MatrixXd a(n, n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                try {
                    a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval_double(s.h_prime(i, j), p);
                } catch (const DivisionByZero&) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
        std::vector<std::pair<double, double>> ev;
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
            ev.emplace_back(solver.eigenvalues()[k].real(), solver.eigenvalues()[k].imag());
        std::sort(ev.begin(), ev.end());
        SpectrumSample sample{p, {}, {}};
        for (const auto& [re, im] : ev) {
            sample.real.push_back(re == 0.0 ? 0.0 : re);
            sample.imag.push_back(im == 0.0 ? 0.0 : im);
        }
        s.spectrum.push_back(std::move(sample));
    }
    s.exact = exact_eigenvalues(s.h_prime);
    return s;
}

ExprMatrix lie_derivative_metric(const Manifold& m, const FrameVector& v) {
    const std::size_t n = m.dim();
    std::vector<FrameVector> vb;
    vb.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vb.push_back(frame_bracket(m, v, FrameVector::basis(n, i)));
    ExprMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Expr acc = derivative(m, v, m.metric()(i, j)) - inner(m, vb[i], FrameVector::basis(n, j)) -
                       inner(m, FrameVector::basis(n, i), vb[j]);
            r(j, i) = acc;
            r(i, j) = std::move(acc);
        }
    return r;
}

ExprMatrix lie_derivative_metric(const Manifold& m, const VectorField& v) {
    return lie_derivative_metric(m, to_frame(m, v));
}

ExprMatrix hessian(const Manifold& m, const ConnectionTable& conn, const Expr& f) {
    const std::size_t n = m.dim();
    std::vector<Expr> df(n);
    for (std::size_t k = 0; k < n; ++k) df[k] = m.frame_derivative(k, f);
    ExprMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Expr acc = m.frame_derivative(i, df[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (!conn.gamma(i, j, k).is_zero() && !df[k].is_zero()) acc -= conn.gamma(i, j, k) * df[k];
            h(i, j) = acc;
        }
    return h;
}

ExprMatrix exterior_derivative(const Manifold& m, const FrameVector& omega) {
    const std::size_t n = m.dim();
    ExprMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Expr acc = m.frame_derivative(i, omega[j]) - m.frame_derivative(j, omega[i]);
            const FrameVector& c = m.structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero() && !omega[k].is_zero()) acc -= c[k] * omega[k];
            d(j, i) = -acc;
            d(i, j) = std::move(acc);
        }
    return d;
}

ExprTensor3 exterior_derivative(const Manifold& m, const ExprMatrix& omega) {
    const std::size_t n = m.dim();
    auto on = [&](const FrameVector& c, std::size_t b) {
        Expr acc;
        for (std::size_t q = 0; q < n; ++q)
            if (!c[q].is_zero() && !omega(q, b).is_zero()) acc += c[q] * omega(q, b);
        return acc;
    };
    ExprTensor3 d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                d(i, j, k) = m.frame_derivative(i, omega(j, k)) - m.frame_derivative(j, omega(i, k)) +
                             m.frame_derivative(k, omega(i, j)) - on(m.structure(i, j), k) +
                             on(m.structure(i, k), j) - on(m.structure(j, k), i);
            }
    return d;
}

ExteriorForms exterior(const Manifold& m) {
    const std::size_t n = m.dim();
    ExteriorForms f;
    f.d_eta = exterior_derivative(m, m.eta());
    f.fundamental = ExprMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f.fundamental(i, j) = inner(m, FrameVector::basis(n, i), phi_of(m, FrameVector::basis(n, j)));
    f.d_phi = exterior_derivative(m, f.fundamental);
    f.eta_wedge_phi = ExprTensor3(n);
    const FrameVector& eta = m.eta();
    const ExprMatrix& p = f.fundamental;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                f.eta_wedge_phi(i, j, k) = eta[i] * p(j, k) + eta[j] * p(k, i) + eta[k] * p(i, j);
    return f;
}

FrameVector nijenhuis(const Manifold& m, const FrameVector& x, const FrameVector& y) {
    const FrameVector px = phi_of(m, x);
    const FrameVector py = phi_of(m, y);
    const FrameVector xy = frame_bracket(m, x, y);
    FrameVector bracket = phi_of(m, phi_of(m, xy)) + frame_bracket(m, px, py) - phi_of(m, frame_bracket(m, px, y)) -
                          phi_of(m, frame_bracket(m, x, py));
    // 2 d eta(X,Y) = 2 (X(eta Y) - Y(eta X) - eta([X,Y]))
    const Expr deta = derivative(m, x, eta_of(m, y)) - derivative(m, y, eta_of(m, x)) - eta_of(m, xy);
    return bracket + (Expr(2) * deta) * m.xi();
}

std::vector<FrameVector> nijenhuis(const Manifold& m) {
    const std::size_t n = m.dim();
    std::vector<FrameVector> out(n * n, FrameVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            FrameVector v = nijenhuis(m, FrameVector::basis(n, i), FrameVector::basis(n, j));
            out[j * n + i] = -v;
            out[i * n + j] = std::move(v);
        }
    return out;
}

}  // namespace acm
