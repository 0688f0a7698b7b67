#include "acm/structure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace acm {

bool CheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.passed(); });
}

const CheckResult* CheckReport::find(std::string_view check) const {
    for (const auto& c : checks)
        if (c.name == check) return &c;
    return nullptr;
}

const FitParameter& FitResult::operator[](std::string_view name) const {
    for (const auto& p : params)
        if (p.name == name) return p;
    throw std::out_of_range("no fit parameter named " + std::string(name));
}

namespace {

std::string frame_label(std::size_t i) { return "e" + std::to_string(i + 1); }

FrameVector random_field(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    FrameVector v(n);
    for (std::size_t k = 0; k < n; ++k) {
        Expr c(coeff(rng));
        for (std::size_t a = 0; a < n; ++a) {
            const int q = coeff(rng);
            if (q != 0 && coeff(rng) > 0) c += Expr(q) * Expr::symbol(static_cast<int>(a));
        }
        v[k] = c;
    }
    return v;
}

std::vector<Probe> singles(const std::vector<Probe>& ps, std::size_t n) {
    std::vector<Probe> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({frame_label(i), FrameVector::basis(n, i), FrameVector(n)});
    for (const auto& p : ps)
        if (p.label.rfind("rand", 0) == 0) out.push_back({p.label, p.x, FrameVector(n)});
    return out;
}

FrameVector scaled(const Expr& s, const FrameVector& v) { return s * v; }

}  // namespace

std::vector<Probe> probes(const Manifold& m, std::size_t randomized) {
    const std::size_t n = m.dim();
    std::vector<Probe> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.push_back({frame_label(i) + "," + frame_label(j), FrameVector::basis(n, i), FrameVector::basis(n, j)});
    std::mt19937_64 rng(m.sampler().options().seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < randomized; ++k) {
        FrameVector x = random_field(rng, n);
        FrameVector y = random_field(rng, n);
        out.push_back({"rand" + std::to_string(k), std::move(x), std::move(y)});
    }
    return out;
}

CheckResult check_zero(const Manifold& m, std::string name, const std::vector<std::pair<std::string, Expr>>& items) {
    CheckResult r;
    r.name = std::move(name);
    bool numeric = false;
    for (const auto& [label, e] : items) {
        const ZeroTest z = is_zero(e, m.sampler(), m.tol());
        if (z.verdict == Verdict::ProvedZero) continue;
        if (z.verdict == Verdict::NumericallyZero) {
            r.residual = std::max(r.residual, z.max_abs);
            numeric = true;
            continue;
        }
        if (r.verdict != Verdict::NonZero) {
            r.verdict = Verdict::NonZero;
            r.witness = z.witness;
            r.witness_value = z.witness_value;
            r.where = label;
        }
        r.residual = std::max(r.residual, z.max_abs);
    }
    if (r.verdict != Verdict::NonZero && numeric) r.verdict = Verdict::NumericallyZero;
    return r;
}

CheckResult check_vector(const Manifold& m, std::string name, const std::vector<Probe>& ps,
                         const std::function<FrameVector(const FrameVector&, const FrameVector&)>& f) {
    std::vector<std::pair<std::string, Expr>> items;
    for (const auto& p : ps) {
        const FrameVector v = f(p.x, p.y);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) items.emplace_back(p.label + "[" + frame_label(k) + "]", v[k]);
    }
    return check_zero(m, std::move(name), items);
}

CheckResult check_scalar(const Manifold& m, std::string name, const std::vector<Probe>& ps,
                         const std::function<Expr(const FrameVector&, const FrameVector&)>& f) {
    std::vector<std::pair<std::string, Expr>> items;
    for (const auto& p : ps) {
        Expr e = f(p.x, p.y);
        if (!e.is_zero()) items.emplace_back(p.label, std::move(e));
    }
    return check_zero(m, std::move(name), items);
}

CheckResult check_matrix(const Manifold& m, std::string name, const ExprMatrix& a) {
    std::vector<std::pair<std::string, Expr>> items;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) items.emplace_back(frame_label(i) + "," + frame_label(j), a(i, j));
    return check_zero(m, std::move(name), items);
}

CheckReport check_almost_contact(const Manifold& m) {
    const std::size_t n = m.dim();
    const auto ps = probes(m);
    const auto ones = singles(ps, n);
    CheckReport rep{"almost-contact", {}};
    rep.add(check_vector(m, "phi_squared", ones, [&](const FrameVector& x, const FrameVector&) {
        return phi_of(m, phi_of(m, x)) + x - scaled(eta_of(m, x), m.xi());
    }));
    rep.add(check_zero(m, "eta_xi", {{"xi", eta_of(m, m.xi()) - Expr(1)}}));
    rep.add(check_scalar(m, "compatibility", ps, [&](const FrameVector& x, const FrameVector& y) {
        return inner(m, phi_of(m, x), phi_of(m, y)) - inner(m, x, y) + eta_of(m, x) * eta_of(m, y);
    }));
    {
        const FrameVector v = phi_of(m, m.xi());
        std::vector<std::pair<std::string, Expr>> items;
        for (std::size_t k = 0; k < n; ++k) items.emplace_back("xi[" + frame_label(k) + "]", v[k]);
        rep.add(check_zero(m, "phi_xi", items));
    }
    rep.add(check_scalar(m, "eta_phi", ones,
                         [&](const FrameVector& x, const FrameVector&) { return eta_of(m, phi_of(m, x)); }));
    rep.add(check_scalar(m, "eta_metric", ones,
                         [&](const FrameVector& x, const FrameVector&) { return inner(m, x, m.xi()) - eta_of(m, x); }));
    rep.add(check_scalar(m, "phi_skew", ps, [&](const FrameVector& x, const FrameVector& y) {
        return inner(m, phi_of(m, x), y) + inner(m, x, phi_of(m, y));
    }));
    return rep;
}

namespace {

CheckResult check_d_phi(const Manifold& m, const ExteriorForms& forms) {
    const std::size_t n = m.dim();
    std::vector<std::pair<std::string, Expr>> items;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Expr e = forms.d_phi(i, j, k) - Expr(2) * forms.eta_wedge_phi(i, j, k);
                if (!e.is_zero())
                    items.emplace_back(frame_label(i) + "," + frame_label(j) + "," + frame_label(k), std::move(e));
            }
    return check_zero(m, "d_Phi", items);
}

}  // namespace

CheckReport check_kenmotsu(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t) {
    const std::size_t n = m.dim();
    const Expr two_n(2 * m.n());
    const auto ps = probes(m);
    const auto ones = singles(ps, n);
    const FrameVector& xi = m.xi();
    CheckReport rep{"kenmotsu", {}};

    rep.add(check_vector(m, "kenmotsu", ps, [&](const FrameVector& x, const FrameVector& y) {
        const FrameVector nphi = covariant_derivative(m, conn, x, phi_of(m, y)) -
                                 phi_of(m, covariant_derivative(m, conn, x, y));
        return nphi - scaled(inner(m, phi_of(m, x), y), xi) + scaled(eta_of(m, y), phi_of(m, x));
    }));
    rep.add(check_vector(m, "nabla_xi", ones, [&](const FrameVector& x, const FrameVector&) {
        return covariant_derivative(m, conn, x, xi) - x + scaled(eta_of(m, x), xi);
    }));
    rep.add(check_scalar(m, "nabla_eta", ps, [&](const FrameVector& x, const FrameVector& y) {
        return nabla_one_form(m, conn, m.eta(), x, y) - inner(m, x, y) + eta_of(m, x) * eta_of(m, y);
    }));
    rep.add(check_vector(m, "curvature_xi", ps, [&](const FrameVector& x, const FrameVector& y) {
        return curvature_apply(t, x, y, xi) - scaled(eta_of(m, x), y) + scaled(eta_of(m, y), x);
    }));
    rep.add(check_scalar(m, "ricci_xi", ones, [&](const FrameVector& x, const FrameVector&) {
        return bilinear(t.ricci, x, xi) + two_n * eta_of(m, x);
    }));
    rep.add(check_matrix(m, "lie_xi_g",
                         lie_derivative_metric(m, xi) - Expr(2) * m.metric() + Expr(2) * eta_eta(m)));
    const ExteriorForms forms = exterior(m);
    rep.add(check_matrix(m, "d_eta", forms.d_eta));
    rep.add(check_d_phi(m, forms));
    return rep;
}

CheckReport check_almost_kenmotsu(const Manifold& m) {
    CheckReport rep{"almost-kenmotsu", {}};
    const ExteriorForms forms = exterior(m);
    rep.add(check_matrix(m, "d_eta", forms.d_eta));
    rep.add(check_d_phi(m, forms));
    return rep;
}

CheckReport check_kenmotsu_lemmas(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t) {
    const std::size_t n = m.dim();
    const Expr two_n(2 * m.n());
    const auto ones = singles(probes(m), n);
    const FrameVector& xi = m.xi();
    const ExprMatrix& q = t.ricci_operator;
    CheckReport rep{"kenmotsu-lemmas", {}};
    rep.add(check_vector(m, "nabla_Q_xi", ones, [&](const FrameVector& x, const FrameVector&) {
        return apply(nabla_operator(m, conn, q, x), xi) + apply(q, x) + scaled(two_n, x);
    }));
    const ExprMatrix nabla_xi_q = nabla_operator(m, conn, q, xi);
    rep.add(check_vector(m, "nabla_xi_Q", ones, [&](const FrameVector& x, const FrameVector&) {
        return apply(nabla_xi_q, x) + scaled(Expr(2), apply(q, x)) + scaled(Expr(2) * two_n, x);
    }));
    rep.add(check_matrix(m, "star_ricci",
                         t.star_ricci - t.ricci - Expr(2 * m.n() - 1) * m.metric() - eta_eta(m)));
    return rep;
}

FitResult least_squares(const std::vector<std::string>& names, const std::vector<std::vector<Expr>>& columns,
                        const std::vector<Expr>& rhs, const Sampler& sampler, double tol) {
    const std::size_t k = names.size();
    if (columns.size() != k) throw std::invalid_argument("least_squares: one column per parameter");
    for (const auto& c : columns)
        if (c.size() != rhs.size()) throw std::invalid_argument("least_squares: column length mismatch");

    bool exact = true;
    for (const auto& e : rhs) exact = exact && !e.has_exp();
    for (const auto& c : columns)
        for (const auto& e : c) exact = exact && !e.has_exp();

    std::vector<std::vector<Rational>> qa;
    std::vector<Rational> qb;
    std::vector<std::vector<double>> da;
    std::vector<double> db;
    for (const auto& p : sampler.points())
        for (std::size_t c = 0; c < rhs.size(); ++c) {
            try {
                if (exact) {
                    std::vector<Rational> row(k);
                    for (std::size_t j = 0; j < k; ++j) row[j] = eval(columns[j][c], p).rational();
                    qb.push_back(eval(rhs[c], p).rational());
                    qa.push_back(std::move(row));
                } else {
                    std::vector<double> row(k);
                    for (std::size_t j = 0; j < k; ++j) row[j] = eval_double(columns[j][c], p);
                    db.push_back(eval_double(rhs[c], p));
                    da.push_back(std::move(row));
                }
            } catch (const DivisionByZero&) {
            }
        }
    const std::size_t rows = exact ? qa.size() : da.size();
    if (rows == 0) throw DegenerateSystem("no sample point evaluates the system");

    FitResult out;
    out.exact_arithmetic = exact;
    out.rows = rows;
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < k; ++j) {
        bool nonzero = false;
        for (std::size_t r = 0; r < rows && !nonzero; ++r) nonzero = exact ? qa[r][j] != 0 : da[r][j] != 0.0;
        out.params.push_back({names[j], nonzero, std::nullopt, 0.0});
        if (nonzero) active.push_back(j);
    }
    const std::size_t a = active.size();

    std::vector<double> x(k, 0.0);
    if (exact) {
        // Normal equations (A^T A) x = A^T b, solved by exact elimination.
        std::vector<std::vector<Rational>> nm(a, std::vector<Rational>(a + 1));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t u = 0; u < a; ++u) {
                const Rational& au = qa[r][active[u]];
                if (au == 0) continue;
                for (std::size_t v = 0; v < a; ++v) nm[u][v] += au * qa[r][active[v]];
                nm[u][a] += au * qb[r];
            }
        for (std::size_t col = 0; col < a; ++col) {
            std::size_t piv = col;
            while (piv < a && nm[piv][col] == 0) ++piv;
            if (piv == a) throw DegenerateSystem("normal equations are singular");
            std::swap(nm[piv], nm[col]);
            for (std::size_t r = 0; r < a; ++r) {
                if (r == col || nm[r][col] == 0) continue;
                const Rational f = nm[r][col] / nm[col][col];
                for (std::size_t c = col; c <= a; ++c) nm[r][c] -= f * nm[col][c];
            }
        }
        for (std::size_t u = 0; u < a; ++u) {
            Rational v = nm[u][a] / nm[u][u];
            v.canonicalize();
            out.params[active[u]].exact = v;
            out.params[active[u]].value = v.get_d();
            x[active[u]] = v.get_d();
        }
        Rational worst = 0;
        Rational scale = 1;
        for (std::size_t r = 0; r < rows; ++r) {
            Rational res = -qb[r];
            for (std::size_t u = 0; u < a; ++u) res += qa[r][active[u]] * *out.params[active[u]].exact;
            worst = std::max(worst, Rational(abs(res)));
            scale = std::max(scale, Rational(abs(qb[r])));
        }
        out.residual = worst.get_d();
        out.scale = scale.get_d();
    } else {
        Eigen::MatrixXd am(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(a));
        Eigen::VectorXd bv(static_cast<Eigen::Index>(rows));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t u = 0; u < a; ++u)
                am(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(u)) = da[r][active[u]];
            bv(static_cast<Eigen::Index>(r)) = db[r];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(am);
        if (a > 0 && qr.rank() < static_cast<Eigen::Index>(a)) throw DegenerateSystem("design matrix is rank deficient");
        const Eigen::VectorXd sol = a > 0 ? Eigen::VectorXd(qr.solve(bv)) : Eigen::VectorXd();
        for (std::size_t u = 0; u < a; ++u) {
            out.params[active[u]].value = sol(static_cast<Eigen::Index>(u));
            x[active[u]] = sol(static_cast<Eigen::Index>(u));
        }
        double worst = 0.0;
        double scale = 1.0;
        for (std::size_t r = 0; r < rows; ++r) {
            double res = -db[r];
            for (std::size_t j = 0; j < k; ++j) res += da[r][j] * x[j];
            worst = std::max(worst, std::abs(res));
            scale = std::max(scale, std::abs(db[r]));
        }
        out.residual = worst;
        out.scale = scale;
    }
    out.exact_fit = out.residual <= tol * out.scale;
    return out;
}

NullityReport solve_nullity(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t) {
    (void)conn;
    const std::size_t n = m.dim();
    NullityReport rep;
    rep.tensors = h_tensors(m, t);
    const ExprMatrix& hp = rep.tensors.h_prime;
    const FrameVector& eta = m.eta();
    std::vector<std::vector<Expr>> cols(2);
    std::vector<Expr> rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const FrameVector r = curvature_apply(t, FrameVector::basis(n, i), FrameVector::basis(n, j), m.xi());
            for (std::size_t l = 0; l < n; ++l) {
                Expr ck = (l == i ? eta[j] : Expr()) - (l == j ? eta[i] : Expr());
                cols[0].push_back(ck);
                cols[1].push_back(eta[j] * hp(l, i) - eta[i] * hp(l, j));
                rhs.push_back(r[l]);
            }
        }
    rep.fit = least_squares({"kappa", "mu"}, cols, rhs, m.sampler(), m.tol());

    const FitParameter& kappa = rep.fit["kappa"];
    if (rep.fit.exact_fit && kappa.constrained && !rep.tensors.spectrum.empty()) {
        bool ok = true;
        for (const auto& s : rep.tensors.spectrum) {
            std::vector<double> ev = s.real;
            // One zero eigenvalue belongs to xi.
            auto z = std::min_element(ev.begin(), ev.end(),
                                      [](double a, double b) { return std::abs(a) < std::abs(b); });
            ev.erase(z);
            for (double alpha : ev) ok = ok && std::abs(alpha * alpha + kappa.value + 1.0) <= 1e-8;
            for (double im : s.imag) ok = ok && std::abs(im) <= 1e-8;
        }
        rep.spectrum_consistent = ok;
    }
    return rep;
}

CheckReport check_nullity_identities(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                                     const StructureTensors& s, const Rational& kappa_q) {
    const std::size_t n = m.dim();
    const Expr kappa(kappa_q);
    const Expr two_n(2 * m.n());
    const auto ps = probes(m);
    const auto ones = singles(ps, n);
    const FrameVector& xi = m.xi();
    const ExprMatrix& hp = s.h_prime;
    const ExprMatrix id = ExprMatrix::identity(n);
    CheckReport rep{"nullity-identities", {}};

    {
        std::vector<std::pair<std::string, Expr>> items;
        const FrameVector a = apply(s.h, xi);
        const FrameVector b = apply(hp, xi);
        for (std::size_t k = 0; k < n; ++k) {
            items.emplace_back("h xi[" + frame_label(k) + "]", a[k]);
            items.emplace_back("h' xi[" + frame_label(k) + "]", b[k]);
        }
        rep.add(check_zero(m, "h_xi", items));
    }
    rep.add(check_matrix(m, "h_phi_anticommute", s.h * m.phi() + m.phi() * s.h));
    rep.add(check_zero(m, "trace_h", {{"tr h", trace(s.h)}, {"tr h'", trace(hp)}}));
    rep.add(check_vector(m, "nabla_xi_almost", ones, [&](const FrameVector& x, const FrameVector&) {
        return covariant_derivative(m, conn, x, xi) - x + scaled(eta_of(m, x), xi) - apply(hp, x);
    }));
    auto nabla_hp = [&](const FrameVector& x, const FrameVector& y) {
        return covariant_derivative(m, conn, x, apply(hp, y)) - apply(hp, covariant_derivative(m, conn, x, y));
    };
    rep.add(check_vector(m, "curvature_xi_expansion", ps, [&](const FrameVector& x, const FrameVector& y) {
        const FrameVector rhs = scaled(eta_of(m, x), y + apply(hp, y)) - scaled(eta_of(m, y), x + apply(hp, x)) +
                                nabla_hp(x, y) - nabla_hp(y, x);
        return curvature_apply(t, x, y, xi) - rhs;
    }));
    rep.add(check_vector(m, "nullity", ps, [&](const FrameVector& x, const FrameVector& y) {
        const FrameVector rhs = scaled(kappa, scaled(eta_of(m, y), x) - scaled(eta_of(m, x), y)) -
                                scaled(Expr(2), scaled(eta_of(m, y), apply(hp, x)) - scaled(eta_of(m, x), apply(hp, y)));
        return curvature_apply(t, x, y, xi) - rhs;
    }));
    rep.add(check_matrix(m, "h_prime_squared", hp * hp + (kappa + Expr(1)) * (id - eta_xi(m))));
    rep.add(check_vector(m, "curvature_xi_first", ps, [&](const FrameVector& x, const FrameVector& y) {
        const FrameVector rhs = scaled(kappa, scaled(inner(m, x, y), xi) - scaled(eta_of(m, y), x)) -
                                scaled(Expr(2), scaled(bilinear(lower(m, hp), x, y), xi) - scaled(eta_of(m, y), apply(hp, x)));
        return curvature_apply(t, xi, x, y) - rhs;
    }));
    rep.add(check_matrix(m, "ricci_operator",
                         t.ricci_operator + two_n * id - two_n * (kappa + Expr(1)) * eta_xi(m) + two_n * hp));
    rep.add(check_zero(m, "scalar_curvature", {{"r", t.scalar - two_n * (kappa - two_n)}}));
    rep.add(check_scalar(m, "nabla_eta_almost", ps, [&](const FrameVector& x, const FrameVector& y) {
        return nabla_one_form(m, conn, m.eta(), x, y) - inner(m, x, y) + eta_of(m, x) * eta_of(m, y) -
               bilinear(lower(m, hp), x, y);
    }));
    rep.add(check_matrix(m, "star_ricci", t.star_ricci + (kappa + Expr(2)) * (m.metric() - eta_eta(m))));
    return rep;
}

EtaEinsteinReport solve_eta_einstein(const Manifold& m, const ExprMatrix& ricci) {
    const std::size_t n = m.dim();
    const ExprMatrix ee = eta_eta(m);
    std::vector<std::vector<Expr>> cols(2);
    std::vector<Expr> rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cols[0].push_back(m.metric()(i, j));
            cols[1].push_back(ee(i, j));
            rhs.push_back(ricci(i, j));
        }
    EtaEinsteinReport rep;
    rep.fit = least_squares({"a", "b"}, cols, rhs, m.sampler(), m.tol());
    const FitParameter& b = rep.fit["b"];
    rep.einstein = rep.fit.exact_fit && (!b.constrained || std::abs(b.value) <= m.tol() * rep.fit.scale);
    const Expr two_n(2 * m.n());
    const Expr r = metric_trace(m, ricci);
    rep.a_from_r = Expr(1) + r / two_n;
    rep.b_from_r = -(Expr(2 * m.n() + 1) + r / two_n);
    return rep;
}

EtaEinsteinReport solve_eta_einstein(const Manifold& m, const CurvatureTable& t) {
    return solve_eta_einstein(m, t.ricci);
}

ContactReport check_contact_field(const Manifold& m, const FrameVector& v) {
    const std::size_t n = m.dim();
    const FrameVector& xi = m.xi();
    ContactReport rep;
    const FrameVector vx = frame_bracket(m, v, xi);
    rep.f = eta_of(m, vx);
    {
        const FrameVector rem = vx - scaled(rep.f, xi);
        std::vector<std::pair<std::string, Expr>> items;
        for (std::size_t k = 0; k < n; ++k) items.emplace_back("[V,xi][" + frame_label(k) + "]", rem[k]);
        rep.contact = check_zero(m, "contact", items);
    }
    // (L_V eta)(e_i) = V(eta_i) - eta([V, e_i])
    FrameVector lv(n);
    for (std::size_t i = 0; i < n; ++i)
        lv[i] = derivative(m, v, m.eta()[i]) - eta_of(m, frame_bracket(m, v, FrameVector::basis(n, i)));
    Expr sigma;
    for (std::size_t i = 0; i < n; ++i)
        if (!lv[i].is_zero() && !xi[i].is_zero()) sigma += lv[i] * xi[i];
    rep.sigma = sigma;
    std::vector<std::pair<std::string, Expr>> prop;
    std::vector<std::pair<std::string, Expr>> strict;
    for (std::size_t i = 0; i < n; ++i) {
        prop.emplace_back("L_V eta(" + frame_label(i) + ")", lv[i] - sigma * m.eta()[i]);
        strict.emplace_back("L_V eta(" + frame_label(i) + ")", lv[i]);
    }
    rep.infinitesimal = check_zero(m, "infinitesimal_contact", prop);
    rep.strict = check_zero(m, "strict", strict);
    return rep;
}

}  // namespace acm
