#include "acm/soliton.hpp"

#include <charconv>
#include <cmath>

namespace acm {

FrameVector SolitonProblem::potential(const Manifold& m) const {
    if (vector.has_value() == function.has_value())
        throw MissingPotential("exactly one of a vector or a function potential is required");
    if (vector) {
        if (vector->size() != m.dim()) throw std::invalid_argument("potential has the wrong number of components");
        return to_frame(m, *vector);
    }
    return gradient_frame(m, *function);
}

ExprMatrix soliton_residual(const Manifold& m, const CurvatureTable& t, const FrameVector& v, const Expr& lambda_tilde,
                            const Expr& mu) {
    const Expr two(2);
    return lie_derivative_metric(m, v) + two * t.star_ricci + (two * lambda_tilde) * m.metric() +
           (two * mu) * eta_eta(m);
}

ExprMatrix gradient_soliton_residual(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                                     const Expr& f, const Expr& lambda_tilde, const Expr& mu) {
    return hessian(m, conn, f) + t.star_ricci + lambda_tilde * m.metric() + mu * eta_eta(m);
}

SolitonReport solve_soliton(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                            const SolitonProblem& problem) {
    const std::size_t n = m.dim();
    SolitonReport rep;
    rep.n = m.n();
    rep.gradient_form = problem.function.has_value() && !problem.vector.has_value();
    const Expr scale(rep.gradient_form ? 1 : 2);
    const ExprMatrix base = rep.gradient_form ? gradient_soliton_residual(m, conn, t, *problem.function, 0, 0)
                                              : soliton_residual(m, t, problem.potential(m), 0, 0);
    const ExprMatrix ee = eta_eta(m);
    std::vector<std::vector<Expr>> cols(2);
    std::vector<Expr> rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cols[0].push_back(scale * m.metric()(i, j));
            cols[1].push_back(scale * ee(i, j));
            rhs.push_back(-base(i, j));
        }
    rep.fit = least_squares({"lambda_tilde", "mu"}, cols, rhs, m.sampler(), m.tol());
    if (!rep.fit["lambda_tilde"].constrained)
        throw DegenerateSystem("the metric column of the soliton system vanishes at every sample");

    auto constant = [](const FitParameter& p) { return p.exact ? Expr(*p.exact) : Expr(Rational(p.value)); };
    const Expr lt = constant(rep.fit["lambda_tilde"]);
    const Expr mu = constant(rep.fit["mu"]);
    rep.residual = base + (scale * lt) * m.metric() + (scale * mu) * ee;
    const FitParameter& l = rep.fit["lambda_tilde"];
    rep.lambda = l.exact ? render_lambda(*l.exact, rep.n) : render_lambda(l.value, rep.n);
    return rep;
}

std::string render_lambda(const Rational& lambda_tilde, long n) {
    Rational c = lambda_tilde + Rational(1, 2 * n + 1);
    c.canonicalize();
    if (c == 0) return "p/2";
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    return std::string("p/2 ") + (neg ? "- " : "+ ") + mag.get_str();
}

std::string render_lambda(double lambda_tilde, long n) {
    const double c = lambda_tilde + 1.0 / static_cast<double>(2 * n + 1);
    if (c == 0.0) return "p/2";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, std::abs(c));
    return std::string("p/2 ") + (c < 0 ? "- " : "+ ") + std::string(buf, res.ptr);
}

std::string to_string(SolitonKind k) {
    switch (k) {
        case SolitonKind::Shrinking: return "shrinking";
        case SolitonKind::Steady: return "steady";
        case SolitonKind::Expanding: return "expanding";
    }
    return "unknown";
}

Rational pressure_threshold(const Rational& lambda_tilde, long n) {
    Rational t = -2 * lambda_tilde - Rational(2, 2 * n + 1);
    t.canonicalize();
    return t;
}

SolitonKind classify(const Rational& lambda_tilde, long n, const Rational& p) {
    Rational lambda = lambda_tilde + p / 2 + Rational(1, 2 * n + 1);
    lambda.canonicalize();
    if (lambda < 0) return SolitonKind::Shrinking;
    if (lambda == 0) return SolitonKind::Steady;
    return SolitonKind::Expanding;
}

std::string classify_text(const Rational& lambda_tilde, long n) {
    const std::string t = pressure_threshold(lambda_tilde, n).get_str();
    return "shrinking if p < " + t + ", steady if p = " + t + ", expanding if p > " + t;
}

CheckReport check_theorem_instances(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                                    const SolitonProblem& problem, const Rational& lambda_tilde, const Rational& mu) {
    CheckReport rep{"theorems", {}};
    const Expr sum(Rational(lambda_tilde + mu));

    const CheckReport ken = check_kenmotsu(m, conn, t);
    if (ken.find("kenmotsu")->passed()) {
        const ContactReport c = check_contact_field(m, problem.potential(m));
        CheckResult hyp = c.contact;
        hyp.name = "hypothesis_contact";
        hyp.informational = true;
        hyp.note = hyp.passed() ? "V is contact" : "V is not contact; the Kenmotsu theorem does not apply";
        rep.add(hyp);
        if (hyp.passed()) {
            rep.add(check_zero(m, "lambda_plus_mu", {{"lambda~ + mu", sum}}));
            CheckResult strict = c.strict;
            strict.name = "strict_contact";
            rep.add(strict);
            rep.add(check_matrix(m, "einstein",
                                 t.ricci_operator + Expr(2 * m.n()) * ExprMatrix::identity(m.dim())));
        }
    }

    const NullityReport nr = solve_nullity(m, conn, t);
    const FitParameter& kappa = nr.fit["kappa"];
    const FitParameter& nmu = nr.fit["mu"];
    if (nr.fit.exact_fit && kappa.constrained && kappa.value < -1.0 && nmu.constrained &&
        std::abs(nmu.value + 2.0) <= m.tol()) {
        CheckResult hyp = check_zero(m, "hypothesis_pressure", {{"lambda~ + mu", sum}});
        hyp.informational = true;
        hyp.note = hyp.passed() ? "lambda~ + mu = 0: p = 2 lambda + 2 mu - 2/(2n+1), the theorem does not apply"
                                : "lambda~ + mu != 0: hypothesis holds";
        rep.add(hyp);
        rep.add(check_matrix(m, "star_ricci_flat", t.star_ricci));
        const Expr k = kappa.exact ? Expr(*kappa.exact) : Expr(Rational(kappa.value));
        rep.add(check_zero(m, "kappa_minus_2", {{"kappa + 2", k + Expr(2)}}));
    }
    return rep;
}

}  // namespace acm
