// Seeded randomized identities. Each property runs over kCases generated inputs.

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

using namespace acm;
using namespace acmtest;

namespace {

constexpr int kCases = 100;
constexpr std::uint64_t kSeed = 0x5eed2024;

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random polynomial of low degree in the given symbols.
Expr random_poly(std::mt19937_64& rng, const std::vector<int>& symbols, int terms) {
    Expr out;
    for (int t = 0; t < terms; ++t) {
        Expr mono(uniform(rng, -3, 3));
        for (int s : symbols)
            if (uniform(rng, 0, 2) == 0) mono = mono * pow(Expr::symbol(s), uniform(rng, 1, 2));
        out = out + mono;
    }
    return out;
}

/// Random expression tree over dim symbols, with exp of linear arguments.
Expr random_expr(std::mt19937_64& rng, int dim, int depth) {
    if (depth == 0 || uniform(rng, 0, 3) == 0) {
        if (uniform(rng, 0, 2) == 0) return Expr::rational(uniform(rng, -5, 5), uniform(rng, 1, 4));
        return Expr::symbol(uniform(rng, 0, dim - 1));
    }
    switch (uniform(rng, 0, 4)) {
        case 0:
            return random_expr(rng, dim, depth - 1) + random_expr(rng, dim, depth - 1);
        case 1:
            return random_expr(rng, dim, depth - 1) - random_expr(rng, dim, depth - 1);
        case 2:
            return random_expr(rng, dim, depth - 1) * random_expr(rng, dim, depth - 1);
        case 3:
            return pow(random_expr(rng, dim, depth - 1), uniform(rng, 2, 3));
        default:
            return exp(Expr(uniform(rng, -1, 1)) * Expr::symbol(uniform(rng, 0, dim - 1)) +
                       Expr::rational(uniform(rng, -2, 2), 2));
    }
}

/// Warped almost-contact chart: e_i = exp(c_i w) d_i + p_i d_(i+1), e_last = d_w,
/// g = diag(exp(a_i w), ..., 1), phi pairing (e1,e2), (e3,e4), xi = e_last.
Manifold random_manifold(std::mt19937_64& rng) {
    const std::size_t dim = uniform(rng, 0, 3) == 0 ? 5 : 3;
    const int w = static_cast<int>(dim) - 1;
    ManifoldSpec s;
    s.name = "random";
    for (std::size_t i = 0; i < dim; ++i) s.coordinates.push_back("x" + std::to_string(i));
    s.frame = ExprMatrix(dim, dim);
    s.metric = ExprMatrix(dim, dim);
    s.phi = ExprMatrix(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        s.frame(i, i) = exp(Expr(uniform(rng, -1, 1)) * Expr::symbol(w));
        std::vector<int> others;
        for (int k = 0; k < static_cast<int>(dim); ++k)
            if (k != static_cast<int>(i) + 1) others.push_back(k);
        if (i + 2 < dim) s.frame(i, i + 1) = random_poly(rng, others, 2);
        s.metric(i, i) = exp(Expr(uniform(rng, -2, 2)) * Expr::symbol(w));
    }
    s.frame(dim - 1, dim - 1) = Expr(1);
    s.metric(dim - 1, dim - 1) = Expr(1);
    for (std::size_t i = 0; i + 1 < dim; i += 2) {
        s.phi(i, i + 1) = Expr(1);
        s.phi(i + 1, i) = Expr(-1);
    }
    s.xi = FrameVector::basis(dim, dim - 1);
    s.domain = Domain::cube(dim, -1, 1);
    s.sampling.count = 12;
    return Manifold(s);
}

struct Case {
    Manifold m;
    ConnectionTable conn;
    CurvatureTable t;
    explicit Case(Manifold mm) : m(std::move(mm)), conn(koszul(m)), t(riemann(m, conn)) {}
};

const std::vector<std::unique_ptr<Case>>& cases() {
    static const auto all = [] {
        std::vector<std::unique_ptr<Case>> out;
        std::mt19937_64 rng(kSeed);
        for (int c = 0; c < kCases; ++c) out.push_back(std::make_unique<Case>(random_manifold(rng)));
        return out;
    }();
    return all;
}

bool vanishes(const Manifold& m, const FrameVector& v) { return zero(m, v); }

}  // namespace

TEST(Property, ConnectionTorsionFree) {
    for (const auto& c : cases()) {
        const std::size_t n = c->m.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                ASSERT_TRUE(vanishes(c->m, c->conn.nabla(i, j) - c->conn.nabla(j, i) -
                                               frame_bracket(c->m, e(c->m, i), e(c->m, j))));
    }
}

TEST(Property, ConnectionMetricCompatible) {
    for (const auto& c : cases()) {
        const Manifold& m = c->m;
        const std::size_t n = m.dim();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    const Expr lhs = m.frame_derivative(k, m.metric()(i, j));
                    const Expr rhs = inner(m, c->conn.nabla(k, i), e(m, j)) + inner(m, e(m, i), c->conn.nabla(k, j));
                    ASSERT_TRUE(zero(m, lhs - rhs));
                }
    }
}

TEST(Property, CurvatureAntisymmetricInFirstPair) {
    for (const auto& c : cases()) {
        const std::size_t n = c->m.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) ASSERT_TRUE(vanishes(c->m, c->t.r(i, j, k) + c->t.r(j, i, k)));
    }
}

TEST(Property, FirstBianchi) {
    for (const auto& c : cases()) {
        const std::size_t n = c->m.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    ASSERT_TRUE(vanishes(c->m, c->t.r(i, j, k) + c->t.r(j, k, i) + c->t.r(k, i, j)));
    }
}

TEST(Property, CurvatureAntisymmetricInLastPair) {
    for (const auto& c : cases()) {
        const Manifold& m = c->m;
        const std::size_t n = m.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = k; l < n; ++l)
                        ASSERT_TRUE(zero(m, inner(m, c->t.r(i, j, k), e(m, l)) + inner(m, c->t.r(i, j, l), e(m, k))));
    }
}

TEST(Property, RicciSymmetric) {
    for (const auto& c : cases()) {
        const ExprMatrix& s = c->t.ricci;
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = i + 1; j < s.cols(); ++j) ASSERT_TRUE(zero(c->m, s(i, j) - s(j, i)));
    }
}

TEST(Property, HessianSymmetricAndLieDerivativeOfGradient) {
    std::mt19937_64 rng(kSeed + 1);
    for (const auto& c : cases()) {
        const Manifold& m = c->m;
        std::vector<int> syms;
        for (std::size_t k = 0; k < m.dim(); ++k) syms.push_back(static_cast<int>(k));
        const Expr f = random_poly(rng, syms, 3);
        const ExprMatrix hess = hessian(m, c->conn, f);
        for (std::size_t i = 0; i < hess.rows(); ++i)
            for (std::size_t j = i + 1; j < hess.cols(); ++j) ASSERT_TRUE(zero(m, hess(i, j) - hess(j, i)));
        ASSERT_TRUE(zero(m, lie_derivative_metric(m, gradient_frame(m, f)) - Expr(2) * hess));
    }
}

TEST(Property, JacobiIdentity) {
    std::mt19937_64 rng(kSeed + 2);
    const std::vector<int> syms = {0, 1, 2};
    const auto field = [&] {
        std::vector<Expr> c;
        for (int k = 0; k < 3; ++k) c.push_back(random_poly(rng, syms, 2));
        return VectorField(c);
    };
    for (int c = 0; c < kCases; ++c) {
        const VectorField x = field(), y = field(), z = field();
        const VectorField j = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                              lie_bracket(z, lie_bracket(x, y));
        for (const auto& comp : j) ASSERT_TRUE(comp.is_zero());
    }
}

TEST(Property, PartialMatchesFiniteDifference) {
    std::mt19937_64 rng(kSeed + 3);
    const double h = 1e-5;
    for (int c = 0; c < kCases; ++c) {
        const int dim = 3;
        const Expr f = random_expr(rng, dim, 3);
        const int k = uniform(rng, 0, dim - 1);
        std::vector<double> x(dim);
        for (auto& v : x) v = std::uniform_real_distribution<double>(-1, 1)(rng);
        const auto at = [&](double shift) {
            std::vector<Rational> q;
            for (int i = 0; i < dim; ++i) q.emplace_back(x[i] + (i == k ? shift : 0.0));
            return Point(q);
        };
        const double exact = eval_double(partial(f, k), at(0));
        const double fd = (eval_double(f, at(h)) - eval_double(f, at(-h))) / (2 * h);
        ASSERT_LE(std::abs(fd - exact), 1e-6 * std::max(1.0, std::abs(exact))) << f << " d/dx" << k;
    }
}

TEST(Property, MixedPartialsCommute) {
    std::mt19937_64 rng(kSeed + 4);
    for (int c = 0; c < kCases; ++c) {
        const Expr f = random_expr(rng, 3, 3);
        const int a = uniform(rng, 0, 2), b = uniform(rng, 0, 2);
        ASSERT_EQ(partial(partial(f, a), b), partial(partial(f, b), a)) << f;
    }
}

TEST(Property, SimplifyIdempotent) {
    std::mt19937_64 rng(kSeed + 5);
    for (int c = 0; c < kCases; ++c) {
        const Expr f = random_expr(rng, 3, 4);
        const Expr s = simplify(f);
        ASSERT_EQ(simplify(s), s) << f;
        ASSERT_EQ(s, f) << f;
    }
}

TEST(Property, ParseRoundTrip) {
    std::mt19937_64 rng(kSeed + 6);
    const std::vector<std::string> names = {"x", "y", "z"};
    for (int c = 0; c < kCases; ++c) {
        const Expr f = random_expr(rng, 3, 4);
        const std::string text = f.to_string(names);
        ASSERT_EQ(parse_expr(text, names), f) << text;
    }
}
