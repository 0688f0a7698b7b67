#pragma once

#include "acm/manifest.hpp"
#include "acm/parse.hpp"
#include "acm/soliton.hpp"
#include "acm/structure.hpp"

#include <string>
#include <vector>

#ifndef ACM_FIXTURE_DIR
#error "ACM_FIXTURE_DIR must be defined"
#endif

namespace acmtest {

inline std::string fixture(const std::string& name) { return std::string(ACM_FIXTURE_DIR) + "/" + name + ".json"; }

inline acm::Manifest manifest(const std::string& name) { return acm::load_manifest(fixture(name)); }

inline acm::Manifold manifold(const std::string& name) { return acm::Manifold(manifest(name).spec); }

/// Everything derived from one fixture, built once.
struct Loaded {
    acm::Manifest mf;
    acm::Manifold m;
    acm::ConnectionTable conn;
    acm::CurvatureTable t;

    explicit Loaded(const std::string& name)
        : mf(manifest(name)), m(mf.spec), conn(acm::koszul(m)), t(acm::riemann(m, conn)) {}
};

inline acm::Expr ex(const acm::Manifold& m, const std::string& text) { return acm::parse_expr(text, m.coordinates()); }

inline acm::FrameVector e(const acm::Manifold& m, std::size_t k) { return acm::FrameVector::basis(m.dim(), k); }

inline acm::FrameVector fv(const std::vector<acm::Expr>& c) { return acm::FrameVector(c); }

inline acm::VectorField vf(const acm::Manifold& m, const std::vector<std::string>& c) {
    std::vector<acm::Expr> out;
    for (const auto& s : c) out.push_back(ex(m, s));
    return acm::VectorField(out);
}

inline bool zero(const acm::Manifold& m, const acm::Expr& x) {
    return acm::is_zero(x, m.sampler(), m.tol()).verdict != acm::Verdict::NonZero;
}

inline bool zero(const acm::Manifold& m, const acm::ExprMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!zero(m, a(i, j))) return false;
    return true;
}

template <class Tag>
bool zero(const acm::Manifold& m, const acm::Components<Tag>& v) {
    for (const auto& c : v)
        if (!zero(m, c)) return false;
    return true;
}

inline std::string manifest_text(const std::string& coords, const std::string& frame, const std::string& metric,
                                 const std::string& phi, const std::string& xi, const std::string& extra = "") {
    return "{\"name\": \"t\", \"coordinates\": " + coords + ", \"frame\": " + frame + ", \"metric_frame\": " + metric +
           ", \"phi_frame\": " + phi + ", \"xi\": " + xi + extra + "}";
}

}  // namespace acmtest
