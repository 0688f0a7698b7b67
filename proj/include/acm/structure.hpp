#pragma once

// Structure checks (almost contact, Kenmotsu, almost Kenmotsu, nullity
// identities) and the least-squares fits for (kappa, mu) and eta-Einstein
// constants.

#include "acm/curvature.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acm {

class DegenerateSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::ProvedZero;
    double residual = 0.0;          // max |value| over points and index tuples
    std::optional<Point> witness;
    std::string where;              // label of the first failing entry
    double witness_value = 0.0;
    bool informational = false;     // reported, but never fails a report
    std::string note;

    bool passed() const { return verdict != Verdict::NonZero; }
};

struct CheckReport {
    std::string name;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(std::string_view check) const;
    void add(CheckResult r) { checks.push_back(std::move(r)); }
};

/// A labelled argument pair used by identity checks.
struct Probe {
    std::string label;
    FrameVector x;
    FrameVector y;
};

/// Every ordered frame pair (e_i, e_j), then `randomized` pairs of fields with
/// affine polynomial coefficients drawn from the manifold's sampling seed.
std::vector<Probe> probes(const Manifold& m, std::size_t randomized = 10);

/// Zero-tests each labelled expression and folds the results into one check.
CheckResult check_zero(const Manifold& m, std::string name, const std::vector<std::pair<std::string, Expr>>& items);
CheckResult check_vector(const Manifold& m, std::string name, const std::vector<Probe>& ps,
                         const std::function<FrameVector(const FrameVector&, const FrameVector&)>& f);
CheckResult check_scalar(const Manifold& m, std::string name, const std::vector<Probe>& ps,
                         const std::function<Expr(const FrameVector&, const FrameVector&)>& f);
CheckResult check_matrix(const Manifold& m, std::string name, const ExprMatrix& a);

CheckReport check_almost_contact(const Manifold& m);

/// Kenmotsu condition, its standard consequences, and the almost Kenmotsu
/// conditions d eta = 0, d Phi = 2 eta ^ Phi.
CheckReport check_kenmotsu(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t);

/// d eta = 0 and d Phi = 2 eta ^ Phi only.
CheckReport check_almost_kenmotsu(const Manifold& m);

/// Identities that hold on every Kenmotsu manifold: the two Ricci-operator
/// derivative formulas and S* = S + (2n-1) g + eta (x) eta.
CheckReport check_kenmotsu_lemmas(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t);

struct FitParameter {
    std::string name;
    bool constrained = true;
    std::optional<Rational> exact;  // present when solved in exact arithmetic
    double value = 0.0;
};

struct FitResult {
    std::vector<FitParameter> params;
    double residual = 0.0;       // max |A x - b| over stacked rows
    double scale = 1.0;          // max(1, max |b|)
    bool exact_arithmetic = false;
    bool exact_fit = false;      // residual <= tol * scale
    std::size_t rows = 0;

    const FitParameter& operator[](std::string_view name) const;
};

/// Solves sum_k x_k columns[k][c](p) = rhs[c](p) over all components c and all
/// sample points p in the least-squares sense. Columns that vanish at every
/// sample are reported as unconstrained and dropped.
FitResult least_squares(const std::vector<std::string>& names, const std::vector<std::vector<Expr>>& columns,
                        const std::vector<Expr>& rhs, const Sampler& sampler, double tol);

struct NullityReport {
    FitResult fit;                 // kappa, mu
    StructureTensors tensors;
    std::optional<bool> spectrum_consistent;  // alpha^2 + kappa + 1 = 0 on ker eta
};

/// Fits R(X,Y)xi = kappa (eta(Y)X - eta(X)Y) + mu (eta(Y)h'X - eta(X)h'Y).
NullityReport solve_nullity(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t);

/// Identities of a (kappa,-2)' almost Kenmotsu manifold at the given kappa.
CheckReport check_nullity_identities(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                                     const StructureTensors& s, const Rational& kappa);

struct EtaEinsteinReport {
    FitResult fit;     // a, b
    bool einstein = false;
    Expr a_from_r;        // 1 + r/2n
    Expr b_from_r;        // -(2n + 1 + r/2n)
};

EtaEinsteinReport solve_eta_einstein(const Manifold& m, const CurvatureTable& t);
/// Fits an arbitrary symmetric frame tensor against g and eta (x) eta.
EtaEinsteinReport solve_eta_einstein(const Manifold& m, const ExprMatrix& ricci);

struct ContactReport {
    Expr f;                    // eta([V, xi])
    CheckResult contact;       // [V, xi] - f xi = 0
    Expr sigma;                // (L_V eta)(xi)
    CheckResult infinitesimal; // L_V eta - sigma eta = 0
    CheckResult strict;        // L_V eta = 0
};

ContactReport check_contact_field(const Manifold& m, const FrameVector& v);

}  // namespace acm
