#pragma once

// *-conformal eta-Ricci soliton equation
//   L_V g + 2 S* + [2 lambda - (p + 2/(2n+1))] g + 2 mu eta (x) eta = 0
// solved for lambda~ = lambda - p/2 - 1/(2n+1), which keeps p symbolic.

#include "acm/structure.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace acm {

class MissingPotential : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SolitonProblem {
    std::optional<VectorField> vector;  // potential V in coordinates
    std::optional<Expr> function;       // potential f, V = Df

    /// V in frame components; Df when the potential is a function.
    FrameVector potential(const Manifold& m) const;
};

/// L_V g + 2 S* + 2 lambda~ g + 2 mu eta (x) eta.
ExprMatrix soliton_residual(const Manifold& m, const CurvatureTable& t, const FrameVector& v, const Expr& lambda_tilde,
                            const Expr& mu);
/// Hess f + S* + lambda~ g + mu eta (x) eta.
ExprMatrix gradient_soliton_residual(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                                     const Expr& f, const Expr& lambda_tilde, const Expr& mu);

struct SolitonReport {
    FitResult fit;           // lambda_tilde, mu
    bool gradient_form = false;
    long n = 1;
    ExprMatrix residual;     // evaluated at the solved constants
    std::string lambda;      // "p/2 + c"
};

/// Least-squares (lambda~, mu). A function potential is fitted through the
/// gradient form, a vector potential through the vector form.
SolitonReport solve_soliton(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                            const SolitonProblem& problem);

/// "p/2 + c" with c = lambda~ + 1/(2n+1).
std::string render_lambda(const Rational& lambda_tilde, long n);
std::string render_lambda(double lambda_tilde, long n);

enum class SolitonKind { Shrinking, Steady, Expanding };
std::string to_string(SolitonKind k);

/// The threshold p* = -2 lambda~ - 2/(2n+1) separating the three kinds.
Rational pressure_threshold(const Rational& lambda_tilde, long n);
SolitonKind classify(const Rational& lambda_tilde, long n, const Rational& p);
std::string classify_text(const Rational& lambda_tilde, long n);

/// Hypotheses and conclusions of the soliton theorems on a concrete instance.
/// Kenmotsu with contact V: lambda~ + mu = 0, L_V eta = 0, Q + 2n Id = 0.
/// (kappa,-2)' with kappa < -1: lambda~ + mu != 0 (hypothesis), S* = 0, kappa = -2.
CheckReport check_theorem_instances(const Manifold& m, const ConnectionTable& conn, const CurvatureTable& t,
                                    const SolitonProblem& problem, const Rational& lambda_tilde, const Rational& mu);

}  // namespace acm
