#pragma once

// Seeded sampling of chart points and randomized zero testing.

#include "acm/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acm {

struct Interval {
    Rational lo;
    Rational hi;
};

/// Coordinate box plus expressions that must stay away from zero.
struct Domain {
    std::vector<Interval> box;          // one per coordinate, open intervals
    std::vector<Expr> nonvanishing;     // |e(p)| >= margin at every sample
    double margin = 1e-3;

    static Domain cube(std::size_t dimension, const Rational& lo, const Rational& hi);
    std::size_t dimension() const { return box.size(); }
    bool admits(const Point& p) const;
};

struct SamplingOptions {
    std::uint64_t seed = 20240611;
    std::size_t count = 50;
};

/// Deterministic quasi-random points: a Halton sequence with a seeded
/// Cranley-Patterson shift, snapped to dyadic rationals (denominator 2^20),
/// keeping only points the domain admits.
class Sampler {
public:
    Sampler(Domain domain, SamplingOptions opts = {});

    const std::vector<Point>& points() const { return points_; }
    const Domain& domain() const { return domain_; }
    const SamplingOptions& options() const { return opts_; }

private:
    Domain domain_;
    SamplingOptions opts_;
    std::vector<Point> points_;
};

enum class Verdict { ProvedZero, NumericallyZero, NonZero };

std::string to_string(Verdict v);

struct ZeroTest {
    Verdict verdict = Verdict::ProvedZero;
    double max_abs = 0.0;          // over all points that evaluated
    std::optional<Point> witness;  // first point with |value| >= tol
    double witness_value = 0.0;
    std::size_t evaluated = 0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// ProvedZero when the canonical form is the literal 0; otherwise evaluates at
/// every sample point (skipping points where a denominator vanishes).
ZeroTest is_zero(const Expr& e, const Sampler& sampler, double tol = kDefaultTolerance);

/// Verdict of an exact or floating value against an absolute tolerance.
bool numerically_zero(const Number& n, double tol);

}  // namespace acm
