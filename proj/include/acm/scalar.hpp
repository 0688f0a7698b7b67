#pragma once

// Closed-form scalar fields over a coordinate chart.
//
// Expressions are built from rational constants, coordinate symbols, + - * /,
// integer powers and exp(). Every constructor returns the canonical form:
// sums are flattened and sorted with rational coefficients combined, products
// are flattened with exponents merged, all exp factors of a product are merged
// into one exp of the summed argument, and positive integer powers of sums are
// expanded. Two structurally different canonical forms may still denote the
// same function (e.g. x/(x+y) + y/(x+y)); see sampling.hpp for zero testing.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acm {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {
struct Node;
}

/// A point of the chart; coordinates are exact rationals.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords);

    std::size_t dimension() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    double approx(std::size_t i) const { return approx_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

private:
    std::vector<Rational> coords_;
    std::vector<double> approx_;
};

/// Result of evaluating an expression: exact when no exp() was involved.
class Number {
public:
    static Number exact(Rational q);
    static Number approx(double d);

    bool is_exact() const { return exact_; }
    const Rational& rational() const { return q_; }
    double value() const { return d_; }

private:
    bool exact_ = true;
    Rational q_;
    double d_ = 0.0;
};

class Expr {
public:
    Expr();
    Expr(int v);  // NOLINT(google-explicit-constructor)
    Expr(long v);  // NOLINT(google-explicit-constructor)
    Expr(const Rational& q);  // NOLINT(google-explicit-constructor)

    static Expr symbol(int index);
    static Expr exp(const Expr& arg);
    static Expr rational(long num, long den);

    bool is_zero() const;
    bool is_one() const;
    bool is_constant() const;
    /// Value of a constant expression; throws std::logic_error otherwise.
    const Rational& constant() const;
    bool has_exp() const;
    std::size_t hash() const;

    /// Total order on canonical forms (deterministic across runs).
    int compare(const Expr& other) const;
    friend bool operator==(const Expr& a, const Expr& b) { return a.compare(b) == 0; }
    friend bool operator<(const Expr& a, const Expr& b) { return a.compare(b) < 0; }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    Expr& operator+=(const Expr& b) { return *this = *this + b; }
    Expr& operator-=(const Expr& b) { return *this = *this - b; }
    Expr& operator*=(const Expr& b) { return *this = *this * b; }

    /// Renders in the manifest expression grammar; parse(to_string(e)) == e.
    std::string to_string(std::span<const std::string> names = {}) const;

    const detail::Node& node() const { return *node_; }
    explicit Expr(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const detail::Node> node_;
};

Expr pow(const Expr& base, long exponent);
Expr exp(const Expr& arg);

/// Exact partial derivative with respect to coordinate `index`.
Expr partial(const Expr& e, int index);

/// Rebuilds `e` bottom-up through the canonicalising constructors.
Expr simplify(const Expr& e);

/// Largest coordinate index referenced, or -1 for constants.
int max_symbol(const Expr& e);

/// Exact when `e` has no exp node, double precision otherwise.
/// Throws DivisionByZero when a denominator vanishes at `pt`.
Number eval(const Expr& e, const Point& pt);
double eval_double(const Expr& e, const Point& pt);

std::ostream& operator<<(std::ostream& os, const Expr& e);

}  // namespace acm
