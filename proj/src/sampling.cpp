#include "acm/sampling.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace acm {

namespace {

constexpr std::array<unsigned, 16> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t index, unsigned base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= base;
    }
    return result;
}

// Maps u in [0,1) into the open interval, keeping clear of both ends.
Rational snap(const Interval& iv, double u) {
    constexpr long kDen = 1L << 20;
    const double t = 0.001 + 0.998 * u;
    Rational width = iv.hi - iv.lo;
    Rational r = iv.lo + width * Rational(static_cast<long>(std::floor(t * kDen)), kDen);
    r.canonicalize();
    if (r <= iv.lo || r >= iv.hi) r = (iv.lo + iv.hi) / 2;
    return r;
}

}  // namespace

Domain Domain::cube(std::size_t dimension, const Rational& lo, const Rational& hi) {
    Domain d;
    d.box.assign(dimension, Interval{lo, hi});
    return d;
}

bool Domain::admits(const Point& p) const {
    if (p.dimension() != box.size()) return false;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (p[i] <= box[i].lo || p[i] >= box[i].hi) return false;
    }
    for (const auto& e : nonvanishing) {
        try {
            if (std::abs(eval_double(e, p)) < margin) return false;
        } catch (const DivisionByZero&) {
            return false;
        }
    }
    return true;
}

Sampler::Sampler(Domain domain, SamplingOptions opts) : domain_(std::move(domain)), opts_(opts) {
    const std::size_t dim = domain_.dimension();
    if (dim > kPrimes.size()) throw std::invalid_argument("sampler supports at most 16 coordinates");
    std::mt19937_64 rng(opts_.seed);
    std::vector<double> shift(dim);
    for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;

    const std::size_t max_tries = 200 * std::max<std::size_t>(opts_.count, 1) + 1000;
    for (std::uint64_t k = 1; points_.size() < opts_.count && k <= max_tries; ++k) {
        std::vector<Rational> coords;
        coords.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            double u = radical_inverse(k, kPrimes[i]) + shift[i];
            u -= std::floor(u);
            coords.push_back(snap(domain_.box[i], u));
        }
        Point p(std::move(coords));
        if (domain_.admits(p)) points_.push_back(std::move(p));
    }
    if (points_.size() < opts_.count)
        throw std::runtime_error("domain admits too few sample points (" + std::to_string(points_.size()) + " of " +
                                 std::to_string(opts_.count) + ")");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ProvedZero:
            return "ProvedZero";
        case Verdict::NumericallyZero:
            return "NumericallyZero";
        case Verdict::NonZero:
            return "NonZero";
    }
    return "?";
}

bool numerically_zero(const Number& n, double tol) {
    if (n.is_exact()) return sgn(n.rational()) == 0;
    return std::abs(n.value()) < tol;
}

ZeroTest is_zero(const Expr& e, const Sampler& sampler, double tol) {
    ZeroTest out;
    if (e.is_zero()) return out;
    out.verdict = Verdict::NumericallyZero;
    for (const auto& p : sampler.points()) {
        Number v;
        try {
            v = eval(e, p);
        } catch (const DivisionByZero&) {
            continue;
        }
        ++out.evaluated;
        const double a = std::abs(v.value());
        out.max_abs = std::max(out.max_abs, a);
        if (!numerically_zero(v, tol) && !out.witness) {
            out.verdict = Verdict::NonZero;
            out.witness = p;
            out.witness_value = v.value();
        }
    }
    if (out.evaluated == 0) {
        // singular at every sample: there is no evidence of vanishing
        out.verdict = Verdict::NonZero;
        out.max_abs = std::numeric_limits<double>::infinity();
        out.witness_value = std::numeric_limits<double>::quiet_NaN();
        if (!sampler.points().empty()) out.witness = sampler.points().front();
    }
    return out;
}

}  // namespace acm
