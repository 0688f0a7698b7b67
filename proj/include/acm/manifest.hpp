#pragma once

// JSON manifests: expression strings over named coordinates.
//
//   {
//     "name": "...",
//     "coordinates": ["x", "y", "z"],
//     "frame": [["1", "0", "0"], ...],        rows = e_i in d/dx components
//     "metric_frame": [[...]],                g(e_i, e_j)
//     "phi_frame": [[...]],                   row j = phi(e_j) in frame components
//     "xi": 2 | ["2*x", "-1", "1"],           frame index or coordinate components
//     "domain": [{"coordinate": "y", "interval": ["-2", "2"]},
//                {"nonvanishing": "y"}],
//     "potential": {"vector": [...]} | {"function": "..."},
//     "constants": {"lambda_tilde": "-4", "mu": "4"},
//     "seed": 1, "samples": 50, "tol": 1e-9
//   }
//
// Coordinates without an interval range over (-2, 2).

#include "acm/geometry.hpp"
#include "acm/soliton.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace acm {

class ManifestError : public std::runtime_error {
public:
    ManifestError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct SolitonConstants {
    Rational lambda_tilde;
    Rational mu;
};

struct Manifest {
    ManifoldSpec spec;
    std::optional<SolitonProblem> potential;
    std::optional<SolitonConstants> constants;
    std::string hash;  // FNV-1a 64 of the raw bytes, hex
};

Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

/// Exact rational from a decimal or fraction literal such as "-4", "0.25", "1/3".
Rational parse_rational(const std::string& text);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace acm
