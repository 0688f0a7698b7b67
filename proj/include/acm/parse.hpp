#pragma once

#include "acm/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acm {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " (column " + std::to_string(column) + ")"), column_(column) {}

    /// 1-based column inside the parsed text.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Parses the manifest expression grammar:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' unary)?        exponent must reduce to an integer
///   primary := number | identifier | 'exp' '(' sum ')' | '(' sum ')'
/// Numbers are decimal literals (`2`, `0.25`); they are read exactly.
Expr parse_expr(std::string_view text, const std::vector<std::string>& coordinates);

}  // namespace acm
