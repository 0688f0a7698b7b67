#include "acm/parse.hpp"

#include <algorithm>
#include <cctype>

namespace acm {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& coords) : text_(text), coords_(coords) {}

    Expr run() {
        Expr e = sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr sum() {
        Expr acc = product();
        for (;;) {
            if (accept('+')) {
                acc = acc + product();
            } else if (accept('-')) {
                acc = acc - product();
            } else {
                return acc;
            }
        }
    }

    Expr product() {
        Expr acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Expr d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at + 1);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) {
            const std::size_t at = pos_;
            Expr ex = unary();
            if (!ex.is_constant() || ex.constant().get_den() != 1)
                throw ParseError("exponent must be an integer constant", at + 1);
            const Rational& q = ex.constant();
            if (!q.get_num().fits_slong_p()) throw ParseError("exponent out of range", at + 1);
            const long k = q.get_num().get_si();
            if (k < 0 && base.is_zero()) throw ParseError("zero raised to a negative power", at + 1);
            return pow(base, k);
        }
        return base;
    }

    Expr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string id(text_.substr(start, pos_ - start));
            auto it = std::find(coords_.begin(), coords_.end(), id);
            if (it != coords_.end()) return Expr::symbol(static_cast<int>(it - coords_.begin()));
            if (id == "exp") {
                expect('(');
                Expr arg = sum();
                expect(')');
                return exp(arg);
            }
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Expr number() {
        const std::size_t start = pos_;
        std::string digits;
        std::size_t frac = 0;
        bool dot = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
                if (dot) ++frac;
            } else if (c == '.' && !dot) {
                dot = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (digits.empty()) {
            pos_ = start;
            fail("malformed number");
        }
        mpz_class num(digits, 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return Expr(q);
    }

    std::string_view text_;
    const std::vector<std::string>& coords_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const std::vector<std::string>& coordinates) {
    return Parser(text, coordinates).run();
}

}  // namespace acm
