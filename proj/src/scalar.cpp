#include "acm/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

namespace acm {

namespace detail {

enum class Kind : unsigned char { Constant = 0, Symbol = 1, Exp = 2, Mul = 3, Add = 4 };

// Canonical-form invariants:
//   Exp: argument is not the constant 0.
//   Mul: >= 1 factor, sorted by base, no zero exponents; bases are Symbol
//        (any exponent), Exp (exponent 1, at most one) or a normalised Add
//        (negative exponent only). A single factor never has exponent 1.
//   Add: >= 1 term, sorted by key, nonzero coefficients; keys are Symbol, Exp
//        or Mul. Never a lone term with coefficient 1 and zero constant.
struct Node {
    Kind kind = Kind::Constant;
    bool has_exp = false;
    std::size_t hash = 0;
    int max_symbol = -1;
    Rational value;  // Constant value, or the constant term of an Add
    int symbol = -1;
    Expr arg{std::shared_ptr<const Node>()};  // Exp only; null otherwise
    std::vector<std::pair<Expr, long>> factors;    // Mul
    std::vector<std::pair<Expr, Rational>> terms;  // Add
};

}  // namespace detail

using detail::Kind;
using detail::Node;

namespace {

using Factors = std::vector<std::pair<Expr, long>>;
using Terms = std::vector<std::pair<Expr, Rational>>;

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational& q) {
    std::size_t h = static_cast<std::size_t>(mpz_get_ui(q.get_num_mpz_t()));
    h = mix(h, static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1));
    return mix(h, static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t())));
}

int cmp_rational(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Expr make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr make_constant(const Rational& q) {
    Node n;
    n.kind = Kind::Constant;
    n.value = q;
    n.hash = mix(0x51ed270b27ULL, hash_rational(q));
    return make(std::move(n));
}

const Expr& zero() {
    static const Expr z = make_constant(Rational(0));
    return z;
}

const Expr& one() {
    static const Expr o = make_constant(Rational(1));
    return o;
}

Expr make_exp_node(const Expr& arg) {
    Node n;
    n.kind = Kind::Exp;
    n.arg = arg;
    n.has_exp = true;
    n.max_symbol = arg.node().max_symbol;
    n.hash = mix(0xe4b0c3ULL, arg.hash());
    return make(std::move(n));
}

Expr make_mul_node(Factors f) {
    Node n;
    n.kind = Kind::Mul;
    std::size_t h = 0x3a1cULL;
    for (const auto& [b, e] : f) {
        h = mix(mix(h, b.hash()), static_cast<std::size_t>(e));
        n.has_exp = n.has_exp || b.has_exp();
        n.max_symbol = std::max(n.max_symbol, b.node().max_symbol);
    }
    n.hash = h;
    n.factors = std::move(f);
    return make(std::move(n));
}

Expr make_add_node(const Rational& c0, Terms t) {
    Node n;
    n.kind = Kind::Add;
    n.value = c0;
    std::size_t h = mix(0xadd0ULL, hash_rational(c0));
    for (const auto& [k, c] : t) {
        h = mix(mix(h, k.hash()), hash_rational(c));
        n.has_exp = n.has_exp || k.has_exp();
        n.max_symbol = std::max(n.max_symbol, k.node().max_symbol);
    }
    n.hash = h;
    n.terms = std::move(t);
    return make(std::move(n));
}

// Linear-combination view of any expression: c0 + sum c_k * key_k.
void accumulate(const Expr& e, const Rational& scale, Rational& c0, Terms& out) {
    const Node& n = e.node();
    switch (n.kind) {
        case Kind::Constant:
            c0 += scale * n.value;
            break;
        case Kind::Add:
            c0 += scale * n.value;
            for (const auto& [k, c] : n.terms) out.emplace_back(k, scale * c);
            break;
        default:
            out.emplace_back(e, scale);
    }
}

Expr build_sum(Rational c0, Terms t) {
    std::stable_sort(t.begin(), t.end(),
                     [](const auto& a, const auto& b) { return a.first.compare(b.first) < 0; });
    Terms merged;
    merged.reserve(t.size());
    for (auto& [k, c] : t) {
        if (!merged.empty() && merged.back().first == k) {
            merged.back().second += c;
        } else {
            merged.emplace_back(std::move(k), std::move(c));
        }
    }
    std::erase_if(merged, [](const auto& kc) { return sgn(kc.second) == 0; });
    if (merged.empty()) return make_constant(c0);
    if (sgn(c0) == 0 && merged.size() == 1 && merged[0].second == 1) return merged[0].first;
    return make_add_node(c0, std::move(merged));
}

Expr scale(const Expr& e, const Rational& q) {
    if (sgn(q) == 0) return zero();
    if (q == 1) return e;
    Rational c0;
    Terms t;
    accumulate(e, q, c0, t);
    return build_sum(std::move(c0), std::move(t));
}

Expr add(const Expr& a, const Expr& b, const Rational& sb) {
    Rational c0;
    Terms t;
    accumulate(a, Rational(1), c0, t);
    accumulate(b, sb, c0, t);
    return build_sum(std::move(c0), std::move(t));
}

bool is_real_sum(const Node& n) {
    return n.kind == Kind::Add && (sgn(n.value) != 0 || n.terms.size() > 1);
}

// Product view: coeff * prod base^exp. Real sums become a single factor after
// normalising their leading coefficient to 1.
void factorize(const Expr& e, long power, Rational& coeff, Factors& out);

Rational rational_pow(const Rational& q, long k) {
    Rational r(1);
    Rational b = q;
    long n = k < 0 ? -k : k;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    if (k < 0) {
        if (sgn(r) == 0) throw DivisionByZero("zero raised to a negative power");
        r = 1 / r;
    }
    return r;
}

void factorize(const Expr& e, long power, Rational& coeff, Factors& out) {
    const Node& n = e.node();
    switch (n.kind) {
        case Kind::Constant:
            coeff *= rational_pow(n.value, power);
            break;
        case Kind::Symbol:
        case Kind::Exp:
            out.emplace_back(e, power);
            break;
        case Kind::Mul:
            for (const auto& [b, k] : n.factors) out.emplace_back(b, k * power);
            break;
        case Kind::Add:
            if (!is_real_sum(n)) {
                coeff *= rational_pow(n.terms[0].second, power);
                factorize(n.terms[0].first, power, coeff, out);
            } else {
                const Rational lead = n.terms[0].second;
                coeff *= rational_pow(lead, power);
                out.emplace_back(scale(e, 1 / lead), power);
            }
            break;
    }
}

Expr multiply(const Expr& a, const Expr& b);

Expr distribute(const Expr& x, const Expr& sum) {
    Rational xc;
    Terms xt;
    accumulate(x, Rational(1), xc, xt);
    Rational sc;
    Terms st;
    accumulate(sum, Rational(1), sc, st);

    Rational c0 = xc * sc;
    Terms out;
    for (const auto& [k, c] : st) out.emplace_back(k, xc * c);
    for (const auto& [k, c] : xt) out.emplace_back(k, sc * c);
    Expr result = build_sum(std::move(c0), std::move(out));
    for (const auto& [kx, cx] : xt) {
        for (const auto& [ks, cs] : st) {
            result = add(result, multiply(kx, ks), cx * cs);
        }
    }
    return result;
}

Expr build_product(Rational coeff, Factors f) {
    if (sgn(coeff) == 0) return zero();
    // merge exp factors into one argument
    Expr exp_arg = zero();
    Factors rest;
    rest.reserve(f.size());
    for (auto& [b, k] : f) {
        if (k == 0) continue;
        if (b.node().kind == Kind::Exp) {
            exp_arg = add(exp_arg, b.node().arg, Rational(k));
        } else {
            rest.emplace_back(std::move(b), k);
        }
    }
    std::stable_sort(rest.begin(), rest.end(),
                     [](const auto& x, const auto& y) { return x.first.compare(y.first) < 0; });
    Factors merged;
    for (auto& [b, k] : rest) {
        if (!merged.empty() && merged.back().first == b) {
            merged.back().second += k;
        } else {
            merged.emplace_back(std::move(b), k);
        }
    }
    std::erase_if(merged, [](const auto& bk) { return bk.second == 0; });

    Factors mono;
    Factors expand;
    for (auto& bk : merged) {
        if (bk.first.node().kind == Kind::Add && bk.second > 0) {
            expand.push_back(std::move(bk));
        } else {
            mono.push_back(std::move(bk));
        }
    }
    if (!exp_arg.is_zero()) mono.emplace_back(make_exp_node(exp_arg), 1);
    std::stable_sort(mono.begin(), mono.end(),
                     [](const auto& x, const auto& y) { return x.first.compare(y.first) < 0; });

    Expr m = one();
    if (mono.size() == 1 && mono[0].second == 1) {
        m = mono[0].first;
    } else if (!mono.empty()) {
        m = make_mul_node(std::move(mono));
    }
    for (const auto& [b, k] : expand) {
        for (long i = 0; i < k; ++i) m = distribute(m, b);
    }
    return scale(m, coeff);
}

Expr multiply(const Expr& a, const Expr& b) {
    const Node& na = a.node();
    const Node& nb = b.node();
    if (na.kind == Kind::Constant) return scale(b, na.value);
    if (nb.kind == Kind::Constant) return scale(a, nb.value);
    Rational coeff(1);
    Factors f;
    factorize(a, 1, coeff, f);
    factorize(b, 1, coeff, f);
    return build_product(std::move(coeff), std::move(f));
}

int compare_nodes(const Node& a, const Node& b);

int compare_expr(const Expr& a, const Expr& b) {
    if (&a.node() == &b.node()) return 0;
    return compare_nodes(a.node(), b.node());
}

int compare_nodes(const Node& a, const Node& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
        case Kind::Constant:
            return cmp_rational(a.value, b.value);
        case Kind::Symbol:
            return a.symbol < b.symbol ? -1 : (a.symbol > b.symbol ? 1 : 0);
        case Kind::Exp:
            return compare_expr(a.arg, b.arg);
        case Kind::Mul: {
            const std::size_t n = std::min(a.factors.size(), b.factors.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (int c = compare_expr(a.factors[i].first, b.factors[i].first)) return c;
                if (a.factors[i].second != b.factors[i].second)
                    return a.factors[i].second < b.factors[i].second ? -1 : 1;
            }
            if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size() ? -1 : 1;
            return 0;
        }
        case Kind::Add: {
            const std::size_t n = std::min(a.terms.size(), b.terms.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (int c = compare_expr(a.terms[i].first, b.terms[i].first)) return c;
                if (int c = cmp_rational(a.terms[i].second, b.terms[i].second)) return c;
            }
            if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
            return cmp_rational(a.value, b.value);
        }
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
    approx_.reserve(coords_.size());
    for (const auto& q : coords_) approx_.push_back(q.get_d());
}

Number Number::exact(Rational q) {
    Number n;
    n.exact_ = true;
    n.d_ = q.get_d();
    n.q_ = std::move(q);
    return n;
}

Number Number::approx(double d) {
    Number n;
    n.exact_ = false;
    n.d_ = d;
    return n;
}

Expr::Expr() : Expr(zero()) {}
Expr::Expr(int v) : Expr(Rational(v)) {}
Expr::Expr(long v) : Expr(Rational(v)) {}
Expr::Expr(const Rational& q) : node_(make_constant(q).node_) {}

Expr Expr::symbol(int index) {
    Node n;
    n.kind = Kind::Symbol;
    n.symbol = index;
    n.max_symbol = index;
    n.hash = mix(0x5b1ULL, static_cast<std::size_t>(index));
    return make(std::move(n));
}

Expr Expr::exp(const Expr& arg) {
    if (arg.is_zero()) return one();
    return make_exp_node(arg);
}

Expr Expr::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator in rational literal");
    Rational q(num, den);
    q.canonicalize();
    return Expr(q);
}

bool Expr::is_zero() const { return node_->kind == Kind::Constant && sgn(node_->value) == 0; }
bool Expr::is_one() const { return node_->kind == Kind::Constant && node_->value == 1; }
bool Expr::is_constant() const { return node_->kind == Kind::Constant; }

const Rational& Expr::constant() const {
    if (!is_constant()) throw std::logic_error("expression is not constant");
    return node_->value;
}

bool Expr::has_exp() const { return node_->has_exp; }
std::size_t Expr::hash() const { return node_->hash; }

int Expr::compare(const Expr& other) const {
    if (node_ == other.node_) return 0;
    return compare_expr(*this, other);
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return add(a, b, Rational(1));
}

Expr operator-(const Expr& a, const Expr& b) {
    if (b.is_zero()) return a;
    return add(a, b, Rational(-1));
}

Expr operator-(const Expr& a) { return scale(a, Rational(-1)); }

Expr operator*(const Expr& a, const Expr& b) { return multiply(a, b); }

Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero expression");
    return multiply(a, pow(b, -1));
}

Expr pow(const Expr& base, long exponent) {
    if (exponent == 0) return one();
    if (exponent == 1) return base;
    if (base.is_constant()) return Expr(rational_pow(base.constant(), exponent));
    Rational coeff(1);
    Factors f;
    factorize(base, exponent, coeff, f);
    return build_product(std::move(coeff), std::move(f));
}

Expr exp(const Expr& arg) { return Expr::exp(arg); }

Expr partial(const Expr& e, int index) {
    const Node& n = e.node();
    if (n.max_symbol < index) return zero();
    switch (n.kind) {
        case Kind::Constant:
            return zero();
        case Kind::Symbol:
            return n.symbol == index ? one() : zero();
        case Kind::Exp: {
            Expr d = partial(n.arg, index);
            return d.is_zero() ? zero() : e * d;
        }
        case Kind::Add: {
            Expr acc = zero();
            for (const auto& [k, c] : n.terms) {
                Expr d = partial(k, index);
                if (!d.is_zero()) acc = add(acc, d, c);
            }
            return acc;
        }
        case Kind::Mul: {
            Expr acc = zero();
            for (std::size_t i = 0; i < n.factors.size(); ++i) {
                const auto& [b, k] = n.factors[i];
                Expr d = partial(b, index);
                if (d.is_zero()) continue;
                Factors rest;
                rest.reserve(n.factors.size());
                for (std::size_t j = 0; j < n.factors.size(); ++j) {
                    if (j == i) {
                        if (k != 1) rest.emplace_back(b, k - 1);
                    } else {
                        rest.push_back(n.factors[j]);
                    }
                }
                acc = acc + build_product(Rational(k), std::move(rest)) * d;
            }
            return acc;
        }
    }
    return zero();
}

Expr simplify(const Expr& e) {
    const Node& n = e.node();
    switch (n.kind) {
        case Kind::Constant:
            return Expr(n.value);
        case Kind::Symbol:
            return Expr::symbol(n.symbol);
        case Kind::Exp:
            return Expr::exp(simplify(n.arg));
        case Kind::Mul: {
            Expr acc = one();
            for (const auto& [b, k] : n.factors) acc = acc * pow(simplify(b), k);
            return acc;
        }
        case Kind::Add: {
            Expr acc(n.value);
            for (const auto& [k, c] : n.terms) acc = acc + Expr(c) * simplify(k);
            return acc;
        }
    }
    return e;
}

int max_symbol(const Expr& e) { return e.node().max_symbol; }

namespace {

Rational eval_rational(const Node& n, const Point& pt) {
    switch (n.kind) {
        case Kind::Constant:
            return n.value;
        case Kind::Symbol:
            return pt[static_cast<std::size_t>(n.symbol)];
        case Kind::Exp:
            throw std::logic_error("exact evaluation of exp()");
        case Kind::Add: {
            Rational acc = n.value;
            for (const auto& [k, c] : n.terms) acc += c * eval_rational(k.node(), pt);
            return acc;
        }
        case Kind::Mul: {
            Rational acc(1);
            for (const auto& [b, k] : n.factors) {
                const Rational v = eval_rational(b.node(), pt);
                if (k < 0 && sgn(v) == 0) throw DivisionByZero("denominator vanishes at the point");
                acc *= rational_pow(v, k);
            }
            return acc;
        }
    }
    return Rational(0);
}

double ipow(double b, long k) {
    if (k < 0) {
        if (b == 0.0) throw DivisionByZero("denominator vanishes at the point");
        return 1.0 / ipow(b, -k);
    }
    double r = 1.0;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

double eval_real(const Node& n, const Point& pt) {
    switch (n.kind) {
        case Kind::Constant:
            return n.value.get_d();
        case Kind::Symbol:
            return pt.approx(static_cast<std::size_t>(n.symbol));
        case Kind::Exp:
            return std::exp(eval_real(n.arg.node(), pt));
        case Kind::Add: {
            if (!n.has_exp) return eval_rational(n, pt).get_d();
            double acc = n.value.get_d();
            for (const auto& [k, c] : n.terms) acc += c.get_d() * eval_real(k.node(), pt);
            return acc;
        }
        case Kind::Mul: {
            double acc = 1.0;
            for (const auto& [b, k] : n.factors) {
                const double v = b.has_exp() ? eval_real(b.node(), pt) : eval_rational(b.node(), pt).get_d();
                acc *= ipow(v, k);
            }
            return acc;
        }
    }
    return 0.0;
}

void check_dimension(const Expr& e, const Point& pt) {
    if (e.node().max_symbol >= static_cast<int>(pt.dimension()))
        throw std::out_of_range("point dimension smaller than the expression's chart");
}

}  // namespace

Number eval(const Expr& e, const Point& pt) {
    check_dimension(e, pt);
    if (!e.has_exp()) return Number::exact(eval_rational(e.node(), pt));
    return Number::approx(eval_real(e.node(), pt));
}

double eval_double(const Expr& e, const Point& pt) {
    check_dimension(e, pt);
    if (!e.has_exp()) return eval_rational(e.node(), pt).get_d();
    return eval_real(e.node(), pt);
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string symbol_name(int i, std::span<const std::string> names) {
    if (i >= 0 && static_cast<std::size_t>(i) < names.size()) return names[static_cast<std::size_t>(i)];
    return "x" + std::to_string(i);
}

std::string render(const Expr& e, std::span<const std::string> names);

std::string render_factor(const Expr& b, long k, std::span<const std::string> names) {
    std::string base = render(b, names);
    if (b.node().kind == Kind::Add) base = "(" + base + ")";
    if (k == 1) return base;
    if (k < 0) return base + "^(" + std::to_string(k) + ")";
    return base + "^" + std::to_string(k);
}

std::string render(const Expr& e, std::span<const std::string> names) {
    const Node& n = e.node();
    switch (n.kind) {
        case Kind::Constant:
            return n.value.get_str();
        case Kind::Symbol:
            return symbol_name(n.symbol, names);
        case Kind::Exp:
            return "exp(" + render(n.arg, names) + ")";
        case Kind::Mul: {
            std::string s;
            for (const auto& [b, k] : n.factors) {
                if (!s.empty()) s += "*";
                s += render_factor(b, k, names);
            }
            return s;
        }
        case Kind::Add: {
            std::string s;
            auto emit = [&](const Rational& c, const std::string& body) {
                const bool neg = sgn(c) < 0;
                const Rational mag = neg ? Rational(-c) : c;
                std::string piece;
                if (body.empty()) {
                    piece = mag.get_str();
                } else if (mag == 1) {
                    piece = body;
                } else {
                    piece = mag.get_str() + "*" + body;
                }
                if (s.empty()) {
                    s = neg ? "-" + piece : piece;
                } else {
                    s += neg ? " - " : " + ";
                    s += piece;
                }
            };
            for (const auto& [k, c] : n.terms) emit(c, render(k, names));
            if (sgn(n.value) != 0) emit(n.value, "");
            return s;
        }
    }
    return {};
}

}  // namespace

std::string Expr::to_string(std::span<const std::string> names) const { return render(*this, names); }

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << e.to_string(); }

}  // namespace acm
