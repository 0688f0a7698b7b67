#include "acm/manifest.hpp"

#include "acm/parse.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace acm {

using nlohmann::json;

ManifestError::ManifestError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                              : what),
      line_(line),
      column_(column) {}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Rational parse_rational(const std::string& text) {
    const Expr e = parse_expr(text, {});
    if (!e.is_constant()) throw ParseError("expected a rational constant", 1);
    return e.constant();
}

namespace {

std::string literal(const json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw ManifestError(path + ": expected an expression string or a number");
}

Expr expression(const json& v, const std::string& path, const std::vector<std::string>& coords) {
    const std::string text = literal(v, path);
    try {
        return parse_expr(text, coords);
    } catch (const ParseError& e) {
        throw ManifestError(path + ": " + e.what() + " in \"" + text + "\"");
    }
}

Rational constant(const json& v, const std::string& path) {
    const Expr e = expression(v, path, {});
    if (!e.is_constant()) throw ManifestError(path + ": expected a rational constant");
    return e.constant();
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ManifestError(std::string("missing field \"") + key + "\"");
    return *it;
}

ExprMatrix matrix(const json& v, const std::string& path, std::size_t n, const std::vector<std::string>& coords) {
    if (!v.is_array() || v.size() != n) throw ManifestError(path + ": expected " + std::to_string(n) + " rows");
    ExprMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != n)
            throw ManifestError(row + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = expression(v[i][j], row + "[" + std::to_string(j) + "]", coords);
    }
    return m;
}

std::vector<Expr> components(const json& v, const std::string& path, std::size_t n,
                             const std::vector<std::string>& coords) {
    if (!v.is_array() || v.size() != n) throw ManifestError(path + ": expected " + std::to_string(n) + " components");
    std::vector<Expr> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(expression(v[i], path + "[" + std::to_string(i) + "]", coords));
    return out;
}

std::size_t coordinate_index(const std::vector<std::string>& coords, const std::string& name, const std::string& path) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == name) return i;
    throw ManifestError(path + ": unknown coordinate \"" + name + "\"");
}

}  // namespace

static Manifest parse_document(const std::string& text);

Manifest parse_manifest(const std::string& text) {
    try {
        return parse_document(text);
    } catch (const json::exception& e) {
        throw ManifestError(std::string("invalid manifest: ") + e.what());
    }
}

static Manifest parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ManifestError("malformed JSON", line, col);
    }
    if (!doc.is_object()) throw ManifestError("manifest must be a JSON object");

    Manifest out;
    out.hash = fnv1a_hex(text);
    ManifoldSpec& s = out.spec;
    s.name = doc.value("name", std::string("manifold"));

    const json& cj = field(doc, "coordinates");
    if (!cj.is_array() || cj.empty()) throw ManifestError("coordinates: expected a non-empty array of names");
    for (const auto& c : cj) {
        if (!c.is_string()) throw ManifestError("coordinates: names must be strings");
        s.coordinates.push_back(c.get<std::string>());
    }
    const auto& coords = s.coordinates;
    const std::size_t n = coords.size();

    s.frame = matrix(field(doc, "frame"), "frame", n, coords);
    s.metric = matrix(field(doc, "metric_frame"), "metric_frame", n, coords);
    s.phi = matrix(field(doc, "phi_frame"), "phi_frame", n, coords);

    const json& xj = field(doc, "xi");
    if (xj.is_number_integer()) {
        const auto k = xj.get<long long>();
        if (k < 0 || static_cast<std::size_t>(k) >= n) throw ManifestError("xi: frame index out of range");
        s.xi = FrameVector::basis(n, static_cast<std::size_t>(k));
    } else {
        const VectorField v(components(xj, "xi", n, coords));
        ExprMatrix inv;
        try {
            inv = inverse(s.frame);
        } catch (const SingularMatrix&) {
            throw SingularFrame("frame vectors are linearly dependent");
        }
        s.xi = FrameVector(n);
        for (std::size_t k = 0; k < n; ++k) {
            Expr acc;
            for (std::size_t a = 0; a < n; ++a) acc += v[a] * inv(a, k);
            s.xi[k] = acc;
        }
    }

    s.domain.box.assign(n, Interval{Rational(-2), Rational(2)});
    if (auto it = doc.find("domain"); it != doc.end()) {
        if (!it->is_array()) throw ManifestError("domain: expected an array of constraints");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& c = (*it)[i];
            const std::string path = "domain[" + std::to_string(i) + "]";
            if (c.contains("coordinate")) {
                const std::size_t k = coordinate_index(coords, c["coordinate"].get<std::string>(), path);
                const json& iv = field(c, "interval");
                if (!iv.is_array() || iv.size() != 2) throw ManifestError(path + ": interval needs two bounds");
                Interval b{constant(iv[0], path + ".interval[0]"), constant(iv[1], path + ".interval[1]")};
                if (!(b.lo < b.hi)) throw ManifestError(path + ": empty interval");
                s.domain.box[k] = b;
            } else if (c.contains("nonvanishing")) {
                s.domain.nonvanishing.push_back(expression(c["nonvanishing"], path + ".nonvanishing", coords));
            } else {
                throw ManifestError(path + ": expected \"coordinate\" or \"nonvanishing\"");
            }
        }
    }

    if (auto it = doc.find("potential"); it != doc.end()) {
        SolitonProblem p;
        if (it->contains("vector")) p.vector = VectorField(components((*it)["vector"], "potential.vector", n, coords));
        if (it->contains("function")) p.function = expression((*it)["function"], "potential.function", coords);
        if (p.vector.has_value() == p.function.has_value())
            throw ManifestError("potential: give exactly one of \"vector\" or \"function\"");
        out.potential = std::move(p);
    }
    if (auto it = doc.find("constants"); it != doc.end()) {
        out.constants = SolitonConstants{constant(field(*it, "lambda_tilde"), "constants.lambda_tilde"),
                                         constant(field(*it, "mu"), "constants.mu")};
    }
    if (auto it = doc.find("seed"); it != doc.end()) s.sampling.seed = it->get<std::uint64_t>();
    if (auto it = doc.find("samples"); it != doc.end()) s.sampling.count = it->get<std::size_t>();
    if (auto it = doc.find("tol"); it != doc.end()) s.tol = it->get<double>();
    return out;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_manifest(os.str());
}

}  // namespace acm
