// acmtool: check, tables and soliton commands over JSON manifests.
//
// Exit codes: 0 all selected checks pass, 1 checks ran with failures,
// 2 input or validation error.

#include "acm/manifest.hpp"
#include "acm/parse.hpp"
#include "acm/soliton.hpp"
#include "acm/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

using acm::CheckReport;
using acm::CheckResult;
using acm::Expr;
using acm::FrameVector;
using acm::Manifold;
using acm::Rational;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct Global {
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tol = 0.0;
    bool seed_set = false;
    bool samples_set = false;
    bool tol_set = false;
};

struct Loaded {
    acm::Manifest manifest;
    Manifold manifold;
};

Loaded load(const std::string& path, const Global& g) {
    acm::Manifest mf = acm::load_manifest(path);
    if (g.seed_set) mf.spec.sampling.seed = g.seed;
    if (g.samples_set) mf.spec.sampling.count = g.samples;
    if (g.tol_set) mf.spec.tol = g.tol;
    Manifold m(mf.spec);
    return {std::move(mf), std::move(m)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string expr_text(const Manifold& m, const Expr& e) { return e.to_string(m.coordinates()); }

std::string rational_text(const Rational& q) { return q.get_str(); }

json point_json(const acm::Point& p) {
    json a = json::array();
    for (const auto& c : p.coords()) a.push_back(c.get_str());
    return a;
}

std::string point_text(const Manifold& m, const acm::Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        if (i) s += ", ";
        s += m.coordinates()[i] + "=" + p[i].get_str();
    }
    return s + ")";
}

std::string frame_name(std::size_t k) { return "e" + std::to_string(k + 1); }

/// "-e5", "2*e1 + x*e3", "0".
std::string vector_text(const Manifold& m, const FrameVector& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::string c = expr_text(m, v[k]);
        bool neg = false;
        if (v[k].is_constant()) {
            neg = v[k].constant() < 0;
            const Rational mag = neg ? Rational(-v[k].constant()) : v[k].constant();
            c = mag == 1 ? "" : mag.get_str() + "*";
        } else {
            c = "(" + c + ")*";
        }
        if (s.empty())
            s = (neg ? "-" : "") + c + frame_name(k);
        else
            s += (neg ? " - " : " + ") + c + frame_name(k);
    }
    return s.empty() ? "0" : s;
}

json vector_json(const Manifold& m, const FrameVector& v) {
    json o = json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) o[frame_name(k)] = expr_text(m, v[k]);
    return o;
}

json matrix_json(const Manifold& m, const acm::ExprMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(expr_text(m, a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(std::ostream& os, const Manifold& m, const std::string& title, const acm::ExprMatrix& a) {
    os << title << ":\n";
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cells.push_back(expr_text(m, a(i, j)));
            width = std::max(width, cells.back().size());
        }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::string& c = cells[i * a.cols() + j];
            os << std::string(width - c.size() + (j ? 2 : 0), ' ') << c;
        }
        os << "\n";
    }
}

json check_json(const CheckResult& c) {
    json o;
    o["name"] = c.name;
    o["verdict"] = acm::to_string(c.verdict);
    o["passed"] = c.passed();
    o["residual"] = c.residual;
    if (c.informational) o["informational"] = true;
    if (!c.note.empty()) o["note"] = c.note;
    if (!c.passed()) {
        o["where"] = c.where;
        o["witness"] = c.witness ? point_json(*c.witness) : json(nullptr);
        o["witness_value"] = c.witness_value;
    }
    return o;
}

json report_json(const CheckReport& r) {
    json o;
    o["group"] = r.name;
    o["passed"] = r.passed();
    json a = json::array();
    for (const auto& c : r.checks) a.push_back(check_json(c));
    o["checks"] = std::move(a);
    return o;
}

void print_report(std::ostream& os, const Manifold& m, const CheckReport& r) {
    os << "[" << r.name << "] " << (r.passed() ? "pass" : "fail") << "\n";
    for (const auto& c : r.checks) {
        std::string name = c.name;
        name.resize(std::max<std::size_t>(name.size(), 24), ' ');
        os << "  " << name << " " << (c.informational ? "info" : (c.passed() ? "pass" : "FAIL")) << "  "
           << acm::to_string(c.verdict) << "  residual " << fmt(c.residual);
        if (!c.passed()) {
            os << "  at " << c.where;
            if (c.witness) os << " " << point_text(m, *c.witness) << " value " << fmt(c.witness_value);
        }
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
}

json param_json(const acm::FitParameter& p) {
    if (!p.constrained) return "unconstrained";
    if (p.exact) return rational_text(*p.exact);
    return p.value;
}

std::string param_text(const acm::FitParameter& p) {
    if (!p.constrained) return "unconstrained";
    if (p.exact) return rational_text(*p.exact);
    return fmt(p.value);
}

json fit_json(const acm::FitResult& f) {
    json o;
    for (const auto& p : f.params) o[p.name] = param_json(p);
    o["residual"] = f.residual;
    o["exact"] = f.exact_fit;
    o["arithmetic"] = f.exact_arithmetic ? "rational" : "floating";
    o["equations"] = f.rows;
    return o;
}

std::string fit_text(const acm::FitResult& f) {
    std::string s;
    for (const auto& p : f.params) s += p.name + " = " + param_text(p) + ", ";
    return s + "residual " + fmt(f.residual) + (f.exact_fit ? " (exact fit)" : " (inexact fit)");
}

json header(const std::string& command, const Loaded& l) {
    json o;
    o["tool"] = "acmtool";
    o["version"] = kVersion;
    o["command"] = command;
    o["manifest"] = {{"name", l.manifold.name()}, {"hash", l.manifest.hash}};
    const auto& s = l.manifold.sampler();
    o["sampling"] = {{"seed", s.options().seed},
                     {"requested", s.options().count},
                     {"points", s.points().size()},
                     {"tol", l.manifold.tol()}};
    return o;
}

void print_header(std::ostream& os, const Loaded& l) {
    const auto& s = l.manifold.sampler();
    os << "manifest " << l.manifold.name() << " (hash " << l.manifest.hash << "), dimension " << l.manifold.dim()
       << ", " << s.points().size() << " sample points, seed " << s.options().seed << ", tol "
       << fmt(l.manifold.tol()) << "\n";
}

// --- check ---------------------------------------------------------------

const std::vector<std::string> kGroups = {"almost-contact", "almost-kenmotsu", "kenmotsu", "nullity", "eta-einstein"};

int cmd_check(const std::string& path, std::vector<std::string> groups, const Global& g) {
    const Loaded l = load(path, g);
    const Manifold& m = l.manifold;
    if (groups.empty()) groups = kGroups;
    auto selected = [&](const std::string& s) { return std::find(groups.begin(), groups.end(), s) != groups.end(); };

    const acm::ConnectionTable conn = acm::koszul(m);
    const acm::CurvatureTable t = acm::riemann(m, conn);
    json out = header("check", l);
    json reports = json::array();
    std::ostringstream text;
    print_header(text, l);
    bool ok = true;

    auto emit = [&](const CheckReport& r, bool counts) {
        reports.push_back(report_json(r));
        print_report(text, m, r);
        if (counts) ok = ok && r.passed();
    };

    if (selected("almost-contact")) emit(acm::check_almost_contact(m), true);
    if (selected("almost-kenmotsu")) emit(acm::check_almost_kenmotsu(m), true);
    if (selected("kenmotsu")) {
        const CheckReport k = acm::check_kenmotsu(m, conn, t);
        emit(k, true);
        if (k.find("kenmotsu")->passed()) emit(acm::check_kenmotsu_lemmas(m, conn, t), true);
    }
    out["reports"] = std::move(reports);

    if (selected("nullity")) {
        json nj;
        try {
            const acm::NullityReport nr = acm::solve_nullity(m, conn, t);
            nj = fit_json(nr.fit);
            if (nr.tensors.exact) {
                json sp = json::array();
                for (const auto& q : *nr.tensors.exact) sp.push_back(rational_text(q));
                nj["h_prime_spectrum"] = std::move(sp);
            }
            nj["spectrum_consistent"] = nr.spectrum_consistent ? json(*nr.spectrum_consistent) : json(nullptr);
            bool pass = nr.fit.exact_fit && nr.spectrum_consistent.value_or(true);
            text << "[nullity] " << fit_text(nr.fit) << "\n";
            if (nr.tensors.exact) {
                text << "  h' spectrum {";
                for (std::size_t i = 0; i < nr.tensors.exact->size(); ++i)
                    text << (i ? ", " : "") << rational_text((*nr.tensors.exact)[i]);
                text << "}\n";
            }
            if (nr.spectrum_consistent)
                text << "  alpha^2 + kappa + 1 = 0 on ker eta: " << (*nr.spectrum_consistent ? "yes" : "no") << "\n";
            const acm::FitParameter& kappa = nr.fit["kappa"];
            if (nr.fit.exact_fit && kappa.exact && *kappa.exact < -1) {
                const CheckReport ids = acm::check_nullity_identities(m, conn, t, nr.tensors, *kappa.exact);
                nj["identities"] = report_json(ids);
                print_report(text, m, ids);
                pass = pass && ids.passed();
            }
            nj["passed"] = pass;
            text << "  nullity: " << (pass ? "pass" : "fail") << "\n";
            ok = ok && pass;
        } catch (const acm::DegenerateSystem& e) {
            nj = {{"error", e.what()}, {"passed", false}};
            text << "[nullity] degenerate system: " << e.what() << "\n";
            ok = false;
        }
        out["nullity"] = std::move(nj);
    }

    if (selected("eta-einstein")) {
        json ej;
        try {
            const acm::EtaEinsteinReport er = acm::solve_eta_einstein(m, t);
            ej = fit_json(er.fit);
            ej["einstein"] = er.einstein;
            ej["a_from_r"] = expr_text(m, er.a_from_r);
            ej["b_from_r"] = expr_text(m, er.b_from_r);
            ej["passed"] = er.fit.exact_fit;
            text << "[eta-einstein] " << fit_text(er.fit) << (er.einstein ? ", Einstein" : "") << "\n";
            text << "  from r: a = 1 + r/2n = " << expr_text(m, er.a_from_r) << ", b = -(2n+1+r/2n) = "
                 << expr_text(m, er.b_from_r) << "\n";
            ok = ok && er.fit.exact_fit;
        } catch (const acm::DegenerateSystem& e) {
            ej = {{"error", e.what()}, {"passed", false}};
            text << "[eta-einstein] degenerate system: " << e.what() << "\n";
            ok = false;
        }
        out["eta_einstein"] = std::move(ej);
    }
    out["passed"] = ok;
    text << (ok ? "all selected checks pass" : "some checks failed") << "\n";
    if (g.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

// --- tables --------------------------------------------------------------

int cmd_tables(const std::string& path, const std::string& what, bool all, const Global& g) {
    const Loaded l = load(path, g);
    const Manifold& m = l.manifold;
    const std::size_t n = m.dim();
    json out = header("tables", l);
    out["what"] = what;
    std::ostringstream text;
    print_header(text, l);

    json entries = json::array();
    auto entry = [&](json idx, const std::string& label, const FrameVector& v) {
        if (!all && v.is_zero()) return;
        idx["value"] = vector_json(m, v);
        entries.push_back(std::move(idx));
        text << "  " << label << " = " << vector_text(m, v) << "\n";
    };

    if (what == "brackets") {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = all ? 0 : i + 1; j < n; ++j)
                entry({{"i", i + 1}, {"j", j + 1}}, "[" + frame_name(i) + "," + frame_name(j) + "]", m.structure(i, j));
    } else if (what == "conn") {
        const acm::ConnectionTable conn = acm::koszul(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                entry({{"i", i + 1}, {"j", j + 1}}, "nabla_" + frame_name(i) + " " + frame_name(j), conn.nabla(i, j));
    } else if (what == "riem") {
        const acm::CurvatureTable t = acm::riemann(m, acm::koszul(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    entry({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}},
                          "R(" + frame_name(i) + "," + frame_name(j) + ")" + frame_name(k), t.r(i, j, k));
    } else if (what == "ricci") {
        const acm::CurvatureTable t = acm::riemann(m, acm::koszul(m));
        out["S"] = matrix_json(m, t.ricci);
        out["Q"] = matrix_json(m, t.ricci_operator);
        out["r"] = expr_text(m, t.scalar);
        print_matrix(text, m, "S(e_i, e_j)", t.ricci);
        print_matrix(text, m, "Q (column j = Q e_j)", t.ricci_operator);
        text << "r = " << expr_text(m, t.scalar) << "\n";
    } else if (what == "star") {
        const acm::CurvatureTable t = acm::riemann(m, acm::koszul(m));
        out["S_star"] = matrix_json(m, t.star_ricci);
        out["r_star"] = expr_text(m, t.star_scalar);
        print_matrix(text, m, "S*(e_i, e_j)", t.star_ricci);
        text << "r* = " << expr_text(m, t.star_scalar) << "\n";
    } else if (what == "h") {
        const acm::CurvatureTable t = acm::riemann(m, acm::koszul(m));
        const acm::StructureTensors s = acm::h_tensors(m, t);
        out["h"] = matrix_json(m, s.h);
        out["h_prime"] = matrix_json(m, s.h_prime);
        out["ell"] = matrix_json(m, s.ell);
        print_matrix(text, m, "h (column j = h e_j)", s.h);
        print_matrix(text, m, "h' (column j = h' e_j)", s.h_prime);
        print_matrix(text, m, "l = R(., xi) xi (column j = l e_j)", s.ell);
        if (s.exact) {
            json sp = json::array();
            text << "spectrum of h' = {";
            for (std::size_t i = 0; i < s.exact->size(); ++i) {
                sp.push_back(rational_text((*s.exact)[i]));
                text << (i ? ", " : "") << rational_text((*s.exact)[i]);
            }
            text << "}\n";
            out["spectrum"] = std::move(sp);
        } else {
            json samples = json::array();
            text << "spectrum of h' at sample points:\n";
            for (const auto& sp : s.spectrum) {
                json ev = json::array();
                text << "  " << point_text(m, sp.point) << ":";
                for (std::size_t i = 0; i < sp.real.size(); ++i) {
                    ev.push_back({sp.real[i], sp.imag[i]});
                    text << " " << fmt(sp.real[i]) << (sp.imag[i] != 0.0 ? (sp.imag[i] > 0 ? "+" : "") + fmt(sp.imag[i]) + "i" : "");
                }
                text << "\n";
                samples.push_back({{"point", point_json(sp.point)}, {"eigenvalues", std::move(ev)}});
            }
            out["spectrum_samples"] = std::move(samples);
        }
    }
    if (what == "brackets" || what == "conn" || what == "riem") out["entries"] = std::move(entries);
    if (g.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

// --- soliton -------------------------------------------------------------

struct SolitonArgs {
    bool solve = false;
    bool verify = false;
    std::string lambda_tilde;
    std::string mu;
    std::string p;
};

json theorem_json(const Manifold& m, const CheckReport& r, std::ostream& text) {
    print_report(text, m, r);
    return report_json(r);
}

int cmd_soliton(const std::string& path, const SolitonArgs& a, const Global& g) {
    const Loaded l = load(path, g);
    const Manifold& m = l.manifold;
    if (!l.manifest.potential) throw acm::MissingPotential("the manifest has no \"potential\"");
    const acm::SolitonProblem& problem = *l.manifest.potential;
    const acm::ConnectionTable conn = acm::koszul(m);
    const acm::CurvatureTable t = acm::riemann(m, conn);
    const long n = m.n();
    std::optional<Rational> p;
    if (!a.p.empty()) p = acm::parse_rational(a.p);

    json out = header("soliton", l);
    out["form"] = problem.function ? "gradient" : "vector";
    std::ostringstream text;
    print_header(text, l);
    text << "potential: " << (problem.function ? "function f = " + expr_text(m, *problem.function) : "vector field V")
         << "\n";
    bool ok = true;
    std::optional<Rational> lt;
    std::optional<Rational> mu;

    auto classification = [&](const Rational& lam) {
        json c;
        c["rule"] = acm::classify_text(lam, n);
        text << "classification: " << acm::classify_text(lam, n) << "\n";
        if (p) {
            const std::string kind = acm::to_string(acm::classify(lam, n, *p));
            c["p"] = rational_text(*p);
            c["kind"] = kind;
            text << "  at p = " << rational_text(*p) << ": " << kind << "\n";
        }
        return c;
    };

    if (a.solve) {
        const acm::SolitonReport r = acm::solve_soliton(m, conn, t, problem);
        json sj = fit_json(r.fit);
        sj["lambda"] = r.lambda;
        sj["residual_table"] = matrix_json(m, r.residual);
        text << "solve: " << fit_text(r.fit) << "\n";
        text << "  lambda = " << r.lambda << ", mu = " << param_text(r.fit["mu"]) << "\n";
        const auto& lp = r.fit["lambda_tilde"];
        const auto& mp = r.fit["mu"];
        if (lp.exact) sj["classification"] = classification(*lp.exact);
        if (lp.exact && mp.exact) {
            lt = *lp.exact;
            mu = *mp.exact;
        }
        ok = r.fit.exact_fit;
        out["solve"] = std::move(sj);
    }
    if (a.verify) {
        if (!a.lambda_tilde.empty() || !a.mu.empty()) {
            if (a.lambda_tilde.empty() || a.mu.empty())
                throw acm::ManifestError("--verify needs both --lambda-tilde and --mu");
            lt = acm::parse_rational(a.lambda_tilde);
            mu = acm::parse_rational(a.mu);
        } else if (l.manifest.constants) {
            lt = l.manifest.constants->lambda_tilde;
            mu = l.manifest.constants->mu;
        } else {
            throw acm::ManifestError("--verify needs --lambda-tilde and --mu or manifest \"constants\"");
        }
        const acm::ExprMatrix res =
            problem.function ? acm::gradient_soliton_residual(m, conn, t, *problem.function, Expr(*lt), Expr(*mu))
                             : acm::soliton_residual(m, t, problem.potential(m), Expr(*lt), Expr(*mu));
        json vj;
        vj["lambda_tilde"] = rational_text(*lt);
        vj["mu"] = rational_text(*mu);
        vj["lambda"] = acm::render_lambda(*lt, n);
        json table = json::array();
        text << "verify at lambda~ = " << rational_text(*lt) << ", mu = " << rational_text(*mu)
             << " (lambda = " << acm::render_lambda(*lt, n) << ")\n";
        bool zero = true;
        double worst = 0.0;
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = i; j < m.dim(); ++j) {
                const acm::ZeroTest z = acm::is_zero(res(i, j), m.sampler(), m.tol());
                json e = {{"i", i + 1},
                          {"j", j + 1},
                          {"value", expr_text(m, res(i, j))},
                          {"verdict", acm::to_string(z.verdict)},
                          {"max_abs", z.max_abs}};
                if (z.verdict == acm::Verdict::NonZero && z.witness) e["witness"] = point_json(*z.witness);
                table.push_back(std::move(e));
                zero = zero && z.verdict != acm::Verdict::NonZero;
                worst = std::max(worst, z.max_abs);
                if (z.verdict != acm::Verdict::ProvedZero || i == j)
                    text << "  (" << frame_name(i) << "," << frame_name(j) << ")  " << expr_text(m, res(i, j)) << "  "
                         << acm::to_string(z.verdict) << "\n";
            }
        vj["residual_table"] = std::move(table);
        vj["residual"] = worst;
        vj["is_soliton"] = zero;
        vj["classification"] = classification(*lt);
        text << "  " << (zero ? "soliton equation holds" : "soliton equation fails") << ", max residual "
             << fmt(worst) << "\n";
        ok = ok && zero;
        out["verify"] = std::move(vj);
    }
    if (lt && mu) out["theorems"] = theorem_json(m, acm::check_theorem_instances(m, conn, t, problem, *lt, *mu), text);
    out["passed"] = ok;
    if (g.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks almost contact metric manifolds and *-conformal eta-Ricci solitons."};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Global g;
    app.add_flag("--json", g.json, "emit a JSON report");
    app.add_option("--seed", g.seed, "sampling seed");
    app.add_option("--samples", g.samples, "number of sample points")->check(CLI::PositiveNumber);
    app.add_option("--tol", g.tol, "absolute zero tolerance")->check(CLI::PositiveNumber);

    std::string manifest;
    std::vector<std::string> groups;
    auto* check = app.add_subcommand("check", "run structure checks and fits");
    check->add_option("manifest", manifest, "manifest JSON")->required();
    check->add_option("--checks", groups, "groups to run")->delimiter(',')->check(CLI::IsMember(kGroups));

    std::string what;
    bool all = false;
    auto* tables = app.add_subcommand("tables", "print frame tables");
    tables->add_option("manifest", manifest, "manifest JSON")->required();
    tables->add_option("--what", what, "table")->required()->check(
        CLI::IsMember({"brackets", "conn", "riem", "ricci", "star", "h"}));
    tables->add_flag("--all", all, "include zero entries");

    SolitonArgs sa;
    auto* soliton = app.add_subcommand("soliton", "solve or verify the soliton equation");
    soliton->add_option("manifest", manifest, "manifest JSON")->required();
    auto* solve_flag = soliton->add_flag("--solve", sa.solve, "least-squares (lambda~, mu)");
    auto* verify_flag = soliton->add_flag("--verify", sa.verify, "residual table at given constants");
    soliton->add_option("--lambda-tilde", sa.lambda_tilde, "lambda - p/2 - 1/(2n+1), rational");
    soliton->add_option("--mu", sa.mu, "mu, rational");
    soliton->add_option("--p", sa.p, "numeric pressure for classification, rational");
    solve_flag->excludes(verify_flag);

    for (auto* sub : {check, tables, soliton}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.seed_set = app.count("--seed") > 0;
    g.samples_set = app.count("--samples") > 0;
    g.tol_set = app.count("--tol") > 0;

    try {
        if (*check) return cmd_check(manifest, groups, g);
        if (*tables) return cmd_tables(manifest, what, all, g);
        if (!sa.solve && !sa.verify) sa.solve = true;
        return cmd_soliton(manifest, sa, g);
    } catch (const acm::ValidationError& e) {
        std::cerr << "validation error: " << e.what();
        if (e.witness()) {
            std::cerr << " at (";
            for (std::size_t i = 0; i < e.witness()->dimension(); ++i)
                std::cerr << (i ? ", " : "") << (*e.witness())[i].get_str();
            std::cerr << ")";
        }
        std::cerr << "\n";
        return 2;
    } catch (const acm::ManifestError& e) {
        std::cerr << "manifest error: " << e.what() << "\n";
        return 2;
    } catch (const acm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const acm::MissingPotential& e) {
        std::cerr << "missing potential: " << e.what() << "\n";
        return 2;
    } catch (const acm::DegenerateSystem& e) {
        std::cerr << "degenerate system: " << e.what()
                  << " (the metric and eta (x) eta columns cannot be separated on the samples)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
