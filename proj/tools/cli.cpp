#include "cli.hpp"

#include "hf/cfrac.hpp"
#include "hf/errors.hpp"
#include "hf/hankel.hpp"
#include "hf/numerics.hpp"
#include "hf/orthopoly.hpp"
#include "hf/sequence.hpp"
#include "hf/shift.hpp"
#include "hf/special.hpp"
#include "hf/text.hpp"
#include "hf/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace hf::cli {

namespace {

using text::json;

// A computation refused its input: reported as a usage error.
bool is_usage_error(const Error& e) {
    return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
           dynamic_cast<const ArityError*>(&e);
}

std::optional<int> depth_cap() {
    const char* env = std::getenv("HF_MAX_DEPTH");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > std::numeric_limits<int>::max())
        throw ParseError(std::string("HF_MAX_DEPTH must be a nonnegative integer, got '") + env + "'");
    return static_cast<int>(v);
}

// Applies HF_MAX_DEPTH to a depth-like argument.
int capped(int value, const char* what, std::ostream& err) {
    const std::optional<int> cap = depth_cap();
    if (cap && value > *cap) {
        err << "note: " << what << " " << value << " capped to " << *cap << " by HF_MAX_DEPTH\n";
        return *cap;
    }
    return value;
}

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::plain;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    if (s == "csv") return Format::csv;
    throw ParseError("unknown format '" + s + "'");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + csv_field(cells[i]);
    return line + "\n";
}

std::string plain_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? " | " : "") + cells[i];
    return line + "\n";
}

// Printed-table LaTeX for a polynomial: x^2-x+\tfrac{1}{6}.
std::string table_poly_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        out += c.sign() < 0 ? "-" : (out.empty() ? "" : "+");
        if (i == 0 || !mag.is_one()) {
            if (mag.is_integer())
                out += mag.str();
            else
                out += "\\tfrac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
        }
        if (i >= 1) out += "x";
        if (i > 1) out += "^" + (i < 10 ? std::to_string(i) : "{" + std::to_string(i) + "}");
    }
    return out;
}

// c * (integer polynomial with leading coefficient 1): \frac{1}{16}(x^{4}-18x^{2}+41).
std::string scaled_monic_latex(const Poly& p) {
    const Rational lead = p.leading();
    std::string inner = text::poly_latex(p / lead);
    std::string plain;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner.compare(i, 2, "\\,") == 0) {
            ++i;
            continue;
        }
        plain += inner[i];
    }
    return text::rational_latex(lead) + "(" + plain + ")";
}

std::string scaled_monic_plain(const Poly& p) {
    const Rational lead = p.leading();
    return "(" + lead.str() + ")*(" + (p / lead).str() + ")";
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> plain;
    std::vector<std::vector<std::string>> latex;
    json rows = json::array();
};

Table table_one() {
    Table t;
    t.header = {"n", "H_n(B_{2k+1}((x+1)/2))"};
    const MomentSeq s = make_sequence("bernoulli-odd-half");
    for (int n = 0; n <= 4; ++n) {
        const Poly h = hankel_det(s, n);
        const EvenLinearFactorization f = factor_even_linear(h);
        t.plain.push_back({std::to_string(n), render_factored_plain(f)});
        t.latex.push_back({std::to_string(n), render_factored_latex(f)});
        t.rows.push_back(json{{"n", n},
                              {"value", text::poly_to_json(h)},
                              {"factored", render_factored_plain(f)},
                              {"latex", render_factored_latex(f)}});
    }
    return t;
}

Table table_two() {
    Table t;
    t.header = {"n", "B_n", "E_n", "B_n(x)", "E_n(x)"};
    for (int n = 0; n <= 6; ++n) {
        const Rational b = bernoulli_number(n), e = euler_number(n);
        const Poly bp = bernoulli_poly(n), ep = euler_poly(n);
        t.plain.push_back({std::to_string(n), b.str(), e.str(), bp.str(), ep.str()});
        auto number = [](const Rational& r) { return r.is_integer() && r.sign() >= 0 ? r.str() : "$" + r.str() + "$"; };
        t.latex.push_back({std::to_string(n), number(b), number(e),
                           n == 0 ? "1" : "$" + table_poly_latex(bp) + "$",
                           n == 0 ? "1" : "$" + table_poly_latex(ep) + "$"});
        t.rows.push_back(json{{"n", n},
                              {"bernoulli_number", b.str()},
                              {"euler_number", e.str()},
                              {"bernoulli_poly", text::poly_to_json(bp)},
                              {"euler_poly", text::poly_to_json(ep)}});
    }
    return t;
}

Table table_three() {
    Table t;
    t.header = {"n", "d_n^(1)"};
    for (int n = 0; n <= 3; ++n) {
        const BandMatrix m = euler_band(1, n);
        const Poly d = dn_via_recurrence(m.s, m.t, n);
        t.plain.push_back({std::to_string(n), scaled_monic_plain(d)});
        t.latex.push_back({std::to_string(n), scaled_monic_latex(d)});
        t.rows.push_back(json{{"n", n}, {"value", text::poly_to_json(d)}, {"latex", scaled_monic_latex(d)}});
    }
    return t;
}

// ---- subcommand state ----

struct Options {
    std::string format = "plain";
    std::string seq;
    std::string family;
    int n = 0;
    int count = 8;
    int depth = 5;
    int validate_depth = 30;
    int order = 12;
    int shift = 1;
    bool upto = false;
    std::string via;
    std::string mode = "even";
    std::string spec;
    std::string spec_file;
    int table = 1;
    std::string identity = "ramanujan-48";
    double s = 10.0, a = 0.5, b = 0.5, tol = 1e-10;
    std::string scope = "all";
    int max_depth = 5;
    std::uint64_t seed = 1;
    int cases = 200;
    bool serial = false;
    bool no_timing = false;
};

Format plain_or_json(const std::string& f) {
    const Format fmt = parse_format(f);
    if (fmt != Format::plain && fmt != Format::json) throw ParseError("this command supports --format plain|json");
    return fmt;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_seq(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int count = capped(o.count, "--count", err);
    const MomentSeq s = make_sequence(o.seq);
    const std::vector<Poly> values = s.prefix(count);
    if (fmt == Format::json) {
        json arr = json::array();
        for (const Poly& p : values) arr.push_back(text::poly_to_json(p));
        emit_json(out, json{{"seq", SequenceSpec::parse(o.seq).str()}, {"values", arr}});
    } else {
        for (int k = 0; k < count; ++k) out << "c_" << k << " = " << values[static_cast<std::size_t>(k)].str() << "\n";
    }
    return kExitOk;
}

int cmd_hankel(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int n = capped(o.n, "--n", err);
    const MomentSeq s = make_sequence(o.seq);
    json rows = json::array();
    for (int m = o.upto ? 0 : n; m <= n; ++m) {
        const Poly h = hankel_det(s, m);
        std::string factored;
        if (!h.is_zero()) factored = render_factored_plain(factor_even_linear(h));
        if (factored == h.str()) factored.clear();
        if (fmt == Format::json)
            rows.push_back(json{{"n", m}, {"det", text::poly_to_json(h)}, {"factored", factored}});
        else
            out << "H_" << m << " = " << h.str() << (factored.empty() ? "" : "  =  " + factored) << "\n";
    }
    if (fmt == Format::json) emit_json(out, json{{"seq", SequenceSpec::parse(o.seq).str()}, {"rows", rows}});
    return kExitOk;
}

int cmd_orthpoly(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int n = capped(o.n, "--n", err);
    if (o.family.empty() == o.seq.empty()) throw ParseError("orthpoly needs exactly one of --family or --seq");
    std::string via = o.via.empty() ? (o.family.empty() ? "det" : "rec") : o.via;
    if (via != "det" && via != "rec") throw ParseError("--via must be det or rec");
    YPoly p;
    std::string source;
    if (!o.family.empty()) {
        const Family f = Family::parse(o.family);
        source = f.str();
        p = via == "rec" ? named_family(f, n) : orth_poly_det(make_sequence(family_sequence(f)), n);
    } else {
        const MomentSeq s = make_sequence(o.seq);
        source = SequenceSpec::parse(o.seq).str();
        p = via == "det" ? orth_poly_det(s, n) : orth_poly_rec(jacobi_from_moments(s, std::max(n, 1)), n);
    }
    if (fmt == Format::json)
        emit_json(out, json{{"source", source}, {"n", n}, {"via", via}, {"poly", text::ypoly_to_json(p)}});
    else
        out << "P_" << n << "(y) = " << p.str() << "\n";
    return kExitOk;
}

int cmd_jacobi(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int depth = capped(o.depth, "--depth", err);
    if (depth < 1) throw DomainError("--depth must be at least 1");
    if (o.family.empty() == o.seq.empty()) throw ParseError("jacobi needs exactly one of --family or --seq");
    JacobiParams p;
    std::string source;
    if (!o.family.empty()) {
        const Family f = Family::parse(o.family);
        source = f.str();
        p = family_params(f, depth);
    } else {
        source = SequenceSpec::parse(o.seq).str();
        p = jacobi_from_moments(make_sequence(o.seq), depth);
    }
    if (fmt == Format::json) {
        json s = json::array(), t = json::array();
        for (const Poly& v : p.s) s.push_back(text::poly_to_json(v));
        for (const Poly& v : p.t) t.push_back(text::poly_to_json(v));
        emit_json(out, json{{"source", source}, {"c0", text::poly_to_json(p.c0)}, {"s", s}, {"t", t}});
    } else {
        out << "c0 = " << p.c0.str() << "\n";
        for (std::size_t i = 0; i < p.s.size(); ++i) out << "s_" << i << " = " << p.s[i].str() << "\n";
        for (std::size_t i = 0; i < p.t.size(); ++i) out << "t_" << i + 1 << " = " << p.t[i].str() << "\n";
    }
    return kExitOk;
}

int cmd_cfrac_expand(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int order = capped(o.order, "--order", err);
    if (order < 0) throw DomainError("--order must be nonnegative");
    const Family f = Family::parse(o.family);
    const JacobiParams p = family_params(f, order / 2 + 3);
    const TruncSeries series = jfraction_series(p, order);
    const bool match = series.agrees_with(moment_series(make_sequence(family_sequence(f)), order));
    if (fmt == Format::json) {
        emit_json(out, json{{"family", f.str()},
                            {"order", order},
                            {"series", text::series_to_json(series)},
                            {"matches_moments", match}});
    } else {
        out << series.str() << "\n";
        out << "matches moments: " << (match ? "yes" : "no") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

ContinuedFraction<Poly> cf_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw ParseError("CF spec must be an object with \"a\" and \"b\" arrays (and optional \"b0\")");
    std::vector<Poly> a, b;
    for (const json& v : j.at("a")) a.push_back(text::poly_from_json(v));
    for (const json& v : j.at("b")) b.push_back(text::poly_from_json(v));
    ContinuedFraction<Poly> cf;
    cf.b0 = j.contains("b0") ? text::poly_from_json(j.at("b0")) : Poly();
    auto pick = [](std::vector<Poly> v, const char* name) {
        return [v = std::move(v), name](int m) -> Poly {
            if (m < 1 || m > static_cast<int>(v.size()))
                throw ArityError(std::string("CF spec has no ") + name + "_" + std::to_string(m));
            return v[static_cast<std::size_t>(m - 1)];
        };
    };
    cf.depth_hint = static_cast<int>(std::min(a.size(), b.size()));
    cf.partial_num = pick(std::move(a), "a");
    cf.partial_den = pick(std::move(b), "b");
    return cf;
}

int cmd_cfrac_contract(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int depth = capped(o.depth, "--depth", err);
    if (depth < 0) throw DomainError("--depth must be nonnegative");
    if (o.spec.empty() == o.spec_file.empty()) throw ParseError("cfrac contract needs exactly one of --spec or --spec-file");
    json j;
    try {
        if (!o.spec.empty()) {
            j = json::parse(o.spec);
        } else {
            std::ifstream in(o.spec_file);
            if (!in) throw ParseError("cannot read " + o.spec_file);
            j = json::parse(in);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid CF spec JSON: ") + e.what());
    }
    const ContinuedFraction<Poly> cf = cf_from_json(j);
    const bool even = o.mode == "even";
    if (!even && o.mode != "odd") throw ParseError("--mode must be even or odd");
    const ContinuedFraction<Poly> c = even ? cf_even_contraction(cf, depth) : cf_odd_contraction(cf, depth);
    json a = json::array(), b = json::array();
    bool match = true;
    for (int k = 1; k <= depth; ++k) {
        a.push_back(text::poly_to_json(c.partial_num(k)));
        b.push_back(text::poly_to_json(c.partial_den(k)));
    }
    for (int k = 0; k <= depth; ++k) {
        const Approximant<Poly> p = cf_approximant(c, k);
        const Approximant<Poly> q = cf_approximant(cf, even ? 2 * k : 2 * k + 1);
        match = match && p.numerator * q.denominator == q.numerator * p.denominator;
    }
    if (fmt == Format::json) {
        emit_json(out, json{{"mode", o.mode},
                            {"depth", depth},
                            {"b0", text::poly_to_json(c.b0)},
                            {"a", a},
                            {"b", b},
                            {"approximants_match", match}});
    } else {
        out << "d_0 = " << c.b0.str() << "\n";
        for (int k = 1; k <= depth; ++k)
            out << "c_" << k << " = " << c.partial_num(k).str() << ",  d_" << k << " = " << c.partial_den(k).str() << "\n";
        out << "approximants match: " << (match ? "yes" : "no") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_shift(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int n = capped(o.n, "--n", err);
    if (o.shift != 1 && o.shift != 2) throw DomainError("--shift must be 1 or 2");
    const std::string via = o.via.empty() ? "both" : o.via;
    if (via != "prop" && via != "direct" && via != "both") throw ParseError("--via must be prop, direct or both");
    const MomentSeq s = make_sequence(o.seq);
    json j{{"seq", SequenceSpec::parse(o.seq).str()}, {"n", n}, {"shift", o.shift}};
    std::optional<Poly> prop, direct;
    if (via != "direct") prop = shifted_hankel(s, n, o.shift);
    if (via != "prop") direct = hankel_det(make_shifted(s, o.shift), n);
    bool agree = true;
    if (prop) j["prop"] = text::poly_to_json(*prop);
    if (direct) j["direct"] = text::poly_to_json(*direct);
    if (prop && direct) {
        agree = *prop == *direct;
        j["agree"] = agree;
    }
    if (fmt == Format::json) {
        emit_json(out, j);
    } else {
        if (prop) out << "from parameters: " << prop->str() << "\n";
        if (direct) out << "direct:          " << direct->str() << "\n";
        if (prop && direct) out << "agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? kExitOk : kExitMismatch;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
    out << render_table(o.table, parse_format(o.format));
    return kExitOk;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    const int depth = capped(o.validate_depth, "--depth", err);
    if (depth < 1) throw DomainError("--depth must be at least 1");
    const IdentityKind kind = parse_identity_kind(o.identity);
    const IdentityReport r = validate_identity(kind, IdentityParams{o.s, o.a, o.b}, depth);
    const bool pass = r.abs_err < o.tol;
    if (fmt == Format::json) {
        emit_json(out, json{{"identity", r.identity},
                            {"params", {{"s", o.s}, {"a", o.a}, {"b", o.b}}},
                            {"depth", depth},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"absErr", r.abs_err},
                            {"tol", o.tol},
                            {"terminated", r.cf.terminated},
                            {"warning", r.cf.warning ? json(r.cf.message) : json(nullptr)},
                            {"pass", pass}});
    } else {
        out << r.identity << ": lhs = " << fmt_double(r.lhs) << ", rhs = " << fmt_double(r.rhs)
            << ", |lhs - rhs| = " << fmt_double(r.abs_err) << (pass ? "  PASS" : "  FAIL") << "\n";
        if (r.cf.warning) out << "warning: " << r.cf.message << "\n";
    }
    return pass ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const Format fmt = plain_or_json(o.format);
    VerifyOptions v;
    v.max_depth = capped(o.max_depth, "--max-depth", err);
    v.seed = o.seed;
    v.random_cases = o.cases;
    v.parallel = !o.serial;
    const std::vector<VerifyResult> results = run_verification(o.scope, v);
    int failed = 0;
    json arr = json::array();
    for (const VerifyResult& r : results) {
        if (!r.pass) ++failed;
        json item{{"id", r.id}, {"module", r.module}, {"pass", r.pass}, {"detail", r.detail}};
        if (!o.no_timing) item["millis"] = r.millis;
        arr.push_back(item);
    }
    if (fmt == Format::json) {
        emit_json(out, json{{"scope", o.scope},
                            {"max_depth", v.max_depth},
                            {"seed", v.seed},
                            {"passed", static_cast<int>(results.size()) - failed},
                            {"failed", failed},
                            {"results", arr}});
    } else {
        for (const VerifyResult& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.id;
            if (!o.no_timing) out << " (" << std::fixed << std::setprecision(1) << r.millis << " ms)";
            if (!r.pass) out << ": " << r.detail;
            out << "\n";
        }
        out << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

std::string render_table(int which, Format format) {
    Table t;
    switch (which) {
    case 1: t = table_one(); break;
    case 2: t = table_two(); break;
    case 3: t = table_three(); break;
    default: throw DomainError("table must be 1, 2 or 3");
    }
    std::string out;
    switch (format) {
    case Format::plain:
        out += plain_line(t.header);
        for (const auto& r : t.plain) out += plain_line(r);
        break;
    case Format::csv:
        out += csv_line(t.header);
        for (const auto& r : t.plain) out += csv_line(r);
        break;
    case Format::latex:
        for (const auto& r : t.latex) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += " & ";
                line += (i == 0 || which == 2) ? r[i] : "$" + r[i] + "$";
            }
            out += line + " \\\\\n";
        }
        break;
    case Format::json: out += json{{"table", which}, {"columns", t.header}, {"rows", t.rows}}.dump(2) + "\n"; break;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hankel determinants, orthogonal polynomials and continued fractions over Q[x]", "hf"};
    app.require_subcommand(1);
    Options o;
    auto add_format = [&o](CLI::App* c, const std::string& help) {
        c->add_option("--format", o.format, help)->capture_default_str();
    };

    CLI::App* seq = app.add_subcommand("seq", "print the first terms of a moment sequence");
    seq->add_option("--name,--seq", o.seq, "sequence spec, e.g. bernoulli-odd-half")->required();
    seq->add_option("--count", o.count, "number of terms")->capture_default_str()->check(CLI::NonNegativeNumber);
    add_format(seq, "plain|json");

    CLI::App* hankel = app.add_subcommand("hankel", "Hankel determinant H_n (the (n+1)x(n+1) determinant)");
    hankel->add_option("--seq", o.seq, "sequence spec")->required();
    hankel->add_option("--n", o.n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
    hankel->add_flag("--upto", o.upto, "print H_0 .. H_n");
    add_format(hankel, "plain|json");

    CLI::App* orth = app.add_subcommand("orthpoly", "monic orthogonal polynomial P_n(y)");
    orth->add_option("--family", o.family, "touchard|alsalam-carlitz|bernoulli-odd|euler-nu0|euler-nu1|euler-nu2");
    orth->add_option("--seq", o.seq, "sequence spec (moments)");
    orth->add_option("--n", o.n, "degree")->required()->check(CLI::NonNegativeNumber);
    orth->add_option("--via", o.via, "det|rec");
    add_format(orth, "plain|json");

    CLI::App* jac = app.add_subcommand("jacobi", "recurrence parameters s_n, t_n");
    jac->add_option("--family", o.family, "family name");
    jac->add_option("--seq", o.seq, "sequence spec (moments)");
    jac->add_option("--depth", o.depth, "number of levels")->capture_default_str();
    add_format(jac, "plain|json");

    CLI::App* cfrac = app.add_subcommand("cfrac", "continued fractions");
    cfrac->require_subcommand(1);
    CLI::App* expand = cfrac->add_subcommand("expand", "expand a family's J-fraction as a series in z");
    expand->add_option("--family", o.family, "family name")->required();
    expand->add_option("--order", o.order, "highest power of z")->capture_default_str();
    add_format(expand, "plain|json");
    CLI::App* contract = cfrac->add_subcommand("contract", "even or odd canonical contraction of a CF spec");
    contract->add_option("--mode", o.mode, "even|odd")->capture_default_str();
    contract->add_option("--depth", o.depth, "number of contracted levels")->capture_default_str();
    contract->add_option("--spec", o.spec, "CF spec as JSON text");
    contract->add_option("--spec-file", o.spec_file, "CF spec JSON file");
    add_format(contract, "plain|json");

    CLI::App* shift = app.add_subcommand("shift", "Hankel determinant of a shifted sequence");
    shift->add_option("--seq", o.seq, "sequence spec")->required();
    shift->add_option("--n", o.n, "index n")->required()->check(CLI::NonNegativeNumber);
    shift->add_option("--shift", o.shift, "1|2")->capture_default_str();
    shift->add_option("--via", o.via, "prop|direct|both (default both)");
    add_format(shift, "plain|json");

    CLI::App* table = app.add_subcommand("table", "regenerate table 1, 2 or 3");
    table->add_option("which", o.table, "1|2|3")->required()->check(CLI::Range(1, 3));
    add_format(table, "plain|json|latex|csv");

    CLI::App* validate = app.add_subcommand("validate", "numerically check an analytic continued fraction");
    validate->add_option("--identity", o.identity, "ramanujan-48|lange-518|lange-520")->capture_default_str();
    validate->add_option("--s", o.s, "s")->capture_default_str();
    validate->add_option("--a", o.a, "a")->capture_default_str();
    validate->add_option("--b", o.b, "b")->capture_default_str();
    validate->add_option("--depth", o.validate_depth, "CF depth")->capture_default_str();
    validate->add_option("--tol", o.tol, "absolute tolerance")->capture_default_str();
    add_format(validate, "plain|json");

    CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("scope", o.scope, "all | module name | identity id")->capture_default_str();
    verify->add_option("--max-depth", o.max_depth, "largest n used")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "seed of the randomized suites")->capture_default_str();
    verify->add_option("--cases", o.cases, "cases per randomized suite")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_flag("--serial", o.serial, "run identities one at a time");
    verify->add_flag("--no-timing", o.no_timing, "omit timings (byte-identical output)");
    add_format(verify, "plain|json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (seq->parsed()) return cmd_seq(o, out, err);
        if (hankel->parsed()) return cmd_hankel(o, out, err);
        if (orth->parsed()) return cmd_orthpoly(o, out, err);
        if (jac->parsed()) return cmd_jacobi(o, out, err);
        if (expand->parsed()) return cmd_cfrac_expand(o, out, err);
        if (contract->parsed()) return cmd_cfrac_contract(o, out, err);
        if (shift->parsed()) return cmd_shift(o, out, err);
        if (table->parsed()) return cmd_table(o, out, err);
        if (validate->parsed()) return cmd_validate(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e) ? kExitUsage : kExitMismatch;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace hf::cli
