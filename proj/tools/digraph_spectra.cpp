// digraph-spectra: build family digraphs, compute their spectra and
// exponents, and reproduce the closed-form tables.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dgs/distinct.hpp"
#include "dgs/exponents.hpp"
#include "dgs/families.hpp"
#include "dgs/report.hpp"
#include "dgs/spectra.hpp"

namespace {

using nlohmann::json;
using namespace dgs;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitHard = 2;

// Raised for oracle disagreements detected by the CLI itself.
struct HardFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "text";
    std::optional<int> cap;
    std::string out;
};

struct Input {
    std::vector<std::string> tokens;
    std::string file;
};

struct Subject {
    std::optional<FamilySpec> spec;
    Digraph graph;
    std::string label;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FamilySpec spec_from_tokens(const std::vector<std::string>& tokens) {
    if (tokens.size() == 1 && !tokens[0].empty() && tokens[0].front() == '{') return parse_family_spec_json(tokens[0]);
    return parse_family_spec(tokens);
}

Subject load(const Input& in) {
    if (!in.file.empty()) {
        if (!in.tokens.empty()) fail(ErrorKind::InvalidArgument, "give either a family spec or --file, not both");
        return {std::nullopt, parse_digraph(read_file(in.file)), "file:" + in.file};
    }
    if (in.tokens.empty()) fail(ErrorKind::InvalidArgument, "expected a family spec (e.g. family=ADF n=7) or --file");
    FamilySpec spec = spec_from_tokens(in.tokens);
    Digraph d = build_family(spec);
    return {spec, std::move(d), to_string(spec)};
}

int cap_of(const Globals& g) { return g.cap ? *g.cap : enumeration_cap_from_env(); }

Format format_of(const Globals& g) {
    auto f = format_from_string(g.format);
    if (!f) fail(ErrorKind::InvalidArgument, "unknown format '" + g.format + "' (text, json, csv, md)");
    return *f;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Single results print as key/value pairs in every non-JSON format.
std::string render_object(const json& obj, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json: os << obj.dump() << '\n'; break;
        case Format::text:
            for (const auto& [k, v] : obj.items()) os << k << ": " << scalar_text(v) << '\n';
            break;
        case Format::csv:
            os << "key,value\n";
            for (const auto& [k, v] : obj.items()) {
                std::string s = scalar_text(v);
                if (s.find_first_of(",\"\n") != std::string::npos) {
                    std::string q = "\"";
                    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
                    s = q + "\"";
                }
                os << k << ',' << s << '\n';
            }
            break;
        case Format::md:
            os << "| key | value |\n| --- | --- |\n";
            for (const auto& [k, v] : obj.items()) os << "| " << k << " | " << scalar_text(v) << " |\n";
            break;
    }
    return os.str();
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + g.out + "'");
    out << text;
}

json pair_json(const std::optional<std::pair<int, int>>& p) {
    if (!p) return nullptr;
    return json::array({p->first, p->second});
}

json triangular_json(const std::optional<TriangularCertificate>& c) {
    if (!c) return nullptr;
    json diag = json::array();
    for (auto [r, col] : c->diagonal) diag.push_back({r, col});
    return {{"deleted_row", c->deleted_row}, {"deleted_col", c->deleted_col}, {"diagonal", diag}};
}

std::string render_digraph(const Digraph& d, Format f) {
    switch (f) {
        case Format::json: return to_json(d);
        case Format::text: return to_text(d);
        case Format::csv: {
            std::string s = "from,to,multiplicity\n";
            for (const Arc& a : d.arcs())
                s += std::to_string(a.from) + ',' + std::to_string(a.to) + ',' + std::to_string(a.multiplicity) + '\n';
            return s;
        }
        case Format::md: {
            std::string s = "| from | to | multiplicity |\n| --- | --- | --- |\n";
            for (const Arc& a : d.arcs())
                s += "| " + std::to_string(a.from) + " | " + std::to_string(a.to) + " | " + std::to_string(a.multiplicity) + " |\n";
            return s;
        }
    }
    return {};
}

int cmd_build(const Globals& g, const Input& in) {
    emit(g, render_digraph(load(in).graph, format_of(g)));
    return kExitOk;
}

int cmd_charpoly(const Globals& g, const Input& in, const std::string& method) {
    if (method != "exact" && method != "ldsg" && method != "closed-form" && method != "all")
        fail(ErrorKind::InvalidArgument, "unknown method '" + method + "' (exact, ldsg, closed-form, all)");
    const Subject s = load(in);
    json out;
    out["input"] = s.label;
    out["n"] = s.graph.order();
    std::optional<IntPolynomial> exact, ldsg, closed;
    if (method == "exact" || method == "all") exact = charpoly_exact(s.graph);
    if (method == "ldsg" || method == "all") ldsg = charpoly_ldsg(s.graph, cap_of(g));
    if (method == "closed-form" || (method == "all" && s.spec)) {
        if (!s.spec) fail(ErrorKind::InvalidArgument, "closed-form needs a family spec, not a file");
        if (!has_closed_form(*s.spec)) fail(ErrorKind::InvalidArgument, "no closed form for " + s.label);
        closed = closed_form_charpoly(*s.spec);
    }
    if (exact) out["exact"] = to_string(*exact);
    if (ldsg) out["ldsg"] = to_string(*ldsg);
    if (closed) out["closed_form"] = to_string(*closed);
    bool hard = false;
    if (exact && ldsg) {
        out["exact_equals_ldsg"] = *exact == *ldsg;
        hard = *exact != *ldsg;
    }
    if (closed && (exact || ldsg)) out["closed_form_match"] = *closed == (exact ? *exact : *ldsg);
    emit(g, render_object(out, format_of(g)));
    if (hard) throw HardFailure("characteristic polynomial methods disagree for " + s.label);
    return kExitOk;
}

int cmd_minpoly(const Globals& g, const Input& in) {
    const Subject s = load(in);
    const IntPolynomial psi = charpoly_exact(s.graph);
    const IntPolynomial m = minimal_polynomial(s.graph);
    json out;
    out["input"] = s.label;
    out["n"] = s.graph.order();
    out["min_poly"] = to_string(m);
    out["degree"] = m.degree();
    out["charpoly"] = to_string(psi);
    out["charpoly_over_min_poly"] = to_string(exact_divide(psi, m));
    emit(g, render_object(out, format_of(g)));
    return kExitOk;
}

int cmd_nonderogatory(const Globals& g, const Input& in) {
    const Subject s = load(in);
    const IntPolynomial m = minimal_polynomial(s.graph);
    json out;
    out["input"] = s.label;
    out["n"] = s.graph.order();
    out["min_poly_degree"] = m.degree();
    out["non_derogatory"] = m.degree() == s.graph.order();
    if (s.graph.order() <= kDefaultTriangularSearchCap)
        out["triangular_certificate"] = triangular_json(triangular_certificate(s.graph));
    emit(g, render_object(out, format_of(g)));
    return kExitOk;
}

int cmd_exponent(const Globals& g, const Input& in) {
    const Subject s = load(in);
    const ExponentResult r = exponent(s.graph);
    json out;
    out["input"] = s.label;
    out["n"] = s.graph.order();
    out["primitive"] = r.primitive;
    out["exponent"] = r.exponent ? json(*r.exponent) : json(nullptr);
    out["witness"] = pair_json(r.witness);
    emit(g, render_object(out, format_of(g)));
    return kExitOk;
}

int cmd_distinct(const Globals& g, const Input& in, const std::string& method) {
    if (method != "gcdQ" && method != "gcdF2" && method != "cyclotomic")
        fail(ErrorKind::InvalidArgument, "unknown method '" + method + "' (gcdQ, gcdF2, cyclotomic)");
    const Subject s = load(in);
    json out;
    out["input"] = s.label;
    out["method"] = method;
    if (method == "cyclotomic") {
        if (!s.spec) fail(ErrorKind::InvalidArgument, "the cyclotomic method needs a family spec");
        const CyclotomicFactorization f = cyclotomic_factorization(*s.spec);
        json found = json::array();
        for (auto [d, mult] : f.found) found.push_back({d, mult});
        out["polynomial"] = to_string(f.polynomial);
        out["cubic"] = to_string(f.cubic);
        out["cubic_divides"] = f.cubic_divides;
        out["cubic_remainder"] = to_string(f.cubic_remainder);
        out["cofactor"] = to_string(f.cofactor);
        out["cyclotomic_factors"] = found;
        out["complete"] = f.complete;
        out["claimed_indices"] = f.claimed;
        out["claimed_matches"] = f.claimed_matches;
        out["distinct"] = f.distinct_roots;
    } else {
        const GcdCertificate c = distinct_by_gcd(charpoly_exact(s.graph), method == "gcdQ" ? Field::Q : Field::F2);
        out["polynomial"] = to_string(c.f);
        out["derivative"] = to_string(c.derivative);
        out["gcd"] = to_string(c.gcd);
        out["distinct"] = c.squarefree;
        if (c.field == Field::F2) out["degree_dropped"] = c.degree_dropped;
    }
    emit(g, render_object(out, format_of(g)));
    return kExitOk;
}

int cmd_ldsgs(const Globals& g, const Input& in, int size) {
    const Subject s = load(in);
    const auto all = enumerate_ldsgs(s.graph, size);
    json list = json::array();
    long signed_sum = 0;
    std::string text;
    for (const Ldsg& l : all) {
        json cycles = json::array();
        std::string line;
        for (const LdsgCycle& c : l.cycles) {
            json cyc = json::array();
            line += '(';
            for (std::size_t i = 0; i < c.vertices.size(); ++i) {
                cyc.push_back(c.vertices[i]);
                line += (i ? "," : "") + std::to_string(c.vertices[i]);
            }
            line += ',' + std::to_string(c.vertices.front()) + ')';
            cycles.push_back(cyc);
        }
        const int sign = l.components() % 2 ? -1 : 1;
        signed_sum += sign;
        list.push_back({{"cycles", cycles}, {"p", l.components()}});
        text += line + " p=" + std::to_string(l.components()) + '\n';
    }
    if (format_of(g) == Format::json) {
        json out{{"input", s.label}, {"size", size}, {"count", all.size()}, {"signed_sum", signed_sum}, {"ldsgs", list}};
        emit(g, out.dump() + "\n");
    } else {
        emit(g, text + "count: " + std::to_string(all.size()) + "\nsigned_sum: " + std::to_string(signed_sum) + '\n');
    }
    return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& table, const std::string& range, unsigned threads) {
    auto t = table_from_string(table);
    if (!t) fail(ErrorKind::InvalidArgument, "unknown table '" + table + "'");
    VerifyOptions opt;
    opt.table = *t;
    if (!range.empty()) opt.range = parse_range(range);
    opt.cap = cap_of(g);
    opt.threads = threads;
    const VerificationReport report = verify(opt);
    emit(g, render(report, format_of(g)));
    if (report.hard_failures() > 0) {
        std::cerr << "error: " << report.hard_failures() << " hard failure(s) in the report\n";
        return kExitHard;
    }
    return kExitOk;
}

void add_input(CLI::App* sub, Input& in) {
    sub->add_option("spec", in.tokens, "family spec as key=value tokens, or one JSON object");
    sub->add_option("--file", in.file, "digraph file (text or JSON)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic polynomials, minimal polynomials and exponents of structured digraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "text, json, csv or md")->capture_default_str();
    app.add_option("--cap", g.cap, "enumeration cap for the ldsg method (default: DIGRAPH_SPECTRA_CAP or 12)");
    app.add_option("--out", g.out, "write output to this path");

    Input in;
    std::string method, table = "all", range;
    int size = 1;
    unsigned threads = 0;

    auto* build = app.add_subcommand("build", "construct a family digraph");
    add_input(build, in);
    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    add_input(charpoly, in);
    charpoly->add_option("--method", method, "exact, ldsg, closed-form or all")->default_val("exact");
    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial");
    add_input(minpoly, in);
    auto* nonderog = app.add_subcommand("nonderogatory", "non-derogatory test");
    add_input(nonderog, in);
    auto* exp = app.add_subcommand("exponent", "primitivity and exponent");
    add_input(exp, in);
    auto* distinct = app.add_subcommand("distinct", "distinct-eigenvalue certificates");
    add_input(distinct, in);
    distinct->add_option("--method", method, "gcdQ, gcdF2 or cyclotomic")->required();
    auto* ldsgs = app.add_subcommand("ldsgs", "list the linear directed subgraphs on a given number of vertices");
    add_input(ldsgs, in);
    ldsgs->add_option("--size", size, "vertices covered")->required();
    auto* ver = app.add_subcommand("verify", "reproduce the closed-form and exponent tables");
    ver->add_option("--table", table, "cdc, cdf, cdw, derived, complements, exponents or all")->capture_default_str();
    ver->add_option("--n", range, "n-range a..b (default per table)");
    ver->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*build) return cmd_build(g, in);
        if (*charpoly) return cmd_charpoly(g, in, method);
        if (*minpoly) return cmd_minpoly(g, in);
        if (*nonderog) return cmd_nonderogatory(g, in);
        if (*exp) return cmd_exponent(g, in);
        if (*distinct) return cmd_distinct(g, in, method);
        if (*ldsgs) return cmd_ldsgs(g, in, size);
        if (*ver) return cmd_verify(g, table, range, threads);
    } catch (const HardFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHard;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_internal() ? kExitHard : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHard;
    }
    return kExitInput;
}
