#include "dgs/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "json_util.hpp"

namespace dgs {

namespace {

using nlohmann::json;

constexpr int kMaxReportOrder = 60;

constexpr Table kAllTables[] = {Table::cdc, Table::cdf, Table::cdw, Table::derived, Table::complements, Table::exponents};

FamilySpec plain(Family f, int n) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    return s;
}

FamilySpec with_j(Family f, int n, int j) {
    FamilySpec s = plain(f, n);
    s.j = j;
    return s;
}

FamilySpec with_m(Family f, int n, int m) {
    FamilySpec s = plain(f, n);
    s.m = m;
    return s;
}

void add_unique(std::vector<FamilySpec>& out, FamilySpec s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

std::vector<int> range_list(int lo, int hi, int step = 1) {
    std::vector<int> v;
    for (int i = lo; i <= hi; i += step) v.push_back(i);
    return v;
}

void cdc_members(int n, std::vector<FamilySpec>& out) {
    const int k = n / 2;
    out.push_back(plain(Family::DCn, n));
    out.push_back(plain(Family::DCn_i_nmi, n));
    out.push_back(plain(Family::DCn_i_kmi, n));
    if (k - 1 >= 1)
        for (int j = 1; j <= k - 1; ++j) out.push_back(with_j(Family::DCn_i_kpjpi, n, j));
    else
        out.push_back(with_j(Family::DCn_i_kpjpi, n, 1));

    FamilySpec tips = plain(Family::DCn_tips, n);
    for (std::vector<int> t : {std::vector<int>{1}, std::vector<int>{k}, range_list(2, n - 2, 2)}) {
        if (t.empty() || t.back() > n - 2 || t.front() < 1) continue;
        tips.tips = t;
        add_unique(out, tips);
    }
    if (n - 2 < 1) {
        tips.tips = {1};
        out.push_back(tips);
    }

    if (n - 1 >= 3)
        for (int m = 3; m <= n - 1; ++m) out.push_back(with_m(Family::DCn_m, n, m));
    else
        out.push_back(with_m(Family::DCn_m, n, 3));
}

void derived_members(int n, std::vector<FamilySpec>& out) {
    out.push_back(plain(Family::ADF_loops, n));
    out.push_back(with_m(Family::Xn_loops, n, 2));
    out.push_back(with_m(Family::Xn_loops, n, n + 1));

    FamilySpec y = plain(Family::Yn_arcs_loops, n);
    y.arcs = {2};
    y.m = 2;
    add_unique(out, y);
    if (n - 1 > 2) {
        y.arcs = {2, n - 1};
        y.m = 3;
        add_unique(out, y);
    }
    y.arcs = range_list(2, n - 1);
    y.m = n - 1;
    if (!y.arcs.empty()) add_unique(out, y);

    for (int j = 2; j <= n; ++j) out.push_back(with_j(Family::Zn_loop, n, j));
}

std::string invalid_reason(const FamilySpec& spec) {
    try {
        validate(spec);
    } catch (const Error& e) {
        if (e.is_internal()) throw;
        return e.what();
    }
    return {};
}

bool is_zero_entry(const WalkCountMatrix& w, std::pair<int, int> at) { return w.at(at.first, at.second) == 0; }

bool all_positive(const WalkCountMatrix& w) {
    for (const BigInt& v : w.entries.values())
        if (v <= 0) return false;
    return true;
}

json pair_json(const std::optional<std::pair<int, int>>& p) {
    if (!p) return nullptr;
    return json::array({p->first, p->second});
}

template <class T>
json opt_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return json(*v);
}

json bigints_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(detail::bigint_json(x));
    return out;
}

json charpoly_row_object(const CharpolyRow& row) {
    json j;
    j["kind"] = "charpoly";
    j["table"] = row.table;
    j["spec"] = to_string(row.spec);
    j["n"] = row.spec.n;
    if (row.skip_reason) {
        j["skip_reason"] = *row.skip_reason;
        return j;
    }
    j["computed"] = to_string(row.computed);
    j["ldsg_checked"] = row.ldsg_checked;
    j["ldsg_agrees"] = row.ldsg_checked ? json(row.ldsg_agrees) : json(nullptr);
    if (row.ldsg_checked && !row.ldsg_agrees) j["ldsg"] = to_string(row.ldsg);
    j["closed_form"] = row.closed_form ? json(to_string(*row.closed_form)) : json(nullptr);
    j["charpoly_match"] = opt_json(row.charpoly_match());
    j["min_poly"] = to_string(row.minimal);
    j["min_poly_degree"] = row.minimal.degree();
    j["non_derogatory"] = row.non_derogatory;
    j["squarefree_Q"] = row.squarefree_Q;
    j["squarefree_F2"] = row.squarefree_F2;
    j["perron"] = {{"holds", row.perron.holds},
                   {"lhs", detail::bigint_json(row.perron.lhs)},
                   {"rhs", detail::bigint_json(row.perron.rhs)},
                   {"nonzero_constant", row.perron.nonzero_constant}};
    j["brauer"] = {{"form", to_string(row.brauer.form)},
                   {"a", bigints_json(row.brauer.a)},
                   {"sign", row.brauer.sign},
                   {"literal_clause_conflict", row.brauer.literal_clause_conflict},
                   {"detail", row.brauer.detail}};
    j["triangular_searched"] = row.triangular_searched;
    if (row.triangular) {
        json diag = json::array();
        for (auto [r, c] : row.triangular->diagonal) diag.push_back({r, c});
        j["triangular"] = {{"deleted_row", row.triangular->deleted_row},
                           {"deleted_col", row.triangular->deleted_col},
                           {"diagonal", diag}};
    } else {
        j["triangular"] = nullptr;
    }
    j["triangular_contradicted"] = row.triangular_contradicted;
    j["primitive"] = row.exponent.primitive;
    j["exponent"] = opt_json(row.exponent.exponent);
    j["witness"] = pair_json(row.exponent.witness);
    if (row.factorization) {
        const auto& f = *row.factorization;
        json found = json::array();
        for (auto [d, mult] : f.found) found.push_back({d, mult});
        j["factorization"] = {{"cubic", to_string(f.cubic)},
                              {"cubic_divides", f.cubic_divides},
                              {"cubic_remainder", to_string(f.cubic_remainder)},
                              {"cofactor", to_string(f.cofactor)},
                              {"found", found},
                              {"complete", f.complete},
                              {"claimed", f.claimed},
                              {"claimed_matches", f.claimed_matches},
                              {"distinct_roots", f.distinct_roots}};
    }
    return j;
}

json exponent_row_object(const ExponentRow& row) {
    json j;
    j["kind"] = "exponent";
    j["table"] = "exponents";
    j["spec"] = to_string(row.spec);
    j["n"] = row.spec.n;
    if (row.skip_reason) {
        j["skip_reason"] = *row.skip_reason;
        return j;
    }
    j["primitive"] = row.result.primitive;
    j["exponent"] = opt_json(row.result.exponent);
    j["witness"] = pair_json(row.result.witness);
    j["expected"] = opt_json(row.expected);
    j["match"] = opt_json(row.match());
    j["table_witness"] = pair_json(row.table_witness);
    j["table_witness_is_zero"] = opt_json(row.table_witness_is_zero);
    j["witness_exact_check"] = row.witness_exact_check;
    return j;
}

json summary_object(const TableSummary& s) {
    return {{"kind", "summary"},
            {"table", s.table},
            {"rows", s.rows},
            {"skipped", s.skipped},
            {"ldsg_checked", s.ldsg_checked},
            {"hard_failures", s.hard_failures},
            {"matches", s.matches},
            {"mismatches", s.mismatches},
            {"unasserted", s.unasserted},
            {"witness_zero", s.witness_zero},
            {"witness_nonzero", s.witness_nonzero},
            {"factorization_mismatches", s.factorization_mismatches},
            {"triangular_contradictions", s.triangular_contradictions}};
}

void run_jobs(std::vector<std::function<void()>>& jobs, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // The first failure in row order wins, whatever thread hit it first.
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string opt_text(const std::optional<T>& v, const std::string& none = "-") {
    if (!v) return none;
    std::ostringstream os;
    os << *v;
    return os.str();
}

std::string pair_text(const std::optional<std::pair<int, int>>& p) {
    if (!p) return "-";
    return "(" + std::to_string(p->first) + "," + std::to_string(p->second) + ")";
}

std::string match_text(const std::optional<bool>& m) {
    if (!m) return "-";
    return *m ? "match" : "MISMATCH";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::vector<std::string> charpoly_columns(const CharpolyRow& r) {
    if (r.skip_reason) return {r.table, to_string(r.spec), "skipped: " + *r.skip_reason, "", "", "", "", "", "", "", "", "", "", ""};
    std::string factor = "-";
    if (r.factorization) factor = r.factorization->claimed_matches ? "claimed set" : "differs from claimed set";
    return {r.table,
            to_string(r.spec),
            to_string(r.computed),
            r.closed_form ? to_string(*r.closed_form) : "-",
            match_text(r.charpoly_match()),
            r.ldsg_checked ? (r.ldsg_agrees ? "agrees" : "DISAGREES") : "not run",
            std::to_string(r.minimal.degree()),
            yes_no(r.non_derogatory),
            yes_no(r.squarefree_Q),
            yes_no(r.squarefree_F2),
            yes_no(r.perron.holds),
            std::string(to_string(r.brauer.form)),
            r.exponent.primitive ? opt_text(r.exponent.exponent) : "not primitive",
            factor};
}

const std::vector<std::string> kCharpolyHeader = {"table",          "spec",         "computed",   "closed_form",
                                                  "charpoly_match", "ldsg",         "min_degree", "non_derogatory",
                                                  "squarefree_Q",   "squarefree_F2", "perron",    "brauer",
                                                  "exponent",       "factorization"};

std::vector<std::string> exponent_columns(const ExponentRow& r) {
    if (r.skip_reason) return {to_string(r.spec), "skipped: " + *r.skip_reason, "", "", "", "", "", ""};
    return {to_string(r.spec),
            yes_no(r.result.primitive),
            opt_text(r.result.exponent),
            pair_text(r.result.witness),
            opt_text(r.expected),
            match_text(r.match()),
            pair_text(r.table_witness),
            r.table_witness_is_zero ? (*r.table_witness_is_zero ? "zero" : "NONZERO") : "-"};
}

const std::vector<std::string> kExponentHeader = {"spec",     "primitive", "exponent",      "witness",
                                                  "expected", "match",     "table_witness", "table_witness_entry"};

std::vector<std::string> summary_columns(const TableSummary& s) {
    return {s.table,
            std::to_string(s.rows),
            std::to_string(s.skipped),
            std::to_string(s.ldsg_checked),
            std::to_string(s.hard_failures),
            std::to_string(s.matches),
            std::to_string(s.mismatches),
            std::to_string(s.unasserted),
            std::to_string(s.witness_zero),
            std::to_string(s.witness_nonzero),
            std::to_string(s.factorization_mismatches),
            std::to_string(s.triangular_contradictions)};
}

const std::vector<std::string> kSummaryHeader = {"table",       "rows",    "skipped",    "ldsg_checked",
                                                 "hard_failures", "matches", "mismatches", "unasserted",
                                                 "witness_zero", "witness_nonzero", "factorization_mismatches",
                                                 "triangular_contradictions"};

void md_table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    os << '|';
    for (const auto& h : header) os << ' ' << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& r : rows) {
        os << '|';
        for (const auto& c : r) os << ' ' << md_cell(c) << " |";
        os << '\n';
    }
}

void csv_table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
        os << '\n';
    }
}

}  // namespace

std::string_view to_string(Table t) {
    switch (t) {
        case Table::cdc: return "cdc";
        case Table::cdf: return "cdf";
        case Table::cdw: return "cdw";
        case Table::derived: return "derived";
        case Table::complements: return "complements";
        case Table::exponents: return "exponents";
        case Table::all: return "all";
    }
    return "?";
}

std::optional<Table> table_from_string(std::string_view name) {
    for (Table t : {Table::cdc, Table::cdf, Table::cdw, Table::derived, Table::complements, Table::exponents, Table::all})
        if (to_string(t) == name) return t;
    return std::nullopt;
}

NRange default_range(Table t) {
    switch (t) {
        case Table::cdw: return {4, 14};
        case Table::exponents: return {10, 20};
        default: return {3, 14};
    }
}

NRange parse_range(const std::string& text) {
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) fail(ErrorKind::ParseError, "bad n-range '" + text + "', expected a..b");
        return v;
    };
    const auto dots = text.find("..");
    NRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo < 1 || r.hi < r.lo || r.hi > kMaxReportOrder)
        fail(ErrorKind::InvalidParameter, "n-range must satisfy 1 <= a <= b <= " + std::to_string(kMaxReportOrder));
    return r;
}

std::vector<FamilySpec> table_members(Table t, int n) {
    std::vector<FamilySpec> out;
    switch (t) {
        case Table::cdc: cdc_members(n, out); break;
        case Table::cdf:
            for (Family f : {Family::ADF, Family::PDF, Family::kDF, Family::HDF, Family::TDF}) out.push_back(plain(f, n));
            break;
        case Table::cdw:
            for (Family f : {Family::UDW, Family::ADW, Family::RADW, Family::kDW, Family::HDW}) out.push_back(plain(f, n));
            break;
        case Table::derived: derived_members(n, out); break;
        case Table::complements:
            for (Family f : {Family::DCn, Family::UDW}) {
                FamilySpec s = plain(f, n);
                s.complemented = true;
                out.push_back(s);
            }
            break;
        case Table::exponents: {
            for (Family f : {Family::ADF, Family::PDF, Family::kDF, Family::HDF, Family::ADW, Family::kDW, Family::TDF,
                             Family::RADW, Family::UDW, Family::HDW})
                out.push_back(plain(f, n));
            FamilySpec dcc = plain(Family::DCn, n);
            dcc.complemented = true;
            out.push_back(dcc);
            break;
        }
        case Table::all:
            for (Table each : kAllTables) {
                auto part = table_members(each, n);
                out.insert(out.end(), part.begin(), part.end());
            }
            break;
    }
    return out;
}

CharpolyRow analyse(const std::string& table, const FamilySpec& spec, int cap, int triangular_cap) {
    CharpolyRow row;
    row.table = table;
    row.spec = spec;
    if (std::string why = invalid_reason(spec); !why.empty()) {
        row.skip_reason = why;
        return row;
    }
    const Digraph d = build_family(spec);
    const int n = d.order();
    row.computed = charpoly_exact(d);
    if (n <= cap) {
        row.ldsg = charpoly_ldsg(d, cap);
        row.ldsg_checked = true;
        row.ldsg_agrees = row.ldsg == row.computed;
    }
    if (has_closed_form(spec)) row.closed_form = closed_form_charpoly(spec);

    row.minimal = minimal_polynomial(d);
    ensure(divrem(row.computed, row.minimal).remainder.is_zero(),
           "minimal polynomial does not divide the characteristic polynomial for " + to_string(spec));
    row.non_derogatory = row.minimal.degree() == n;
    row.squarefree_Q = is_squarefree(row.computed, Field::Q);
    row.squarefree_F2 = is_squarefree(row.computed, Field::F2);
    ensure(!row.squarefree_F2 || row.squarefree_Q, "squarefree over F2 but not over Q: " + to_string(spec));
    ensure(!row.squarefree_Q || row.non_derogatory, "distinct eigenvalues but derogatory: " + to_string(spec));
    if (n >= 2) {
        row.perron = perron_irreducible(row.computed);
        row.brauer = brauer_form(row.computed);
    }
    if (n <= triangular_cap) {
        row.triangular_searched = true;
        row.triangular = triangular_certificate(d, triangular_cap);
        row.triangular_contradicted = row.triangular.has_value() && !row.non_derogatory;
    }
    row.exponent = exponent(d);
    if ((spec.family == Family::ADW || spec.family == Family::RADW) && !spec.complemented && n % 2 == 1)
        row.factorization = cyclotomic_factorization(spec);
    return row;
}

ExponentRow analyse_exponent(const FamilySpec& spec) {
    ExponentRow row;
    row.spec = spec;
    if (std::string why = invalid_reason(spec); !why.empty()) {
        row.skip_reason = why;
        return row;
    }
    const Digraph d = build_family(spec);
    row.result = exponent(d);

    const int n = spec.n, k = spec.k();
    const bool odd = n % 2 == 1;
    auto expect = [&](int e, std::optional<std::pair<int, int>> w) {
        row.expected = e;
        row.table_witness = w;
    };
    if (spec.complemented) {
        if (spec.family == Family::DCn) expect(2, std::nullopt);
    } else if (spec.family == Family::ADF && odd && n >= 7) {
        expect(9, std::make_pair(n - 1, 3));
    } else if (spec.family == Family::ADF && n == 5) {
        expect(12, std::nullopt);
    } else if (n >= 10) {
        switch (spec.family) {
            case Family::PDF: expect(n, std::make_pair(n - 1, 2)); break;
            case Family::kDF: expect(odd ? k + 5 : k + 4, std::make_pair(k + 1, 2)); break;
            case Family::HDF: expect(n + 1, std::make_pair(2, n)); break;
            case Family::ADW: expect(odd ? 6 : 7, odd ? std::make_pair(n - 2, 2) : std::make_pair(n - 3, 2)); break;
            case Family::kDW: expect(odd ? 2 * k + 4 : 2 * k + 3, std::make_pair(k + 1, k + 2)); break;
            default: break;
        }
    }

    if (row.result.exponent) {
        const unsigned e = static_cast<unsigned>(*row.result.exponent);
        const WalkCountMatrix below = walk_count(d, e - 1);
        row.witness_exact_check = all_positive(walk_count(d, e)) &&
                                  (!row.result.witness || is_zero_entry(below, *row.result.witness));
        if (row.table_witness) row.table_witness_is_zero = is_zero_entry(below, *row.table_witness);
    }
    return row;
}

int VerificationReport::hard_failures() const {
    int total = 0;
    for (const auto& s : summary) total += s.hard_failures;
    return total;
}

VerificationReport verify(const VerifyOptions& options) {
    if (options.cap < 1) fail(ErrorKind::InvalidParameter, "enumeration cap must be positive");
    std::vector<Table> tables;
    if (options.table == Table::all)
        tables.assign(std::begin(kAllTables), std::end(kAllTables));
    else
        tables.push_back(options.table);

    VerificationReport report;
    std::vector<std::pair<std::string, FamilySpec>> charpoly_jobs;
    std::vector<FamilySpec> exponent_jobs;
    for (Table t : tables) {
        const NRange r = options.range.value_or(default_range(t));
        for (int n = r.lo; n <= r.hi; ++n)
            for (const FamilySpec& s : table_members(t, n)) {
                if (t == Table::exponents)
                    exponent_jobs.push_back(s);
                else
                    charpoly_jobs.emplace_back(std::string(to_string(t)), s);
            }
    }

    report.rows.resize(charpoly_jobs.size());
    report.exponent_rows.resize(exponent_jobs.size());
    std::vector<std::function<void()>> jobs;
    for (std::size_t i = 0; i < charpoly_jobs.size(); ++i)
        jobs.emplace_back([&, i] {
            report.rows[i] = analyse(charpoly_jobs[i].first, charpoly_jobs[i].second, options.cap, options.triangular_cap);
        });
    for (std::size_t i = 0; i < exponent_jobs.size(); ++i)
        jobs.emplace_back([&, i] { report.exponent_rows[i] = analyse_exponent(exponent_jobs[i]); });
    run_jobs(jobs, options.threads);

    for (Table t : tables) {
        TableSummary s;
        s.table = std::string(to_string(t));
        if (t == Table::exponents) {
            for (const auto& r : report.exponent_rows) {
                ++s.rows;
                if (r.skip_reason) {
                    ++s.skipped;
                    continue;
                }
                if (!r.witness_exact_check) ++s.hard_failures;
                if (auto m = r.match())
                    ++(*m ? s.matches : s.mismatches);
                else
                    ++s.unasserted;
                if (r.table_witness_is_zero) ++(*r.table_witness_is_zero ? s.witness_zero : s.witness_nonzero);
            }
        } else {
            for (const auto& r : report.rows) {
                if (r.table != s.table) continue;
                ++s.rows;
                if (r.skip_reason) {
                    ++s.skipped;
                    continue;
                }
                if (r.ldsg_checked) ++s.ldsg_checked;
                if (!r.ldsg_agrees) ++s.hard_failures;
                if (auto m = r.charpoly_match())
                    ++(*m ? s.matches : s.mismatches);
                else
                    ++s.unasserted;
                if (r.factorization && !r.factorization->claimed_matches) ++s.factorization_mismatches;
                if (r.triangular_contradicted) ++s.triangular_contradictions;
            }
        }
        report.summary.push_back(s);
    }
    return report;
}

std::optional<Format> format_from_string(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "md") return Format::md;
    return std::nullopt;
}

std::string charpoly_row_json(const CharpolyRow& row) { return charpoly_row_object(row).dump(); }
std::string exponent_row_json(const ExponentRow& row) { return exponent_row_object(row).dump(); }

std::string render(const VerificationReport& report, Format format) {
    std::ostringstream os;
    std::vector<std::vector<std::string>> cp, ex, sm;
    for (const auto& r : report.rows) cp.push_back(charpoly_columns(r));
    for (const auto& r : report.exponent_rows) ex.push_back(exponent_columns(r));
    for (const auto& s : report.summary) sm.push_back(summary_columns(s));

    switch (format) {
        case Format::json:
            for (const auto& r : report.rows) os << charpoly_row_json(r) << '\n';
            for (const auto& r : report.exponent_rows) os << exponent_row_json(r) << '\n';
            for (const auto& s : report.summary) os << summary_object(s).dump() << '\n';
            break;
        case Format::md:
            if (!cp.empty()) {
                os << "## Characteristic polynomials\n\n";
                md_table(os, kCharpolyHeader, cp);
                os << '\n';
            }
            if (!ex.empty()) {
                os << "## Exponents\n\n";
                md_table(os, kExponentHeader, ex);
                os << '\n';
            }
            os << "## Summary\n\n";
            md_table(os, kSummaryHeader, sm);
            break;
        case Format::csv:
            if (!cp.empty()) {
                csv_table(os, kCharpolyHeader, cp);
                os << '\n';
            }
            if (!ex.empty()) {
                csv_table(os, kExponentHeader, ex);
                os << '\n';
            }
            csv_table(os, kSummaryHeader, sm);
            break;
        case Format::text:
            for (const auto& r : cp) {
                os << r[1] << " [" << r[0] << "]";
                if (r[3].empty() && r[2].rfind("skipped", 0) == 0) {
                    os << ": " << r[2] << '\n';
                    continue;
                }
                for (std::size_t i = 2; i < r.size(); ++i) os << "\n  " << kCharpolyHeader[i] << ": " << r[i];
                os << '\n';
            }
            for (const auto& r : ex) {
                os << r[0] << " [exponents]";
                if (r[1].rfind("skipped", 0) == 0) {
                    os << ": " << r[1] << '\n';
                    continue;
                }
                for (std::size_t i = 1; i < r.size(); ++i) os << "\n  " << kExponentHeader[i] << ": " << r[i];
                os << '\n';
            }
            for (const auto& r : sm) {
                os << "summary " << r[0] << ':';
                for (std::size_t i = 1; i < r.size(); ++i) os << ' ' << kSummaryHeader[i] << '=' << r[i];
                os << '\n';
            }
            break;
    }
    return os.str();
}

}  // namespace dgs
