// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion number ...]   (no arguments runs all of them)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../support/oracles.hpp"
#include "dgs/distinct.hpp"
#include "dgs/exponents.hpp"
#include "dgs/families.hpp"
#include "dgs/poly_algorithms.hpp"
#include "dgs/report.hpp"
#include "dgs/spectra.hpp"

using namespace dgs;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string summary;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 12) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0: no runtime target
    std::function<void(Outcome&)> run;
};

FamilySpec spec(Family f, int n) {
    FamilySpec s;
    s.family = f;
    s.n = n;
    return s;
}

bool valid(const FamilySpec& s) {
    try {
        validate(s);
        return true;
    } catch (const Error&) {
        return false;
    }
}

IntPolynomial mono(long c, int e) { return IntPolynomial::monomial(BigInt(c), e); }

std::string name(const FamilySpec& s) { return to_string(s); }

void oracle_equivalence(Outcome& o) {
    int family_checks = 0;
    for (int n = 3; n <= 12; ++n)
        for (Table t : {Table::cdc, Table::cdf, Table::cdw, Table::derived, Table::complements})
            for (const FamilySpec& s : table_members(t, n)) {
                if (!valid(s)) continue;
                const Digraph d = build_family(s);
                ++family_checks;
                o.check(charpoly_exact(d) == charpoly_ldsg(d), name(s) + ": exact and ldsg differ");
            }
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const Digraph d = oracle::random_digraph(rng, 1 + trial % 7, 0.4, trial % 3 != 0, 3);
        o.check(charpoly_exact(d) == charpoly_ldsg(d), "random digraph " + std::to_string(trial) + ": exact and ldsg differ");
    }
    o.summary = std::to_string(family_checks) + " family instances, 200 random digraphs";
}

void worked_example(Outcome& o) {
    const IntPolynomial expected = mono(1, 8) - mono(1, 5) - mono(1, 3) - mono(1, 1) - mono(1, 0);
    const Digraph d = build_family(spec(Family::DCn_i_nmi, 8));
    o.check(charpoly_exact(d) == expected, "exact method: " + to_string(charpoly_exact(d)));
    o.check(charpoly_ldsg(d) == expected, "ldsg method: " + to_string(charpoly_ldsg(d)));
    o.summary = to_string(expected);
}

void closed_form_identities(Outcome& o) {
    int checks = 0;
    auto expect = [&](const FamilySpec& s, const IntPolynomial& want) {
        ++checks;
        const IntPolynomial got = charpoly_exact(build_family(s));
        o.check(got == want, name(s) + ": got " + to_string(got) + ", want " + to_string(want));
    };
    for (int n = 5; n <= 14; ++n) {
        const int k = n / 2;
        IntPolynomial dc = mono(1, n) - mono(1, 0);
        for (int t = 1; t <= k - 1; ++t) dc -= mono(1, n - (2 * t + 1));
        expect(spec(Family::DCn_i_nmi, n), dc);

        for (int j = 2; j <= n; ++j) {
            FamilySpec z = spec(Family::Zn_loop, n);
            z.j = j;
            IntPolynomial want = mono(1, n) - mono(2, n - 1);
            for (int i = 0; i <= j - 3; ++i) want -= mono(1, i);
            expect(z, want);
        }

        expect(spec(Family::UDW, n), mono(1, n) - mono(1, 1));

        IntPolynomial pdf = mono(1, n);
        for (int i = 1; i <= n; ++i) pdf -= mono(1, n - i);
        expect(spec(Family::PDF, n), pdf);

        if (n % 2 == 0)
            expect(spec(Family::ADF, n), IntPolynomial::x() * charpoly_exact(build_family(spec(Family::ADF, n - 1))));
    }
    o.summary = std::to_string(checks) + " exact identities";
}

void complement_formulas(Outcome& o) {
    int checks = 0;
    for (int n = 5; n <= 14; ++n) {
        FamilySpec s = spec(Family::DCn, n);
        s.complemented = true;
        const IntPolynomial got = charpoly_exact(build_family(s));
        const IntPolynomial want = complement_closed_form(ComplementKind::DCc, n);
        ++checks;
        o.check(got == want, name(s) + ": got " + to_string(got) + ", formula " + to_string(want));
    }
    for (int n = 4; n <= 14; ++n) {
        FamilySpec s = spec(Family::UDW, n);
        s.complemented = true;
        const IntPolynomial got = charpoly_exact(build_family(s));
        const IntPolynomial want = complement_closed_form(ComplementKind::UDWc, n);
        ++checks;
        o.check(got == want, name(s) + ": got " + to_string(got) + ", formula " + to_string(want));
    }
    for (int n = 5; n <= 20; ++n) {
        FamilySpec s = spec(Family::DCn, n);
        s.complemented = true;
        const ExponentResult r = exponent(build_family(s));
        ++checks;
        o.check(r.exponent == 2, name(s) + ": exponent " + (r.exponent ? std::to_string(*r.exponent) : "undefined"));
    }
    o.summary = std::to_string(checks) + " checks";
}

void exponent_table(Outcome& o) {
    struct Expectation {
        FamilySpec s;
        int exp;
        std::optional<std::pair<int, int>> pair;
    };
    std::vector<Expectation> rows;
    for (int n = 10; n <= 20; ++n) {
        const int k = n / 2;
        const bool odd = n % 2 == 1;
        rows.push_back({spec(Family::PDF, n), n, std::make_pair(n - 1, 2)});
        rows.push_back({spec(Family::kDF, n), odd ? k + 5 : k + 4, std::make_pair(k + 1, 2)});
        rows.push_back({spec(Family::HDF, n), n + 1, std::make_pair(2, n)});
        rows.push_back({spec(Family::ADW, n), odd ? 6 : 7, odd ? std::make_pair(n - 2, 2) : std::make_pair(n - 3, 2)});
        rows.push_back({spec(Family::kDW, n), odd ? 2 * k + 4 : 2 * k + 3, std::make_pair(k + 1, k + 2)});
    }
    for (int n = 7; n <= 19; n += 2) rows.push_back({spec(Family::ADF, n), 9, std::make_pair(n - 1, 3)});
    rows.push_back({spec(Family::ADF, 5), 12, std::nullopt});

    std::set<std::string> bad_pairs;
    for (const Expectation& e : rows) {
        const Digraph d = build_family(e.s);
        const ExponentResult r = exponent(d);
        o.check(r.exponent == e.exp, name(e.s) + ": exponent " + (r.exponent ? std::to_string(*r.exponent) : "undefined") +
                                          ", want " + std::to_string(e.exp));
        if (!e.pair) continue;
        const WalkCountMatrix below = walk_count(d, static_cast<unsigned>(e.exp - 1));
        const BigInt entry = below.at(e.pair->first, e.pair->second);
        if (entry != 0) {
            std::ostringstream msg;
            msg << name(e.s) << ": A^" << e.exp - 1 << "(" << e.pair->first << "," << e.pair->second << ") = " << entry.get_str()
                << ", want 0 (reversed pair entry " << below.at(e.pair->second, e.pair->first).get_str() << ")";
            o.check(false, msg.str());
            bad_pairs.insert(std::string(to_string(e.s.family)));
        }
    }
    o.summary = std::to_string(rows.size()) + " exponents";
    if (!bad_pairs.empty()) {
        o.summary += "; nonzero listed pairs in";
        for (const auto& f : bad_pairs) o.summary += " " + f;
    }
}

void non_derogatory_suite(Outcome& o) {
    int squarefree_instances = 0;
    for (int n = 3; n <= 14; ++n)
        for (Table t : {Table::cdc, Table::cdf, Table::cdw, Table::derived, Table::complements})
            for (const FamilySpec& s : table_members(t, n)) {
                if (!valid(s)) continue;
                const Digraph d = build_family(s);
                if (!is_squarefree(charpoly_exact(d), Field::Q)) continue;
                ++squarefree_instances;
                o.check(is_non_derogatory(d), name(s) + ": squarefree but derogatory");
            }
    for (int k = 2; k <= 6; ++k) {
        FamilySpec odd = spec(Family::UDW, 2 * k + 1);
        odd.complemented = true;
        const Digraph d = build_family(odd);
        const IntPolynomial psi = charpoly_exact(d);
        const IntPolynomial mp = minimal_polynomial(d);
        o.check(!is_non_derogatory(d), name(odd) + ": expected derogatory");
        o.check(mp * IntPolynomial::x() == psi, name(odd) + ": minimal polynomial " + to_string(mp) + " is not psi/x");

        FamilySpec even = spec(Family::UDW, 2 * k);
        even.complemented = true;
        o.check(is_non_derogatory(build_family(even)), name(even) + ": expected non-derogatory");
    }
    o.summary = std::to_string(squarefree_instances) + " squarefree instances, UDWc k=2..6";
}

void distinctness(Outcome& o) {
    int checks = 0;
    auto gcd_one = [&](const FamilySpec& s, Field field) {
        ++checks;
        const GcdCertificate c = distinct_by_gcd(charpoly_exact(build_family(s)), field);
        o.check(c.squarefree && c.gcd == IntPolynomial::constant(1),
                name(s) + (field == Field::Q ? " over Q" : " over F2") + ": gcd " + to_string(c.gcd));
    };
    for (int n = 3; n <= 14; ++n) {
        for (int j = 1; j <= n / 2 - 1; ++j) {
            FamilySpec s = spec(Family::DCn_i_kpjpi, n);
            s.j = j;
            if (valid(s)) gcd_one(s, Field::Q);
        }
        for (int m = 3; m <= n - 1; ++m) {
            FamilySpec s = spec(Family::DCn_m, n);
            s.m = m;
            if (valid(s)) gcd_one(s, Field::Q);
        }
        FamilySpec z = spec(Family::Zn_loop, n);
        z.j = 3;
        if (valid(z)) gcd_one(z, Field::Q);
    }
    for (int n = 3; n <= 13; n += 2) {
        gcd_one(spec(Family::DCn_i_nmi, n), Field::F2);
        if (n >= 5) gcd_one(spec(Family::ADF, n), Field::F2);
    }
    for (int k = 2; k <= 8; ++k) {
        for (Family f : {Family::ADW, Family::RADW}) {
            const FamilySpec s = spec(f, 2 * k + 1);
            const IntPolynomial psi = charpoly_exact(build_family(s));
            const IntPolynomial cubic = mono(1, 3) - mono(f == Family::ADW ? 1 : 2, 1) - mono(k, 0);
            const DivRem qr = divrem(psi, cubic);
            ++checks;
            o.check(qr.remainder.is_zero(), name(s) + ": remainder " + to_string(qr.remainder) + " on division by " + to_string(cubic));
        }
    }
    o.summary = std::to_string(checks) + " checks";
}

void irreducibility(Outcome& o) {
    int perron = 0, brauer = 0, searched = 0;
    auto cross_check = [&](const FamilySpec& s, const IntPolynomial& f) {
        if (f.degree() > 6) return;
        ++searched;
        auto factor = oracle::small_factor(f, 3);
        o.check(!factor, name(s) + ": factor " + (factor ? to_string(*factor) : std::string()) + " found");
    };
    for (int n = 3; n <= 14; ++n) {
        const FamilySpec pdf = spec(Family::PDF, n);
        const IntPolynomial psi_pdf = charpoly_exact(build_family(pdf));
        ++brauer;
        o.check(brauer_form(psi_pdf).form == BrauerForm::FormF, name(pdf) + ": not FormF");
        cross_check(pdf, psi_pdf);
        for (int m = 2; m <= n + 3; ++m) {
            FamilySpec x = spec(Family::Xn_loops, n);
            x.m = m;
            if (!valid(x)) continue;
            const IntPolynomial psi = charpoly_exact(build_family(x));
            ++brauer;
            o.check(brauer_form(psi).form == BrauerForm::FormF, name(x) + ": not FormF");
            if (m > n) {
                ++perron;
                o.check(perron_irreducible(psi).holds, name(x) + ": Perron verdict false");
            }
            cross_check(x, psi);
        }
    }
    o.summary = std::to_string(perron) + " Perron, " + std::to_string(brauer) + " Brauer, " + std::to_string(searched) +
                " brute-force searches";
}

void mismatch_documentation(Outcome& o) {
    int mismatch_rows = 0;
    for (Table t : {Table::cdf, Table::cdw}) {
        VerifyOptions opts;
        opts.table = t;
        const VerificationReport report = verify(opts);
        o.check(report.hard_failures() == 0, std::string(to_string(t)) + ": hard failures");

        const std::string jsonl = render(report, Format::json);
        std::istringstream lines(jsonl);
        std::string line;
        int json_rows = 0, json_summaries = 0;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            o.check(!j.is_discarded(), "unparsable report line");
            if (j.is_discarded()) continue;
            if (j.value("kind", "") == "summary") {
                ++json_summaries;
            } else {
                ++json_rows;
                if (j.contains("charpoly_match") && j["charpoly_match"] == false)
                    o.check(j.contains("computed") && j.contains("closed_form") && !j["closed_form"].is_null(),
                            "mismatch row without both polynomials");
            }
        }

        int counted_rows = 0, counted_mismatch = 0, counted_match = 0, counted_unasserted = 0, counted_skipped = 0;
        for (const CharpolyRow& r : report.rows) {
            ++counted_rows;
            if (r.skip_reason) {
                ++counted_skipped;
                continue;
            }
            o.check(r.ldsg_agrees, to_string(r.spec) + ": methods disagree");
            if (auto m = r.charpoly_match()) {
                ++(*m ? counted_match : counted_mismatch);
                if (!*m) o.check(!r.closed_form->is_zero() && !r.computed.is_zero(), to_string(r.spec) + ": empty polynomial");
            } else {
                ++counted_unasserted;
            }
        }
        o.check(report.summary.size() == 1, "expected one summary per table");
        if (report.summary.size() == 1) {
            const TableSummary& s = report.summary.front();
            o.check(s.rows == counted_rows && s.skipped == counted_skipped && s.matches == counted_match &&
                        s.mismatches == counted_mismatch && s.unasserted == counted_unasserted,
                    std::string(to_string(t)) + ": summary disagrees with rows");
        }
        o.check(json_rows == counted_rows && json_summaries == 1, std::string(to_string(t)) + ": JSON lines disagree with rows");
        mismatch_rows += counted_mismatch;
    }
    o.summary = "cdf and cdw verified, " + std::to_string(mismatch_rows) + " documented closed-form mismatches";
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", 60, oracle_equivalence},
        {2, "worked example DC_8^(i,n-i)", 0, worked_example},
        {3, "closed-form identities 5<=n<=14", 0, closed_form_identities},
        {4, "complement formulas", 0, complement_formulas},
        {5, "exponent table 10<=n<=20", 30, exponent_table},
        {6, "non-derogatory suite", 0, non_derogatory_suite},
        {7, "distinctness methods", 0, distinctness},
        {8, "irreducibility criteria", 0, irreducibility},
        {9, "table-mismatch documentation", 0, mismatch_documentation},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds)
            o.check(false, "runtime " + std::to_string(seconds) + " s over the " + std::to_string(c.budget_seconds) + " s target");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << o.summary << ", " << timing
                  << ")\n";
        for (const auto& f : o.failures) std::cout << "      " << f << '\n';
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
