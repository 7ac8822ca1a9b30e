#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dgs/distinct.hpp"
#include "dgs/report.hpp"

using namespace dgs;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

FamilySpec spec(const std::string& text) { return parse_family_spec(text); }

std::vector<nlohmann::json> lines(const std::string& jsonl) {
    std::vector<nlohmann::json> out;
    std::istringstream in(jsonl);
    for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("gcd certificates") {
    GcdCertificate q = distinct_by_gcd(charpoly_exact(build_family(spec("family=DCn_m n=8 m=5"))), Field::Q);
    CHECK(q.squarefree);
    CHECK(q.gcd == P("1"));
    CHECK(q.derivative == derivative(q.f));

    GcdCertificate rep = distinct_by_gcd(P("x^5 - 2x^4"), Field::Q);
    CHECK_FALSE(rep.squarefree);
    CHECK(rep.gcd == P("x^3"));

    GcdCertificate f2 = distinct_by_gcd(charpoly_exact(build_family(spec("family=ADF n=7"))), Field::F2);
    CHECK(f2.squarefree);
    CHECK_FALSE(f2.degree_dropped);

    GcdCertificate dropped = distinct_by_gcd(P("2x^3 + x + 1"), Field::F2);
    CHECK(dropped.degree_dropped);
    CHECK_FALSE(dropped.squarefree);
}

TEST_CASE("cyclotomic factorization of the alternating wheels") {
    CyclotomicFactorization f = cyclotomic_factorization(spec("family=ADW n=11"));
    CHECK(f.cubic == P("x^3 - x - 5"));
    CHECK(f.cubic_divides);
    CHECK(f.cubic_remainder.is_zero());
    CHECK(f.complete);
    CHECK(f.found == std::vector<std::pair<unsigned, int>>{{5, 1}, {10, 1}});
    CHECK(f.claimed == std::vector<unsigned>{11, 22});
    CHECK_FALSE(f.claimed_matches);
    CHECK(f.distinct_roots);
    CHECK(f.cubic * f.cofactor == f.polynomial);

    CyclotomicFactorization r = cyclotomic_factorization(spec("family=RADW n=7"));
    CHECK(r.cubic == P("x^3 - 2x - 3"));
    CHECK(r.cubic_divides);
    CHECK(r.complete);

    CHECK_THROWS_AS(cyclotomic_factorization(spec("family=ADW n=10")), Error);
    CHECK_THROWS_AS(cyclotomic_factorization(spec("family=PDF n=7")), Error);
}

TEST_CASE("ranges and tables") {
    CHECK(parse_range("3..14").lo == 3);
    CHECK(parse_range("3..14").hi == 14);
    CHECK(parse_range("8").lo == 8);
    CHECK(parse_range("8").hi == 8);
    CHECK_THROWS_AS(parse_range("9..3"), Error);
    CHECK_THROWS_AS(parse_range("a..b"), Error);
    CHECK_THROWS_AS(parse_range("0..3"), Error);
    CHECK(default_range(Table::cdw).lo == 4);
    CHECK(default_range(Table::exponents).hi == 20);
    CHECK(table_from_string("cdf") == Table::cdf);
    CHECK_FALSE(table_from_string("xyz").has_value());
}

TEST_CASE("verify the chorded cycles at n = 8") {
    VerifyOptions opt;
    opt.table = Table::cdc;
    opt.range = NRange{8, 8};
    VerificationReport r = verify(opt);
    CHECK(r.hard_failures() == 0);
    bool seen = false;
    for (const auto& row : r.rows)
        if (row.spec == spec("family=DCn_i_nmi n=8")) {
            seen = true;
            CHECK(row.charpoly_match() == true);
            CHECK(row.ldsg_checked);
            CHECK(row.non_derogatory);
        }
    CHECK(seen);
    REQUIRE(r.summary.size() == 1);
    CHECK(r.summary[0].rows == int(r.rows.size()));
    CHECK(r.summary[0].matches + r.summary[0].mismatches + r.summary[0].unasserted + r.summary[0].skipped ==
          r.summary[0].rows);
}

TEST_CASE("report output is deterministic and consistent") {
    VerifyOptions opt;
    opt.table = Table::all;
    opt.range = NRange{3, 6};
    opt.threads = 4;
    VerificationReport a = verify(opt);
    opt.threads = 1;
    VerificationReport b = verify(opt);
    const std::string ja = render(a, Format::json);
    CHECK(ja == render(b, Format::json));

    int skipped = 0, rows = 0, exp_rows = 0;
    for (const auto& j : lines(ja)) {
        const std::string kind = j["kind"];
        if (kind == "summary") continue;
        ++(kind == "exponent" ? exp_rows : rows);
        if (j.contains("skip_reason")) {
            ++skipped;
            continue;
        }
        if (kind == "charpoly" && j["charpoly_match"].is_boolean() && !j["charpoly_match"].get<bool>()) {
            CHECK(j["closed_form"].is_string());
            CHECK(j["computed"].is_string());
        }
    }
    CHECK(rows == int(a.rows.size()));
    CHECK(exp_rows == int(a.exponent_rows.size()));
    int summary_skipped = 0;
    for (const auto& s : a.summary) summary_skipped += s.skipped;
    CHECK(summary_skipped == skipped);

    CHECK(render(a, Format::md).find("| table | spec |") != std::string::npos);
    CHECK(render(a, Format::csv).find("table,spec,computed") == 0);
    CHECK(render(a, Format::text).find("summary cdc:") != std::string::npos);
}

TEST_CASE("skipped rows carry the validation message") {
    CharpolyRow row = analyse("cdw", spec("family=RADW n=6"), 12, 10);
    REQUIRE(row.skip_reason.has_value());
    CHECK(row.skip_reason->find("odd") != std::string::npos);
    ExponentRow er = analyse_exponent(spec("family=RADW n=12"));
    CHECK(er.skip_reason.has_value());
}

TEST_CASE("exponent rows") {
    ExponentRow adf = analyse_exponent(spec("family=ADF n=11"));
    CHECK(adf.expected == 9);
    CHECK(adf.match() == true);
    CHECK(adf.table_witness == std::make_pair(10, 3));
    CHECK(adf.table_witness_is_zero == true);
    CHECK(adf.witness_exact_check);

    ExponentRow tdf = analyse_exponent(spec("family=TDF n=12"));
    CHECK_FALSE(tdf.expected.has_value());
    CHECK_FALSE(tdf.match().has_value());
}
