#ifndef DGS_REPORT_HPP
#define DGS_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgs/distinct.hpp"
#include "dgs/exponents.hpp"
#include "dgs/families.hpp"
#include "dgs/poly_algorithms.hpp"
#include "dgs/spectra.hpp"

namespace dgs {

enum class Table { cdc, cdf, cdw, derived, complements, exponents, all };

std::string_view to_string(Table t);
std::optional<Table> table_from_string(std::string_view name);

struct NRange {
    int lo = 0;
    int hi = 0;
};

/// Default n-range per table: cdc/cdf/derived/complements 3..14, cdw 4..14,
/// exponents 10..20.
NRange default_range(Table t);

/// Parses "a..b" or a single "a".
NRange parse_range(const std::string& text);

/// Families reported under a table (all is not a single table).
std::vector<FamilySpec> table_members(Table t, int n);

struct CharpolyRow {
    std::string table;
    FamilySpec spec;
    std::optional<std::string> skip_reason;

    IntPolynomial computed;
    bool ldsg_checked = false;
    bool ldsg_agrees = true;
    IntPolynomial ldsg;

    std::optional<IntPolynomial> closed_form;

    IntPolynomial minimal;
    bool non_derogatory = false;
    bool squarefree_Q = false;
    bool squarefree_F2 = false;
    PerronCertificate perron;
    BrauerCertificate brauer;

    /// Absent above the triangular search cap.
    bool triangular_searched = false;
    std::optional<TriangularCertificate> triangular;
    /// A certificate was found yet the minimal polynomial has lower degree.
    bool triangular_contradicted = false;

    ExponentResult exponent;

    /// ADW / RADW of odd order only.
    std::optional<CyclotomicFactorization> factorization;

    std::optional<bool> charpoly_match() const {
        if (!closed_form) return std::nullopt;
        return *closed_form == computed;
    }
};

struct ExponentRow {
    FamilySpec spec;
    std::optional<std::string> skip_reason;
    ExponentResult result;
    std::optional<int> expected;
    /// (from, to) pair the table says has no walk of length exp - 1.
    std::optional<std::pair<int, int>> table_witness;
    /// Evaluated at the computed exponent, with exact big-integer powers.
    std::optional<bool> table_witness_is_zero;
    /// The computed witness, re-checked on the exact A^{e-1}.
    bool witness_exact_check = true;

    std::optional<bool> match() const {
        if (!expected) return std::nullopt;
        return result.exponent && *result.exponent == *expected;
    }
};

struct TableSummary {
    std::string table;
    int rows = 0;
    int skipped = 0;
    int ldsg_checked = 0;
    int hard_failures = 0;
    int matches = 0;
    int mismatches = 0;
    int unasserted = 0;
    int witness_zero = 0;
    int witness_nonzero = 0;
    int factorization_mismatches = 0;
    int triangular_contradictions = 0;
};

struct VerificationReport {
    std::vector<CharpolyRow> rows;
    std::vector<ExponentRow> exponent_rows;
    std::vector<TableSummary> summary;

    int hard_failures() const;
};

struct VerifyOptions {
    Table table = Table::all;
    /// Applies to every table; when absent each table uses its default range.
    std::optional<NRange> range;
    int cap = kDefaultEnumerationCap;
    int triangular_cap = kDefaultTriangularSearchCap;
    /// 0 picks the hardware concurrency. Row order never depends on it.
    unsigned threads = 0;
};

CharpolyRow analyse(const std::string& table, const FamilySpec& spec, int cap, int triangular_cap);
ExponentRow analyse_exponent(const FamilySpec& spec);

VerificationReport verify(const VerifyOptions& options);

enum class Format { text, json, csv, md };

std::optional<Format> format_from_string(std::string_view name);

std::string render(const VerificationReport& report, Format format);

// JSON objects used by the report and by the CLI.
std::string charpoly_row_json(const CharpolyRow& row);
std::string exponent_row_json(const ExponentRow& row);

}  // namespace dgs

#endif
