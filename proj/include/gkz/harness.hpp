#pragma once

// Curve ingestion, table reproduction, conjecture checks and report
// rendering.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gkz/curve.hpp"
#include "gkz/reference_tables.hpp"
#include "gkz/traces.hpp"

namespace gkz {

class IngestError : public std::runtime_error {
public:
    IngestError(const std::string& source, std::size_t line, const std::string& msg)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

struct CurveRecord {
    std::string label;  // e.g. 43A1
    std::int64_t level = 0;
    WeierstrassModel model{0, 0, 1, 0, 0};
    RationalPoint generator;
    std::optional<int> sign_hint;
    std::optional<int> manin_override;
    std::size_t line = 0;

    /// The isogeny-class part of the label: 43A1 -> 43A.
    std::string class_label() const;
};

/// label N a1 a2 a3 a4 a6 gen_x gen_y [sign_hint [manin_override]],
/// whitespace separated, '#' starts a comment. Each record is checked for
/// prime N, minimality, |disc| = N, generator on the curve and trivial
/// torsion; the first violation throws IngestError naming the line.
std::vector<CurveRecord> parse_curves(std::istream& in, const std::string& source = "<input>");
std::vector<CurveRecord> ingest(const std::string& path);

/// Finds "43A1" or "43A" (first curve of the class).
const CurveRecord* find_curve(const std::vector<CurveRecord>& records, std::string_view label);

/// Whether a curve belongs to table 1, 2 or 3 by N mod 4 and the parity of a_E(2).
bool in_table(int which, std::int64_t level, long a2);

/// beta values a curve contributes to the tables and conjectures:
/// N = 3 (mod 4): beta_{-N}, beta_{-4N}; N = 1 (mod 4): beta_{-4}, beta_{-4N}.
struct CurveBetas {
    std::string label;
    std::int64_t level = 0;
    long a2 = 0;
    std::optional<BetaRecord> minus_n;
    std::optional<BetaRecord> minus_4n;
    std::optional<BetaRecord> minus_4;
    double l_value = 0;  // L(E,1) under root number -1
    std::string failure;  // set when the curve is excluded before any trace

    bool ok() const;
    /// Failure messages of the curve and of its records.
    std::string failures() const;
};

constexpr double kRootNumberTolerance = 1e-20;

CurveBetas compute_curve_betas(const CurveRecord& rec, mp::Bits bits);

/// compute_curve_betas over all records, in input order, using up to
/// `jobs` threads (0 = hardware concurrency).
std::vector<CurveBetas> compute_all_betas(const std::vector<CurveRecord>& records, mp::Bits bits,
                                          unsigned jobs = 0);

struct TableRow {
    std::string label;  // class label, e.g. 43A
    std::int64_t level = 0;
    std::optional<long> first;   // a_E(2) or beta_{-4}
    std::optional<long> second;  // beta_{-N} or beta_{-4N}
    std::optional<ReferenceRow> paper;
    bool mismatch = false;
    std::string failure;
    CurveBetas betas;
};

struct TableReport {
    int which = 0;
    mp::Bits precision = 0;
    std::vector<TableRow> rows;
    std::size_t mismatches = 0;
    std::size_t failures = 0;
    std::size_t even = 0;  // parity of the second column over computed rows
    std::size_t odd = 0;
};

/// Rows for the curves of `records` in the table's class, input order.
TableReport run_table(int which, const std::vector<CurveRecord>& records, mp::Bits bits,
                      std::optional<std::int64_t> max_n = std::nullopt, unsigned jobs = 0);
TableReport build_table(int which, const std::vector<CurveBetas>& betas);

enum class Status { holds, fails, skipped };
std::string to_string(Status s);

struct Verdict {
    std::string label;
    Status status = Status::skipped;
    std::string detail;
};

struct ConjectureReport {
    std::string id;  // c1, c2, c3, c4, lemma, theorem
    std::string title;
    std::vector<Verdict> verdicts;
    std::map<std::string, long> stats;
    std::vector<std::string> notes;

    std::size_t count(Status s) const;
    bool passed() const { return count(Status::fails) == 0; }
};

const std::vector<std::string>& conjecture_ids();

ConjectureReport check_conjecture(std::string_view id, const std::vector<CurveRecord>& records,
                                  const std::vector<CurveBetas>& betas);
ConjectureReport check_conjecture(std::string_view id, const std::vector<CurveRecord>& records, mp::Bits bits,
                                  unsigned jobs = 0);
std::vector<ConjectureReport> check_conjectures(const std::vector<CurveRecord>& records, mp::Bits bits,
                                                unsigned jobs = 0);

/// Rows printed in the lemma's proof, in print order (the same order as
/// mod2_table()).
const std::vector<Mod2Row>& published_mod2_table();

struct LemmaReport {
    std::vector<Mod2Row> table;
    bool table_matches = false;
    bool a1_parity_holds = false;        // a(2) even implies a1 even
    DiscMod8Report disc;
    bool a1_even_a3_odd_disc_is_5 = false;  // disc = 5 (mod 8) whenever a1 even, a3 odd
    bool chain_holds = false;
    std::vector<std::string> chain;
};

LemmaReport lemma_report();

enum class Format { tsv, json, paper };
Format parse_format(std::string_view s);

std::string render(const BetaRecord& rec, Format f);
std::string render(const TableReport& t, Format f);
std::string render(const ConjectureReport& r, Format f);
std::string render(const LemmaReport& r, Format f);

}  // namespace gkz
