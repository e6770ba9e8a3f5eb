#pragma once

#include "bcls/bianchi.hpp"
#include "bcls/modmat.hpp"
#include "bcls/quadint.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// End-to-end classification driver: enumerate candidate levels (d, I),
// filter torsion, compute invariants, run the quotient tests, and reconcile
// against the embedded reference list.
namespace bcls::pipeline {

using quadint::AlgebraicInt;
using quadint::Int;
using quadint::QIdeal;

enum class Status { KnownLink, Generated, NotGenerated, TorsionExcluded, UnresolvedDesk };
std::string to_string(Status s);
std::optional<Status> status_from_string(const std::string& s);

struct CandidateRecord {
    long d = 0;
    QIdeal ideal;  // canonical up to conjugation
    std::optional<AlgebraicInt> generator;
    Int norm;
    Int order;  // |PSL(2, O_d/I)|
    std::optional<long> cusps;
    bool torsion = false;
    Status status = Status::UnresolvedDesk;
    std::vector<std::string> notes;
};

// the fields with trivial cuspidal cohomology
std::vector<long> admissible_fields();

// Candidate level bounds. Class number one: principal ideals with
// 2 <= norm <= h1_norm_max. Class number > 1: proper ideals containing a
// nonzero element of norm <= hplus_norm_max.
struct LevelBounds {
    long h1_norm_max = 35;    // |x| < 6
    long hplus_norm_max = 38;  // |x|^2 < 39
};

// deduplicated by canonical_up_to_conjugation, sorted by HNF
std::vector<QIdeal> candidate_levels(long d, const LevelBounds& bounds = {});

struct ConventionCount {
    LevelBounds bounds;
    long total = 0;    // candidates over all 14 fields, up to conjugation
    long torsion = 0;  // candidates whose congruence subgroup has torsion
    long net = 0;      // total - torsion
};

// Candidate counts under the plausible bound conventions (strict vs
// non-strict inequalities); torsion exclusion commutes with conjugation
// dedup here because every torsion level is self-conjugate.
std::vector<ConventionCount> convention_report();

struct ClassifyLimits {
    fpgroup::EnumLimits enum_limits{500'000, 30.0};
    fpgroup::Strategy strategy = fpgroup::Strategy::HltLookahead;
    size_t low_index_bound = 5;
    size_t group_bound = 1'000'000;
    bool run_quotient_test = true;
};

// Fills all invariants and reconciles with the reference list; a
// contradiction with the reference classification throws (hard failure),
// resource overflow degrades to UnresolvedDesk.
CandidateRecord classify(long d, const QIdeal& I, const ClassifyLimits& limits = {});

// --- embedded reference data -------------------------------------------------

struct RefEntry {
    long d;
    std::string ideal_text;  // generators, element syntax
    std::string provenance;
    QIdeal ideal;  // canonical form
};

const std::vector<RefEntry>& reference_links();  // the 48 classified pairs
const RefEntry& reference_nonlink();             // (2, <1+3w>): externally certified non-link

struct Table1Row {
    long d;
    std::string x_text;
    long norm;
    long order;
    long cusps;
};
const std::vector<Table1Row>& table1_reference();  // the 8 rows to re-derive

struct Table1Report {
    struct Row {
        Table1Row expected;
        Int norm, order;
        long cusps = 0;
        bool ok = false;
    };
    std::vector<Row> rows;
    bool all_match = false;
};
Table1Report table1_report();

// --- full runs and reports -----------------------------------------------------

// classify every candidate over all admissible fields; deterministic output
// order (by d, then canonical HNF) regardless of thread count
std::vector<CandidateRecord> run_all(const ClassifyLimits& limits, unsigned threads = 1);

enum class ReportFormat { Json, Csv, Text };
int schema_version();
void emit_report(const std::vector<CandidateRecord>& records, ReportFormat format, std::ostream& out);
std::vector<CandidateRecord> parse_report_json(std::istream& in);

}  // namespace bcls::pipeline
