/**
 * @file report.hpp
 * @brief Regression suite reproducing every published number the library can check.
 *
 * Rows are grouped into numbered criteria. A criterion passes when all its
 * rows pass and their total wall time stays within the criterion budget.
 */
#pragma once

#include "dgcalc/io.hpp"

#include <string>
#include <vector>

namespace dgcalc::report {

struct ReportRow {
    int criterion = 0;
    std::string id;
    /// Short description of the claim being reproduced.
    std::string anchor;
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0;
    /// Per-row budget in seconds; 0 when only the criterion budget applies.
    double limit = 0;
};

struct Criterion {
    int id = 0;
    std::string title;
    /// Budget for the sum of the row times.
    double limit = 0;
};

struct ReportOptions {
    /// Case-insensitive substring filter on row id, anchor and criterion title; empty runs everything.
    std::string only;
    int threads = 0;
    /// Skip the n = 5 conformal resolution.
    bool quick = false;
};

std::vector<Criterion> criteria();

/// Runs the suite. Rows that throw are reported as failures with the error text.
std::vector<ReportRow> run(const ReportOptions& opts = {});

struct CriterionResult {
    Criterion criterion;
    int rows = 0;
    int failed = 0;
    double seconds = 0;
    bool pass = false;
};

/// Aggregates rows per criterion; criteria without rows are omitted.
std::vector<CriterionResult> summarize(const std::vector<ReportRow>& rows);

std::string to_text(const std::vector<ReportRow>& rows);
/// Times are left out unless requested so that repeated runs give identical bytes.
io::Json to_json(const std::vector<ReportRow>& rows, bool timings = false);

}  // namespace dgcalc::report
