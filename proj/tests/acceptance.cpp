/**
 * @file acceptance.cpp
 * @brief Acceptance run: one PASS/FAIL line per criterion, then the row details.
 *
 * Budgets per criterion live in report::criteria(); a row also fails when it
 * exceeds its own budget. Pass a filter string as the first argument to run a
 * subset.
 */
#include "dgcalc/report.hpp"

#include <cstdio>
#include <iostream>

int main(int argc, char** argv)
{
    dgcalc::report::ReportOptions opts;
    if (argc > 1) opts.only = argv[1];
    const auto rows = dgcalc::report::run(opts);
    const auto results = dgcalc::report::summarize(rows);
    bool all = true;
    for (const auto& c : results) {
        std::printf("criterion %2d: %s  %-46s %d/%d rows  %.2fs (budget %.0fs)\n", c.criterion.id,
                    c.pass ? "PASS" : "FAIL", c.criterion.title.c_str(), c.rows - c.failed, c.rows, c.seconds,
                    c.criterion.limit);
        all = all && c.pass;
    }
    std::cout << "\n" << dgcalc::report::to_text(rows);
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
    return all ? 0 : 1;
}
