#pragma once

#include "orecode/config.hpp"

namespace orecode {

/// One verified quantity of a reproduction row.
struct CheckResult {
    std::string key;
    std::string computed;
    std::string expected;  ///< empty for unconditional checks
    bool pass = false;
};

struct RowReport {
    std::string label;
    std::vector<CheckResult> checks;
    std::string existing_code;  ///< displayed verbatim, never asserted
    std::string error;          ///< typed error that aborted the row, if any

    bool pass() const {
        if (!error.empty()) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct ReproReport {
    std::vector<RowReport> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass()) return false;
        return true;
    }
};

/// Runs the full pipeline for every config row: factorizations, printed
/// cofactor fidelity, dual containment, Gray image parameters, column-search
/// distance and quantum parameters. Rows run in parallel (ORECODE_THREADS)
/// and are reported in config order; per-row typed errors are captured in the
/// report and never abort other rows.
ReproReport reproduce(const ReproConfig& config);

/// Line-oriented `key = value` report. The timestamp header is suppressible
/// so identical configs produce byte-identical reports.
std::string format_report(const ReproReport& report, bool with_timestamp);

}  // namespace orecode
