#pragma once

#include <string>
#include <vector>

#include "core/zeros.hpp"

namespace landaulab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool skipped = false;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;  // false if anything failed or was skipped
    bool quick = false;
    std::size_t zero_count = 0;
};

// Runs the verification suite against the supplied table: full mode needs
// 1e5 zeros, quick mode 1e4 with documented threshold relaxations. Criteria
// without coverage are reported as skipped (and the report does not pass).
// scratch_dir (created if missing) holds the determinism-check artifacts; an
// empty string skips that criterion.
VerifyReport run_verify(const ZeroTable& table, bool quick, unsigned threads,
                        const std::string& scratch_dir);

std::string report_to_json(const VerifyReport& report);

}  // namespace landaulab
