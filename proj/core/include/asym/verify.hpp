#ifndef ASYM_VERIFY_HPP
#define ASYM_VERIFY_HPP

#include <string>
#include <vector>

namespace asym {

enum class Suite { quick, paper };

/// One verified claim: expected vs computed plus the numeric residual.
struct CheckLine {
    std::string claim;
    std::string expected;
    std::string computed;
    double residual = 0;
    bool pass = false;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    std::vector<CheckLine> lines;
    bool pass = false;
};

struct VerifyReport {
    Suite suite = Suite::quick;
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    double seconds = 0;
};

/// Runs the whole verification battery.  `quick` covers the small models and
/// finishes well under five seconds; `paper` runs every sweep at full range.
/// `fixtures_dir` must contain the reference graph files.
VerifyReport run_verify(Suite suite, const std::string& fixtures_dir, double tol = 1e-6);

std::string format_report(const VerifyReport& report);

}  // namespace asym

#endif
