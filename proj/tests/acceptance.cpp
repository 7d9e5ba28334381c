// Acceptance runner: executes the full verification battery and prints one
// pass/fail line per criterion.  Exits non-zero if anything fails.

#include <iostream>
#include <string>

#include "asym/verify.hpp"

int main(int argc, char** argv) {
    const std::string fixtures = argc > 1 ? argv[1] : "fixtures";
    asym::VerifyReport report;
    try {
        report = asym::run_verify(asym::Suite::paper, fixtures, 1e-6);
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }

    for (const auto& c : report.criteria) {
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << c.title << "\n";
        if (!c.pass)
            for (const auto& l : c.lines)
                if (!l.pass)
                    std::cout << "        " << l.claim << ": expected " << l.expected
                              << ", computed " << l.computed << "\n";
    }
    std::cout << (report.all_pass ? "acceptance: all criteria passed"
                                  : "acceptance: FAILURES above")
              << " (" << report.seconds << " s)\n";
    return report.all_pass ? 0 : 1;
}
