#pragma once

// Named end-to-end cases with frozen expected values, runnable from the CLI
// (`golden` subcommand). Each case recomputes a published expansion,
// evaluation, or product from scratch and compares exactly.

#include <string>
#include <vector>

namespace symchar::golden {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;  // diff text when failed
};

std::vector<std::string> case_names();

// filter: run only the named case ("" = all); perturb: deliberately corrupt
// every computed value first, as a self-test that the comparisons can fail
std::vector<CaseResult> run(const std::string& filter, bool perturb);

}  // namespace symchar::golden
