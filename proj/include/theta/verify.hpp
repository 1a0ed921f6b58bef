#pragma once

#include <functional>
#include <string>
#include <vector>

#include "theta/families.hpp"

// Named, exhaustive desk-scale verification suites for the combinatorial
// statements the library implements.  Every suite enumerates its whole
// declared domain (no sampling except the seeded random-symbol suites) and
// reports counterexamples verbatim.

namespace theta {

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string suite;
    Int max_n = 0;
    Int cases = 0;
    std::vector<SuiteFailure> failures;
    double wall_ms = 0.0;
    std::vector<std::string> notes;  // model-boundary remarks, q-dependent caveats

    bool passed() const { return failures.empty(); }
};

// Suite ids; run_suite("…") dispatches, suite_names() lists them.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, Int max_n);
std::vector<SuiteReport> run_all_suites(Int max_n);

// Independent count of |enumerate_symbols(family)|: sum over admissible
// defects of the number of bipartitions filling the rank slack, with the
// bipartition counts from a partition-number table rather than the
// enumerator.
Int counting_oracle(const GroupFamily& family);

}  // namespace theta
