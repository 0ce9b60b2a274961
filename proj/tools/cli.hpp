#pragma once

#include <iosfwd>
#include <string>

namespace monomial::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;      // a queried predicate came out false
inline constexpr int kInputError = 2;    // parse, precondition or usage error
inline constexpr int kInconsistent = 3;  // classifier and oracle disagree

inline constexpr const char* kBudgetEnv = "MONOMIAL_BUDGET";

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Location of the bundled n = 4 Gorenstein family fixture.
std::string default_families_path();

}  // namespace monomial::cli
