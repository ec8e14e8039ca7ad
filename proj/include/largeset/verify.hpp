#ifndef LARGESET_VERIFY_HPP
#define LARGESET_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "largeset/boolean_topo.hpp"
#include "largeset/largeness.hpp"

namespace largeset {

// ---- independent brute-force oracles ----
// These deliberately avoid the production search paths: the decomposer
// enumerates representing letters directly from the words' support, and
// the clique oracle is a subset DP.

// Letters z_1..z_k with w_i^w_j = z_i^z_j for all pairs, found by trying
// every support letter as z_1 and deriving the rest; nothing if no
// representation exists.
std::optional<std::vector<int64_t>> two_words_brute_letters(const WordSystem& ws);

// Maximum letter-clique size by subset DP; |letters| <= 20.
int brute_max_letter_clique(const SetSpec& A, const std::vector<int64_t>& letters);

// ---- named verification suites ----

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, uint64_t seed);

// At least 20 catalog sets that are fat on their windows, paired with the
// pad used for syndeticity on that window. Shared by the
// fat-implies-syndetic suite and the acceptance harness.
struct FatFixture {
  SetSpec set;
  int pad = 0;
};
std::vector<FatFixture> catalog_fat_fixtures();

}  // namespace largeset

#endif
