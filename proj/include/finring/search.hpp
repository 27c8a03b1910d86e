#pragma once

// Counterexample search for the question whether a nilpotent minimal ideal of
// a centrally essential ring lies in the center. Finding nothing is a report
// of the searched bounds, not a verdict.

#include <cstdint>
#include <string>
#include <vector>

#include "finring/report.hpp"
#include "finring/subgroup.hpp"

namespace finring {

struct SearchOptions {
  std::string family = "znq8";  // znq8 | zn | quaternion | corpus
  Residue max_param = 4;        // largest n in the family
  std::uint64_t cap = 0;        // element cap per instance, 0: default_element_cap()
  unsigned workers = 1;
};

std::vector<std::string> search_families();

/// Minimal two-sided ideals. A minimal ideal I has pI = 0 for some prime p,
/// so only principal ideals of p-torsion elements are generated.
std::vector<AdditiveSubgroup> minimal_ideals(const Ring& r, std::uint64_t cap = default_element_cap());

/// One check per instance: CE verdict, nilpotent minimal ideals and their
/// central containment. Counterexamples carry a "noncentral-minimal-ideal"
/// certificate; instances over the cap are reported and skipped.
Report run_search(const SearchOptions& opts);

/// Number of counterexamples in a search report.
std::size_t counterexamples(const Report& r);

}  // namespace finring
