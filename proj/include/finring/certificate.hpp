#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

enum class CertMode { exhaustive, refutation };

/// Machine-checkable outcome of a predicate. `witness` holds the refuting
/// elements (or the subject of a positive query), `multipliers` the central
/// multipliers behind a positive centrally-essential verdict, `subject` the
/// generators of the subgroup a property was asked about and `families`
/// any list of subgroups returned (each by generators).
struct Certificate {
  std::string property;
  bool verdict = false;
  CertMode mode = CertMode::exhaustive;
  std::string variant;
  std::uint64_t examined = 0;
  std::vector<Element> witness;
  std::vector<Element> multipliers;
  std::vector<Element> subject;
  std::vector<std::vector<Element>> families;
  std::vector<std::string> labels;
  std::optional<std::uint64_t> bound;
  std::string detail;
};

inline const char* to_string(CertMode m) { return m == CertMode::exhaustive ? "exhaustive" : "refutation"; }

}  // namespace finring
