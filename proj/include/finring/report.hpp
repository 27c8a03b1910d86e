#pragma once

// Check results and their renderings. The machine rendering is a JSON
// document carrying, for every piece of evidence, the ring spec and the full
// certificate, so that `recheck_report` can re-verify it offline.

#include <string>
#include <vector>

#include "finring/certificate.hpp"
#include "finring/checker.hpp"
#include "finring/spec_doc.hpp"

namespace finring {

/// What a certificate is about: a ring, a semiring, or a ring viewed as a
/// Z_n-module together with a submodule (Howell rows in the certificate's subject).
enum class TargetKind { ring, semiring, module };

struct Evidence {
  TargetKind target = TargetKind::ring;
  Json spec;
  Certificate cert;
};

struct CheckResult {
  std::string check;
  bool passed = false;
  std::string verdict;  // short human summary ("true", "false", "order 32", ...)
  std::string note;     // failure reason or bound description
  std::uint64_t examined = 0;
  double duration_ms = 0;
  std::vector<Evidence> evidence;
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

Json element_to_json(const Element& e);
Element element_from_json(const Json& j);
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// Machine rendering; `with_durations = false` omits wall-clock fields.
Json report_to_json(const Report& r, bool with_durations = true);
Report report_from_json(const Json& j);
std::string render_text(const Report& r);
std::string render_machine(const Report& r, bool with_durations = true);

/// Rebuilds every target from its spec and re-verifies each certificate.
struct RecheckSummary {
  std::size_t total = 0;
  std::size_t ok = 0;
  std::vector<std::string> failures;  // "check: reason"
};
CheckOutcome recheck_evidence(const Evidence& e);
RecheckSummary recheck_report(const Report& r);

}  // namespace finring
