#pragma once

// The reference suite: named checks reproducing every finite claim about the
// built-in algebras. Every ring a check touches is built from a ring-spec
// document, which is stored next to each certificate in the report.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "finring/report.hpp"

namespace finring {

struct SuiteOptions {
  std::string filter;        // substring of check names; empty runs everything
  std::string inject_fault;  // one of fault_names(); empty for none
  unsigned workers = 1;
};

/// Ring order cap for the bounded ideal-lattice checks.
inline constexpr std::uint64_t kSuiteIdealCap = 256;
/// Element cap for the quaternion equivalence scans (|H(a,b;Z_32)| = 2^20).
inline constexpr std::uint64_t kQuaternionScanCap = std::uint64_t{1} << 20;

class CheckContext {
 public:
  CheckContext(const SuiteOptions& opts, std::string name) : opts_(opts) { result_.check = std::move(name); }

  const SuiteOptions& options() const { return opts_; }
  /// Records a failed expectation; the first failure becomes the note.
  bool expect(bool condition, const std::string& what);
  void evidence(TargetKind target, const Json& spec, const Certificate& cert);
  void verdict(std::string v) { result_.verdict = std::move(v); }
  void note(const std::string& n);
  CheckResult& result() { return result_; }
  bool failed() const { return failed_; }

 private:
  const SuiteOptions& opts_;
  CheckResult result_;
  bool failed_ = false;
};

struct SuiteCheck {
  std::string name;
  int criterion = 0;  // acceptance criterion the check belongs to, 0 for extras
  std::function<void(CheckContext&)> run;
};

const std::vector<SuiteCheck>& reference_checks();
std::vector<std::string> fault_names();

/// Runs the matching checks in registration order. Unknown faults throw
/// std::invalid_argument.
Report run_reference_suite(const SuiteOptions& opts);
CheckResult run_check(const SuiteCheck& check, const SuiteOptions& opts);

/// Specs of the built-in corpus (same rings as ring_corpus()).
std::vector<Json> corpus_specs(const SuiteOptions& opts = {});
Json zn_spec(Residue n);
Json quaternion_spec(Residue n, Residue a, Residue b);
/// Z_n Q8, honouring the q8-table fault.
Json znq8_spec(Residue n, const SuiteOptions& opts = {});
/// Example 4.4 as explicit tables, honouring the semiring-table fault.
Json semiring_order5_spec(const SuiteOptions& opts = {});
/// A table-kind spec for a ring of order <= 64.
Json table_spec(const Ring& r);

}  // namespace finring
