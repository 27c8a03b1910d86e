#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finring {

/// A structure failed one of its defining axioms. `witness` holds the
/// element indices (or basis indices) that exhibit the failure.
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::uint64_t> witness, const std::string& detail = {})
      : std::runtime_error(format(axiom, witness, detail)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<std::uint64_t>& witness() const { return witness_; }

 private:
  static std::string format(const std::string& axiom, const std::vector<std::uint64_t>& w, const std::string& detail) {
    std::string s = "axiom violated: " + axiom + " at (";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
    s += ")";
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  std::string axiom_;
  std::vector<std::uint64_t> witness_;
};

/// An enumeration would exceed the configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t needed, std::uint64_t cap)
      : std::runtime_error(what + ": needs " + std::to_string(needed) + " elements, cap is " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::uint64_t needed() const { return needed_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

/// Default element cap for exhaustive scans; FINRING_CAP overrides it.
std::uint64_t default_element_cap();

}  // namespace finring
