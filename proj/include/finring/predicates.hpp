#pragma once

// Decision procedures for structural ring properties. Every predicate returns
// a Certificate that the independent checker (checker.hpp) can re-verify.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/certificate.hpp"
#include "finring/ring.hpp"
#include "finring/subgroup.hpp"

namespace finring {

AdditiveSubgroup center(const Ring& r);
bool is_central(const Ring& r, const Element& x);

Certificate is_commutative(const Ring& r);

enum class CeVariant {
  nonunital,     // commutative, or every non-central a has central x with ax central and non-zero
  all_elements,  // every non-zero a has such an x
  unital,        // all_elements on a ring that must have a unit
};

enum class ScanMode { exhaustive, refute };

struct CeOptions {
  CeVariant variant = CeVariant::nonunital;
  ScanMode mode = ScanMode::exhaustive;
  std::uint64_t cap = 0;  // 0: default_element_cap()
  unsigned workers = 1;
  /// Candidates tried before the basis and the canonical order.
  std::vector<Element> priority;
};

const char* to_string(CeVariant v);
std::optional<CeVariant> parse_ce_variant(const std::string& s);

/// Throws std::invalid_argument for the unital variant on a non-unital ring and
/// CapExceeded when the scan would pass the cap without a verdict.
Certificate is_centrally_essential(const Ring& r, const CeOptions& opts = {});

Certificate is_essential_right_ideal(const Ring& r, const AdditiveSubgroup& i,
                                     std::uint64_t cap = default_element_cap());
Certificate is_semiprime(const Ring& r, std::uint64_t cap = default_element_cap());
Certificate is_reduced(const Ring& r, std::uint64_t cap = default_element_cap());
Certificate is_centrally_rational(const Ring& r, std::uint64_t cap = default_element_cap());

enum class Side { right, left, both };
const char* to_string(Side s);
Certificate is_strongly_bounded(const Ring& r, Side side, std::uint64_t cap = default_element_cap());

/// Largest two-sided ideal inside a one-sided ideal.
AdditiveSubgroup ideal_core(const AdditiveSubgroup& p);

struct MinimalRightIdeal {
  AdditiveSubgroup ideal;
  bool nilpotent = false;
  bool two_sided = false;
  bool central = false;
  std::optional<Element> idempotent;  // central e with I = eR, for non-nilpotent I
};

std::vector<MinimalRightIdeal> minimal_right_ideals(const Ring& r, std::optional<std::uint64_t> cap = {});
Certificate minimal_right_ideals_certificate(const Ring& r, std::optional<std::uint64_t> cap = {});

struct CentralMultiplier {
  Element c;
  Element y;  // x c, central and non-zero
  bool constructive = false;
};

/// For RQ8 in characteristic 2, multiplies by (1 - a^2) until the product
/// annihilates the fundamental ideal of Z(Q8); otherwise scans the center.
std::optional<CentralMultiplier> find_central_multiplier(const Ring& r, const Element& x);

Certificate center_certificate(const Ring& r);
Certificate idempotents_certificate(const Ring& r, std::uint64_t cap = default_element_cap());

}  // namespace finring
