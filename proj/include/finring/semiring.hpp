#pragma once

// Finite semirings by Cayley tables: commutative associative addition with
// identity 0, associative multiplication, two-sided distributivity and an
// absorbing zero. Additive inverses are not required.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/certificate.hpp"
#include "finring/checker.hpp"
#include "finring/ring.hpp"

namespace finring {

class Semiring {
 public:
  using Elem = std::uint32_t;

  /// Validates every axiom; throws AxiomViolation naming the axiom and witness.
  Semiring(std::vector<Elem> add, std::vector<Elem> mul, Elem zero, std::optional<Elem> one = std::nullopt,
           std::vector<std::string> labels = {}, std::string name = {});

  Elem order() const { return m_; }
  Elem add(Elem a, Elem b) const { return add_[std::size_t{a} * m_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t{a} * m_ + b]; }
  Elem zero() const { return zero_; }
  std::optional<Elem> one() const { return one_; }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

 private:
  Elem m_;
  std::vector<Elem> add_, mul_;
  Elem zero_;
  std::optional<Elem> one_;
  std::vector<std::string> labels_;
  std::string name_;
};

Semiring make_semiring(std::vector<Semiring::Elem> add, std::vector<Semiring::Elem> mul, Semiring::Elem zero,
                       std::optional<Semiring::Elem> one = std::nullopt, std::vector<std::string> labels = {},
                       std::string name = {});

std::vector<Semiring::Elem> semiring_center(const Semiring& s);
Certificate semiring_center_certificate(const Semiring& s);
Certificate is_commutative_semiring(const Semiring& s);
/// Commutative, or every non-central a has central x != 0 with ax central and non-zero.
Certificate is_ce_semiring(const Semiring& s);
/// For distinct a, b some x has a + x = b or b + x = a.
Certificate is_semisubtractive(const Semiring& s);

/// S = {0, 1, a, b, c} at indices 0..4.
Semiring example_order5();
/// {0, 1} with 1 + 1 = 1.
Semiring boolean_semiring();
/// {0, u, v, w}: join semilattice with u + v = w and zero multiplication.
Semiring diamond_semiring();
/// The ring's tables viewed as a semiring (same element indices).
Semiring ring_as_semiring(const Ring& r);

CheckOutcome recheck(const Semiring& s, const Certificate& cert);

}  // namespace finring
