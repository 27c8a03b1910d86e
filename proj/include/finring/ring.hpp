#pragma once

// Finite, possibly non-unital rings.
//
// A ring is either a StructureRing (free Z_n-module of rank r with structure
// constants e_i e_j = sum_k c[i][j][k] e_k) or a TableRing (explicit Cayley
// tables). Both expose the same element interface: an Element is a
// coefficient vector mod n, or a one-entry vector holding the table index.
// Element indices follow the canonical order (lexicographic on coefficient
// vectors, first coefficient most significant).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finring/errors.hpp"
#include "finring/howell.hpp"
#include "finring/modular.hpp"

namespace finring {

struct Element {
  std::vector<Residue> coeffs;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class RingKind { structure, table };

class GroupTable;

/// Basis map of a group ring: basis index = group_index * coeff_rank + coeff_basis_index.
struct GroupRingInfo {
  std::shared_ptr<const GroupTable> group;
  std::size_t coeff_rank = 1;
  bool coeff_unital = true;
  std::vector<Residue> coeff_one;  // coefficients of 1 in the coefficient ring, if unital
};

inline constexpr std::uint32_t kMaxTableOrder = 2048;

class Ring {
 public:
  /// Validates associativity of the structure constants (rank^3 layout
  /// c[(i*rank + j)*rank + k]) and detects a unit.
  static Ring from_structure(Residue modulus, std::size_t rank, std::vector<Residue> constants,
                             std::string name = {});

  /// Validates every ring axiom; `one`, when given, is checked.
  static Ring from_tables(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul, std::uint32_t zero,
                          std::optional<std::uint32_t> one, std::string name = {});

  RingKind kind() const;
  bool is_structure() const { return kind() == RingKind::structure; }
  const std::string& name() const;
  Ring renamed(std::string name) const;

  Index order() const;
  /// Least k > 0 with k*x = 0 for all x.
  std::uint64_t characteristic() const;
  bool unital() const;
  const std::optional<Element>& one() const;

  // structure-ring data (modulus() and rank() are 0/1 for table rings)
  Residue modulus() const;
  std::size_t rank() const;
  Residue constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Residue>& constants() const;

  // table-ring data
  std::uint32_t table_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t table_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t table_neg(std::uint32_t a) const;
  std::uint32_t table_zero() const;

  /// Elements whose additive span is the whole ring (the basis, for structure rings).
  const std::vector<Element>& additive_generators() const;
  Element basis(std::size_t i) const;

  Element zero() const;
  bool is_zero(const Element& a) const;
  bool contains(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(std::int64_t k, const Element& a) const;
  Element power(const Element& a, std::uint64_t k) const;  // k >= 1

  /// Raw structure-ring product on coefficient spans (no allocation).
  void mul_into(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const;

  Index index_of(const Element& a) const;
  Index index_of(std::span<const Residue> coeffs) const;
  Element element_at(Index i) const;

  /// Matrix whose row i holds e_i * c (structure rings); x -> x*c is x * M.
  Matrix right_mult_matrix(const Element& c) const;
  /// Row i holds c * e_i; x -> c*x is x * M.
  Matrix left_mult_matrix(const Element& c) const;
  /// r x r^2 matrix D with x central iff x * D = 0 (structure rings).
  const Matrix& commutator_matrix() const;

  const GroupRingInfo* group_info() const;
  Ring with_group_info(GroupRingInfo info) const;

  /// Identity of the shared representation; copies of a Ring compare equal.
  const void* id() const { return impl_.get(); }
  friend bool operator==(const Ring& a, const Ring& b) { return a.impl_ == b.impl_; }

  struct Impl;

 private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Ring from_tables_unchecked(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul,
                                    std::uint32_t zero, std::string name);
  friend Ring to_table_ring(const Ring&);
  friend Ring direct_sum(const Ring&, const Ring&);

  std::shared_ptr<const Impl> impl_;
};

Ring make_zn(Residue n);
Ring make_structure_ring(Residue modulus, std::size_t rank, std::vector<Residue> constants, std::string name = {});
Ring make_table_ring(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul, std::uint32_t zero,
                     std::optional<std::uint32_t> one = std::nullopt, std::string name = {});
/// Z_n with identically zero multiplication.
Ring make_zero_multiplication_ring(Residue n);
Ring direct_sum(const Ring& r, const Ring& s);
/// Cayley-table copy of a ring of order <= kMaxTableOrder.
Ring to_table_ring(const Ring& r);

/// Coefficient helper: Element with the given residues reduced mod n.
Element make_element(const Ring& r, std::initializer_list<std::int64_t> coeffs);
Element make_element(const Ring& r, std::span<const std::int64_t> coeffs);

std::string to_string(const Ring& r, const Element& a);

}  // namespace finring
