#pragma once

// Additive subgroups of finite rings and the ideal machinery built on them:
// generated ideals (non-unital convention: the right ideal generated by a is
// Za + aR), annihilators, nilpotency, idempotents and bounded ideal lattices.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "finring/howell.hpp"
#include "finring/ring.hpp"

namespace finring {

enum class IdealKind { right, left, two_sided };

inline constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 24;

/// Visits every element of `r` in canonical order as (index, coefficients).
template <class F>
void for_each_element(const Ring& r, F&& visit) {
  if (!r.is_structure()) {
    for (Index i = 0; i < r.order(); ++i) {
      const Residue c = static_cast<Residue>(i);
      visit(i, std::span<const Residue>(&c, 1));
    }
    return;
  }
  const std::size_t k = r.rank();
  const Residue n = r.modulus();
  std::vector<Residue> coeffs(k, 0);
  for (Index i = 0; i < r.order(); ++i) {
    visit(i, std::span<const Residue>(coeffs));
    for (std::size_t p = k; p-- > 0;) {
      if (++coeffs[p] < n) break;
      coeffs[p] = 0;
    }
  }
}

class AdditiveSubgroup {
 public:
  /// Smallest additive subgroup containing `seed`.
  AdditiveSubgroup(Ring ring, const std::vector<Element>& seed);
  /// Structure-ring subgroup given by a Howell form over the ring's coefficients.
  AdditiveSubgroup(Ring ring, HowellForm form);
  /// Table-ring subgroup given by a membership mask (must already be a subgroup).
  static AdditiveSubgroup from_mask(Ring ring, std::vector<char> mask);

  const Ring& ring() const;
  /// A generating set (Howell rows for structure rings).
  const std::vector<Element>& generators() const;
  std::uint64_t size() const;
  bool is_zero() const { return size() == 1; }
  bool contains(const Element& a) const;
  bool contains_index(Index i) const;

  /// Sorted element indices; throws CapExceeded beyond kMaxMaterialized.
  const std::vector<Index>& indices() const;
  std::vector<Element> elements() const;

  bool is_right_ideal() const;
  bool is_left_ideal() const;
  bool is_two_sided() const { return is_right_ideal() && is_left_ideal(); }
  bool is_ideal(IdealKind kind) const;

  /// Howell form (structure rings only).
  const HowellForm* howell() const;

  bool subset_of(const AdditiveSubgroup& other) const;
  friend bool operator==(const AdditiveSubgroup& a, const AdditiveSubgroup& b);

  struct Impl;

 private:
  explicit AdditiveSubgroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

AdditiveSubgroup additive_closure(const Ring& r, const std::vector<Element>& seed);
AdditiveSubgroup ideal_generated(const Ring& r, const std::vector<Element>& seed, IdealKind kind);
AdditiveSubgroup right_ideal_generated(const Ring& r, const std::vector<Element>& seed);
AdditiveSubgroup left_ideal_generated(const Ring& r, const std::vector<Element>& seed);
AdditiveSubgroup two_sided_ideal_generated(const Ring& r, const std::vector<Element>& seed);

/// {x : x s = 0 for all s in S}
AdditiveSubgroup left_annihilator(const Ring& r, const std::vector<Element>& s);
/// {x : s x = 0 for all s in S}
AdditiveSubgroup right_annihilator(const Ring& r, const std::vector<Element>& s);

AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b);
AdditiveSubgroup subgroup_intersection(const AdditiveSubgroup& a, const AdditiveSubgroup& b);
/// Additive span of {ab : a in A, b in B}.
AdditiveSubgroup subgroup_product(const AdditiveSubgroup& a, const AdditiveSubgroup& b);

Element commutator(const Ring& r, const Element& a, const Element& b);

/// Least k with a^k = 0, or nullopt when the powers of a never reach 0.
std::optional<std::uint64_t> nilpotency_index(const Ring& r, const Element& a);

/// True iff I^k = 0 for some k. Requires I to be a one-sided ideal.
bool is_nilpotent_subgroup(const Ring& r, const AdditiveSubgroup& i);

std::vector<Element> idempotents(const Ring& r, std::uint64_t cap = default_element_cap());
std::vector<Element> central_idempotents(const Ring& r, std::uint64_t cap = default_element_cap());

/// Default order caps for all_ideals.
inline constexpr std::uint64_t kTwoSidedIdealCap = 64;
inline constexpr std::uint64_t kOneSidedIdealCap = 32;

/// Every ideal of the given kind, sorted by (size, indices). Throws
/// CapExceeded when |R| > cap (default: 64 two-sided, 32 one-sided).
std::vector<AdditiveSubgroup> all_ideals(const Ring& r, IdealKind kind, std::optional<std::uint64_t> cap = {});

/// A multiplicatively closed subgroup as a ring in its own right (structure
/// ring on its Howell basis when free, table ring otherwise).
Ring reify(const AdditiveSubgroup& i, std::string name = {});
/// R/I for a two-sided ideal I, as a table ring whose elements are the cosets
/// ordered by least canonical representative. Throws CapExceeded when
/// |R/I| > kMaxTableOrder.
Ring quotient_ring(const AdditiveSubgroup& i, std::string name = {});

/// Structure ring on an explicit free basis of a multiplicatively closed subgroup.
Ring reify_with_basis(const Ring& r, const std::vector<Element>& basis, std::string name = {});

}  // namespace finring
