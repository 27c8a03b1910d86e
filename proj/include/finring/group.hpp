#pragma once

// Finite groups by Cayley table.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace finring {

class GroupTable {
 public:
  using Elem = std::uint32_t;

  /// Validates closure, associativity, identity and inverses; throws
  /// AxiomViolation with the offending indices.
  GroupTable(std::vector<Elem> table, std::vector<std::string> labels = {}, std::string name = {});

  Elem order() const { return order_; }
  Elem mul(Elem g, Elem h) const { return table_[std::size_t{g} * order_ + h]; }
  Elem identity() const { return identity_; }
  Elem inverse(Elem g) const { return inverse_[g]; }
  const std::vector<Elem>& table() const { return table_; }
  const std::string& label(Elem g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  /// Partition into conjugacy classes; each class sorted, classes ordered by least member.
  const std::vector<std::vector<Elem>>& conjugacy_classes() const { return classes_; }
  const std::vector<Elem>& center() const { return center_; }
  const std::vector<Elem>& derived_subgroup() const { return derived_; }

  bool is_abelian() const { return center_.size() == order_; }
  bool is_subgroup(const std::vector<Elem>& h) const;
  bool is_normal_subgroup(const std::vector<Elem>& h) const;
  std::uint32_t element_order(Elem g) const;
  /// Sorted subgroup generated by `gens`.
  std::vector<Elem> subgroup_generated(const std::vector<Elem>& gens) const;

 private:
  Elem order_;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
  std::string name_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<Elem> center_;
  std::vector<Elem> derived_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Q8 in the normal form a^s b^t, listed as e, a, a^2, b, ab, a^3, a^2b, a^3b.
GroupPtr group_q8();
/// Index of a^s b^t in group_q8().
GroupTable::Elem q8_index(unsigned s, unsigned t);
GroupPtr group_cyclic(std::uint32_t n);
GroupPtr group_elementary_abelian_2(std::uint32_t rank);
/// G1 x G2 with (g1, g2) at index g1 * |G2| + g2.
GroupPtr group_product(const GroupPtr& g1, const GroupPtr& g2);
GroupPtr group_from_table(std::vector<GroupTable::Elem> table, std::vector<std::string> labels = {},
                          std::string name = {});
/// G/N for a normal subgroup N; cosets ordered by least representative.
GroupPtr group_quotient(const GroupPtr& g, const std::vector<GroupTable::Elem>& n);

}  // namespace finring
