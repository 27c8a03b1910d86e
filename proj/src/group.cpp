#include "finring/group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "finring/errors.hpp"

namespace finring {

namespace {
constexpr std::uint32_t kMaxGroupOrder = 4096;
}

GroupTable::GroupTable(std::vector<Elem> table, std::vector<std::string> labels, std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  const auto m = static_cast<Elem>(std::llround(std::sqrt(static_cast<double>(table_.size()))));
  if (m == 0 || std::size_t{m} * m != table_.size()) throw std::invalid_argument("group table is not square");
  if (m > kMaxGroupOrder) throw CapExceeded("group order", m, kMaxGroupOrder);
  order_ = m;
  if (labels_.empty())
    for (Elem g = 0; g < m; ++g) labels_.push_back("g" + std::to_string(g));
  if (labels_.size() != m) throw std::invalid_argument("group labels do not match order");
  if (name_.empty()) name_ = "G" + std::to_string(m);

  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h)
      if (mul(g, h) >= m) throw AxiomViolation("closure", {g, h});
  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h)
      for (Elem k = 0; k < m; ++k)
        if (mul(mul(g, h), k) != mul(g, mul(h, k))) throw AxiomViolation("associativity", {g, h, k});

  bool found = false;
  for (Elem e = 0; e < m && !found; ++e) {
    found = true;
    for (Elem g = 0; g < m && found; ++g) found = mul(e, g) == g && mul(g, e) == g;
    if (found) identity_ = e;
  }
  if (!found) throw AxiomViolation("identity", {});
  inverse_.assign(m, m);
  for (Elem g = 0; g < m; ++g) {
    for (Elem h = 0; h < m; ++h)
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverse_[g] = h;
        break;
      }
    if (inverse_[g] == m) throw AxiomViolation("inverse", {g});
  }

  std::vector<char> seen(m, 0);
  for (Elem g = 0; g < m; ++g) {
    if (seen[g]) continue;
    std::vector<Elem> cls;
    for (Elem x = 0; x < m; ++x) {
      const Elem c = mul(mul(x, g), inverse_[x]);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  for (const auto& cls : classes_)
    if (cls.size() == 1) center_.push_back(cls[0]);
  std::sort(center_.begin(), center_.end());

  std::vector<Elem> comms;
  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h) comms.push_back(mul(mul(inverse_[g], inverse_[h]), mul(g, h)));
  derived_ = subgroup_generated(comms);
}

std::vector<GroupTable::Elem> GroupTable::subgroup_generated(const std::vector<Elem>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<Elem> members{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem g : gens) {
      const Elem p = mul(members[i], g);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool GroupTable::is_subgroup(const std::vector<Elem>& h) const {
  if (h.empty()) return false;
  std::vector<char> in(order_, 0);
  for (Elem x : h) {
    if (x >= order_) return false;
    in[x] = 1;
  }
  if (!in[identity_]) return false;
  for (Elem x : h) {
    if (!in[inverse_[x]]) return false;
    for (Elem y : h)
      if (!in[mul(x, y)]) return false;
  }
  return true;
}

bool GroupTable::is_normal_subgroup(const std::vector<Elem>& h) const {
  if (!is_subgroup(h)) return false;
  std::vector<char> in(order_, 0);
  for (Elem x : h) in[x] = 1;
  for (Elem g = 0; g < order_; ++g)
    for (Elem x : h)
      if (!in[mul(mul(g, x), inverse_[g])]) return false;
  return true;
}

std::uint32_t GroupTable::element_order(Elem g) const {
  std::uint32_t k = 1;
  for (Elem x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

GroupTable::Elem q8_index(unsigned s, unsigned t) {
  static constexpr GroupTable::Elem idx[4][2] = {{0, 3}, {1, 4}, {2, 6}, {5, 7}};
  return idx[s % 4][t % 2];
}

GroupPtr group_q8() {
  static const GroupPtr q8 = [] {
    // b a^u = a^-u b and b^2 = a^2
    const unsigned s_of[8] = {0, 1, 2, 0, 1, 3, 2, 3};
    const unsigned t_of[8] = {0, 0, 0, 1, 1, 0, 1, 1};
    std::vector<GroupTable::Elem> table(64);
    for (unsigned x = 0; x < 8; ++x)
      for (unsigned y = 0; y < 8; ++y) {
        unsigned s = t_of[x] ? s_of[x] + 4 - s_of[y] : s_of[x] + s_of[y];
        unsigned t = t_of[x] + t_of[y];
        if (t == 2) {
          t = 0;
          s += 2;
        }
        table[x * 8 + y] = q8_index(s, t);
      }
    return std::make_shared<const GroupTable>(std::move(table),
                                              std::vector<std::string>{"e", "a", "a^2", "b", "ab", "a^3", "a^2b", "a^3b"},
                                              "Q8");
  }();
  return q8;
}

GroupPtr group_cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("group_cyclic: n must be positive");
  if (n > kMaxGroupOrder) throw CapExceeded("group order", n, kMaxGroupOrder);
  std::vector<GroupTable::Elem> table(std::size_t{n} * n);
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < n; ++x) {
    labels.push_back(x == 0 ? "e" : x == 1 ? "g" : "g^" + std::to_string(x));
    for (std::uint32_t y = 0; y < n; ++y) table[std::size_t{x} * n + y] = (x + y) % n;
  }
  return std::make_shared<const GroupTable>(std::move(table), std::move(labels), "C" + std::to_string(n));
}

GroupPtr group_elementary_abelian_2(std::uint32_t rank) {
  if (rank > 12) throw CapExceeded("group order", std::uint64_t{1} << rank, kMaxGroupOrder);
  const std::uint32_t n = 1u << rank;
  std::vector<GroupTable::Elem> table(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) table[std::size_t{x} * n + y] = x ^ y;
  return std::make_shared<const GroupTable>(std::move(table), std::vector<std::string>{},
                                            "C2^" + std::to_string(rank));
}

GroupPtr group_product(const GroupPtr& g1, const GroupPtr& g2) {
  const std::uint32_t m1 = g1->order(), m2 = g2->order();
  if (std::uint64_t{m1} * m2 > kMaxGroupOrder) throw CapExceeded("group order", std::uint64_t{m1} * m2, kMaxGroupOrder);
  const std::uint32_t m = m1 * m2;
  std::vector<GroupTable::Elem> table(std::size_t{m} * m);
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < m; ++x) {
    labels.push_back("(" + g1->label(x / m2) + "," + g2->label(x % m2) + ")");
    for (std::uint32_t y = 0; y < m; ++y)
      table[std::size_t{x} * m + y] = g1->mul(x / m2, y / m2) * m2 + g2->mul(x % m2, y % m2);
  }
  return std::make_shared<const GroupTable>(std::move(table), std::move(labels), g1->name() + "x" + g2->name());
}

GroupPtr group_from_table(std::vector<GroupTable::Elem> table, std::vector<std::string> labels, std::string name) {
  return std::make_shared<const GroupTable>(std::move(table), std::move(labels), std::move(name));
}

GroupPtr group_quotient(const GroupPtr& g, const std::vector<GroupTable::Elem>& n) {
  if (!g->is_normal_subgroup(n)) throw std::invalid_argument("group_quotient: not a normal subgroup");
  const std::uint32_t m = g->order();
  std::vector<std::uint32_t> coset(m, m);
  std::vector<GroupTable::Elem> reps;
  for (GroupTable::Elem x = 0; x < m; ++x) {
    if (coset[x] != m) continue;
    for (GroupTable::Elem h : n) coset[g->mul(x, h)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  const auto q = static_cast<std::uint32_t>(reps.size());
  std::vector<GroupTable::Elem> table(std::size_t{q} * q);
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < q; ++x) {
    labels.push_back(g->label(reps[x]) + "N");
    for (std::uint32_t y = 0; y < q; ++y) table[std::size_t{x} * q + y] = coset[g->mul(reps[x], reps[y])];
  }
  return std::make_shared<const GroupTable>(std::move(table), std::move(labels), g->name() + "/N");
}

}  // namespace finring
