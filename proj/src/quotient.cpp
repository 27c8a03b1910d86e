#include <stdexcept>

#include "finring/subgroup.hpp"

namespace finring {

Ring quotient_ring(const AdditiveSubgroup& i, std::string name) {
  const Ring& r = i.ring();
  if (!i.is_two_sided()) throw std::invalid_argument("quotient_ring: not a two-sided ideal");
  const Index q = r.order() / i.size();
  if (q > kMaxTableOrder) throw CapExceeded("quotient_ring", q, kMaxTableOrder);
  if (r.order() > kMaxMaterialized) throw CapExceeded("quotient_ring", r.order(), kMaxMaterialized);

  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> coset(r.order(), kUnset);
  std::vector<Element> reps;
  const std::vector<Element> members = i.elements();
  for (Index x = 0; x < r.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const Element a = r.element_at(x);
    const auto c = static_cast<std::uint32_t>(reps.size());
    for (const auto& m : members) coset[r.index_of(r.add(a, m))] = c;
    reps.push_back(a);
  }
  const auto m = static_cast<std::uint32_t>(reps.size());
  std::vector<std::uint32_t> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      add[std::size_t{a} * m + b] = coset[r.index_of(r.add(reps[a], reps[b]))];
      mul[std::size_t{a} * m + b] = coset[r.index_of(r.mul(reps[a], reps[b]))];
    }
  std::optional<std::uint32_t> one;
  if (r.one()) one = coset[r.index_of(*r.one())];
  if (name.empty()) name = r.name() + "/I";
  return make_table_ring(std::move(add), std::move(mul), coset[r.index_of(r.zero())], one, std::move(name));
}

}  // namespace finring
