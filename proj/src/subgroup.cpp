#include "finring/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace finring {

struct AdditiveSubgroup::Impl {
  Ring ring;
  std::vector<Element> generators;
  std::optional<HowellForm> howell;
  std::vector<char> mask;
  std::uint64_t size = 1;
  bool right = false;
  bool left = false;
  mutable std::once_flag once;
  mutable std::vector<Index> indices;

  explicit Impl(Ring r) : ring(std::move(r)) {}
};

namespace {

std::vector<std::vector<Residue>> coeff_rows(const std::vector<Element>& els) {
  std::vector<std::vector<Residue>> rows;
  rows.reserve(els.size());
  for (const auto& e : els) rows.push_back(e.coeffs);
  return rows;
}

std::vector<Element> howell_elements(const HowellForm& h) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    auto r = h.row(i);
    out.push_back(Element{std::vector<Residue>(r.begin(), r.end())});
  }
  return out;
}

// Extends a subgroup mask by the cyclic subgroups of `extra`.
void extend_mask(const Ring& r, std::vector<char>& mask, const std::vector<std::uint32_t>& extra) {
  for (std::uint32_t x : extra) {
    if (mask[x]) continue;
    std::vector<std::uint32_t> current;
    for (std::uint32_t y = 0; y < mask.size(); ++y)
      if (mask[y]) current.push_back(y);
    for (std::uint32_t y : current)
      for (std::uint32_t acc = r.table_add(y, x); !mask[acc]; acc = r.table_add(acc, x)) mask[acc] = 1;
  }
}

std::vector<char> table_span(const Ring& r, const std::vector<Element>& seed) {
  std::vector<char> mask(r.order(), 0);
  mask[r.table_zero()] = 1;
  std::vector<std::uint32_t> extra;
  for (const auto& e : seed) extra.push_back(e.coeffs.at(0));
  extend_mask(r, mask, extra);
  return mask;
}

std::vector<Element> mask_generators(const Ring& r, const std::vector<char>& mask) {
  std::vector<char> span(mask.size(), 0);
  span[r.table_zero()] = 1;
  std::vector<Element> gens;
  for (std::uint32_t x = 0; x < mask.size(); ++x) {
    if (!mask[x] || span[x]) continue;
    gens.push_back(Element{{x}});
    extend_mask(r, span, {x});
  }
  return gens;
}

void compute_flags(AdditiveSubgroup::Impl& d, const AdditiveSubgroup& self) {
  const Ring& r = d.ring;
  d.right = true;
  d.left = true;
  for (const auto& g : d.generators) {
    for (const auto& e : r.additive_generators()) {
      if (d.right && !self.contains(r.mul(g, e))) d.right = false;
      if (d.left && !self.contains(r.mul(e, g))) d.left = false;
    }
  }
}

HowellForm structure_span(const Ring& r, const std::vector<Element>& seed) {
  return HowellForm(r.modulus(), r.rank(), coeff_rows(seed));
}

}  // namespace

AdditiveSubgroup::AdditiveSubgroup(Ring ring, HowellForm form) {
  if (!ring.is_structure()) throw std::invalid_argument("AdditiveSubgroup: Howell form on a table ring");
  if (form.modulus() != ring.modulus() || form.width() != ring.rank())
    throw std::invalid_argument("AdditiveSubgroup: Howell form does not match ring");
  auto d = std::make_shared<Impl>(std::move(ring));
  d->generators = howell_elements(form);
  d->size = form.count();
  d->howell = std::move(form);
  impl_ = d;
  compute_flags(*d, *this);
}

AdditiveSubgroup::AdditiveSubgroup(Ring ring, const std::vector<Element>& seed) {
  for (const auto& e : seed)
    if (!ring.contains(e)) throw std::invalid_argument("AdditiveSubgroup: seed element not in ring");
  if (ring.is_structure()) {
    *this = AdditiveSubgroup(ring, structure_span(ring, seed));
    return;
  }
  *this = from_mask(ring, table_span(ring, seed));
}

AdditiveSubgroup AdditiveSubgroup::from_mask(Ring ring, std::vector<char> mask) {
  if (ring.is_structure()) throw std::invalid_argument("AdditiveSubgroup::from_mask: structure ring");
  if (mask.size() != ring.order()) throw std::invalid_argument("AdditiveSubgroup::from_mask: size mismatch");
  auto d = std::make_shared<Impl>(std::move(ring));
  d->generators = mask_generators(d->ring, mask);
  d->size = static_cast<std::uint64_t>(std::count(mask.begin(), mask.end(), 1));
  d->mask = std::move(mask);
  AdditiveSubgroup s(d);
  compute_flags(*d, s);
  return s;
}

const Ring& AdditiveSubgroup::ring() const { return impl_->ring; }
const std::vector<Element>& AdditiveSubgroup::generators() const { return impl_->generators; }
std::uint64_t AdditiveSubgroup::size() const { return impl_->size; }
bool AdditiveSubgroup::is_right_ideal() const { return impl_->right; }
bool AdditiveSubgroup::is_left_ideal() const { return impl_->left; }
const HowellForm* AdditiveSubgroup::howell() const { return impl_->howell ? &*impl_->howell : nullptr; }

bool AdditiveSubgroup::is_ideal(IdealKind kind) const {
  switch (kind) {
    case IdealKind::right: return is_right_ideal();
    case IdealKind::left: return is_left_ideal();
    case IdealKind::two_sided: return is_two_sided();
  }
  return false;
}

bool AdditiveSubgroup::contains(const Element& a) const {
  if (impl_->howell) return impl_->howell->contains(a.coeffs);
  return a.coeffs.size() == 1 && a.coeffs[0] < impl_->mask.size() && impl_->mask[a.coeffs[0]];
}

bool AdditiveSubgroup::contains_index(Index i) const {
  if (impl_->howell) return contains(impl_->ring.element_at(i));
  return i < impl_->mask.size() && impl_->mask[i];
}

const std::vector<Index>& AdditiveSubgroup::indices() const {
  if (impl_->size > kMaxMaterialized) throw CapExceeded("subgroup materialization", impl_->size, kMaxMaterialized);
  std::call_once(impl_->once, [this] {
    auto& out = impl_->indices;
    if (impl_->howell) {
      out.reserve(impl_->size);
      impl_->howell->for_each([&](std::span<const Residue> v) { out.push_back(impl_->ring.index_of(v)); });
      std::sort(out.begin(), out.end());
    } else {
      for (Index i = 0; i < impl_->mask.size(); ++i)
        if (impl_->mask[i]) out.push_back(i);
    }
  });
  return impl_->indices;
}

std::vector<Element> AdditiveSubgroup::elements() const {
  std::vector<Element> out;
  for (Index i : indices()) out.push_back(impl_->ring.element_at(i));
  return out;
}

bool AdditiveSubgroup::subset_of(const AdditiveSubgroup& other) const {
  if (ring() != other.ring()) return false;
  return std::all_of(generators().begin(), generators().end(), [&](const Element& g) { return other.contains(g); });
}

bool operator==(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  return a.ring() == b.ring() && a.size() == b.size() && a.subset_of(b);
}

AdditiveSubgroup additive_closure(const Ring& r, const std::vector<Element>& seed) { return AdditiveSubgroup(r, seed); }

AdditiveSubgroup ideal_generated(const Ring& r, const std::vector<Element>& seed, IdealKind kind) {
  for (const auto& e : seed)
    if (!r.contains(e)) throw std::invalid_argument("ideal_generated: seed element not in ring");
  const bool right = kind != IdealKind::left;
  const bool left = kind != IdealKind::right;
  if (r.is_structure()) {
    HowellForm h = structure_span(r, seed);
    while (true) {
      std::vector<std::vector<Residue>> more;
      for (const auto& g : howell_elements(h)) {
        for (const auto& e : r.additive_generators()) {
          if (right) more.push_back(r.mul(g, e).coeffs);
          if (left) more.push_back(r.mul(e, g).coeffs);
        }
      }
      HowellForm next = h + HowellForm(r.modulus(), r.rank(), more);
      if (next == h) break;
      h = std::move(next);
    }
    return AdditiveSubgroup(r, std::move(h));
  }
  std::vector<char> mask = table_span(r, seed);
  while (true) {
    std::vector<std::uint32_t> extra;
    for (std::uint32_t x = 0; x < mask.size(); ++x) {
      if (!mask[x]) continue;
      for (const auto& e : r.additive_generators()) {
        if (right && !mask[r.table_mul(x, e.coeffs[0])]) extra.push_back(r.table_mul(x, e.coeffs[0]));
        if (left && !mask[r.table_mul(e.coeffs[0], x)]) extra.push_back(r.table_mul(e.coeffs[0], x));
      }
    }
    if (extra.empty()) break;
    extend_mask(r, mask, extra);
  }
  return AdditiveSubgroup::from_mask(r, std::move(mask));
}

AdditiveSubgroup right_ideal_generated(const Ring& r, const std::vector<Element>& seed) {
  return ideal_generated(r, seed, IdealKind::right);
}
AdditiveSubgroup left_ideal_generated(const Ring& r, const std::vector<Element>& seed) {
  return ideal_generated(r, seed, IdealKind::left);
}
AdditiveSubgroup two_sided_ideal_generated(const Ring& r, const std::vector<Element>& seed) {
  return ideal_generated(r, seed, IdealKind::two_sided);
}

namespace {

AdditiveSubgroup annihilator(const Ring& r, const std::vector<Element>& s, bool left_side) {
  if (r.is_structure()) {
    const HowellForm span = structure_span(r, s);
    const std::size_t k = r.rank();
    Matrix a(k, std::max<std::size_t>(1, span.rank() * k));
    for (std::size_t i = 0; i < k; ++i) {
      const Element ei = r.basis(i);
      for (std::size_t t = 0; t < span.rank(); ++t) {
        const Element st{std::vector<Residue>(span.row(t).begin(), span.row(t).end())};
        const Element p = left_side ? r.mul(ei, st) : r.mul(st, ei);
        for (std::size_t c = 0; c < k; ++c) a(i, t * k + c) = p.coeffs[c];
      }
    }
    return AdditiveSubgroup(r, left_kernel(r.modulus(), a));
  }
  std::vector<char> mask(r.order(), 0);
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    bool ok = true;
    for (const auto& e : s) {
      const std::uint32_t p = left_side ? r.table_mul(x, e.coeffs[0]) : r.table_mul(e.coeffs[0], x);
      if (p != r.table_zero()) {
        ok = false;
        break;
      }
    }
    mask[x] = ok;
  }
  return AdditiveSubgroup::from_mask(r, std::move(mask));
}

}  // namespace

AdditiveSubgroup left_annihilator(const Ring& r, const std::vector<Element>& s) { return annihilator(r, s, true); }
AdditiveSubgroup right_annihilator(const Ring& r, const std::vector<Element>& s) { return annihilator(r, s, false); }

AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("subgroup_sum: different rings");
  if (a.howell()) return AdditiveSubgroup(a.ring(), *a.howell() + *b.howell());
  std::vector<Element> seed = a.generators();
  seed.insert(seed.end(), b.generators().begin(), b.generators().end());
  return AdditiveSubgroup(a.ring(), seed);
}

AdditiveSubgroup subgroup_intersection(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("subgroup_intersection: different rings");
  if (a.howell()) return AdditiveSubgroup(a.ring(), intersect(*a.howell(), *b.howell()));
  std::vector<char> mask(a.ring().order(), 0);
  for (Index i = 0; i < mask.size(); ++i) mask[i] = a.contains_index(i) && b.contains_index(i);
  return AdditiveSubgroup::from_mask(a.ring(), std::move(mask));
}

AdditiveSubgroup subgroup_product(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("subgroup_product: different rings");
  const Ring& r = a.ring();
  std::vector<Element> seed;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) seed.push_back(r.mul(x, y));
  return AdditiveSubgroup(r, seed);
}

Element commutator(const Ring& r, const Element& a, const Element& b) { return r.sub(r.mul(a, b), r.mul(b, a)); }

std::optional<std::uint64_t> nilpotency_index(const Ring& r, const Element& a) {
  // Brent cycle detection on x_t = a^(t+1); 0 is a fixed point, so a is
  // nilpotent iff the cycle is {0}, entered at t = index - 1.
  const auto f = [&](const Element& x) { return r.mul(x, a); };
  std::uint64_t power = 1, lam = 1;
  Element tortoise = a;
  Element hare = f(a);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = f(hare);
    ++lam;
  }
  tortoise = a;
  hare = a;
  for (std::uint64_t i = 0; i < lam; ++i) hare = f(hare);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    tortoise = f(tortoise);
    hare = f(hare);
    ++mu;
  }
  if (!r.is_zero(tortoise)) return std::nullopt;
  return mu + 1;
}

bool is_nilpotent_subgroup(const Ring& r, const AdditiveSubgroup& i) {
  if (i.ring() != r) throw std::invalid_argument("is_nilpotent_subgroup: subgroup of another ring");
  if (!i.is_right_ideal() && !i.is_left_ideal())
    throw std::invalid_argument("is_nilpotent_subgroup: subgroup is not a one-sided ideal");
  AdditiveSubgroup p = i;
  while (!p.is_zero()) {
    AdditiveSubgroup q = subgroup_product(p, i);
    if (q == p) return false;
    p = std::move(q);
  }
  return true;
}

std::vector<Element> idempotents(const Ring& r, std::uint64_t cap) {
  if (r.order() > cap) throw CapExceeded("idempotents", r.order(), cap);
  std::vector<Element> out;
  for_each_element(r, [&](Index, std::span<const Residue> c) {
    Element e{std::vector<Residue>(c.begin(), c.end())};
    if (r.mul(e, e) == e) out.push_back(std::move(e));
  });
  return out;
}

std::vector<Element> central_idempotents(const Ring& r, std::uint64_t cap) {
  std::vector<Element> out;
  for (auto& e : idempotents(r, cap)) {
    const bool central = std::all_of(r.additive_generators().begin(), r.additive_generators().end(),
                                     [&](const Element& g) { return r.mul(e, g) == r.mul(g, e); });
    if (central) out.push_back(std::move(e));
  }
  return out;
}

namespace {

using IdealKey = std::vector<std::uint64_t>;

IdealKey key_of(const AdditiveSubgroup& s) {
  IdealKey k;
  if (const auto* h = s.howell()) {
    for (std::size_t i = 0; i < h->rank(); ++i)
      for (Residue x : h->row(i)) k.push_back(x);
    return k;
  }
  const Index m = s.ring().order();
  k.assign((m + 63) / 64, 0);
  for (Index i : s.indices()) k[i / 64] |= std::uint64_t{1} << (i % 64);
  return k;
}

}  // namespace

std::vector<AdditiveSubgroup> all_ideals(const Ring& r, IdealKind kind, std::optional<std::uint64_t> cap) {
  const std::uint64_t limit = cap.value_or(kind == IdealKind::two_sided ? kTwoSidedIdealCap : kOneSidedIdealCap);
  if (r.order() > limit) throw CapExceeded("all_ideals", r.order(), limit);

  std::map<IdealKey, std::size_t> seen;
  std::vector<AdditiveSubgroup> found;
  std::vector<std::size_t> principal;
  const auto admit = [&](AdditiveSubgroup s) -> std::optional<std::size_t> {
    auto key = key_of(s);
    if (seen.count(key)) return std::nullopt;
    seen.emplace(std::move(key), found.size());
    found.push_back(std::move(s));
    return found.size() - 1;
  };

  for_each_element(r, [&](Index, std::span<const Residue> c) {
    Element e{std::vector<Residue>(c.begin(), c.end())};
    if (auto pos = admit(ideal_generated(r, {e}, kind))) principal.push_back(*pos);
  });

  // every ideal is a sum of principal ideals; close under adding one at a time
  std::deque<std::size_t> queue(principal.begin(), principal.end());
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t p : principal) {
      if (found[p].subset_of(found[cur])) continue;
      if (auto pos = admit(subgroup_sum(found[cur], found[p]))) queue.push_back(*pos);
    }
  }

  std::sort(found.begin(), found.end(), [](const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return found;
}

Ring reify_with_basis(const Ring& r, const std::vector<Element>& basis, std::string name) {
  if (!r.is_structure()) throw std::invalid_argument("reify_with_basis: structure rings only");
  if (basis.empty()) throw std::invalid_argument("reify_with_basis: empty basis");
  const std::size_t k = basis.size();
  const Residue n = r.modulus();
  Matrix b(k, r.rank());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < r.rank(); ++c) b(i, c) = basis[i].coeffs.at(c);
  if (!left_kernel(n, b).is_zero()) throw std::invalid_argument("reify_with_basis: basis is not free");
  std::vector<Residue> constants(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Element p = r.mul(basis[i], basis[j]);
      const auto coords = solve_left(n, b, p.coeffs);
      if (!coords) throw std::invalid_argument("reify_with_basis: span is not multiplicatively closed");
      for (std::size_t c = 0; c < k; ++c) constants[(i * k + j) * k + c] = (*coords)[c];
    }
  return Ring::from_structure(n, k, std::move(constants), name.empty() ? r.name() + "|sub" : std::move(name));
}

Ring reify(const AdditiveSubgroup& i, std::string name) {
  const Ring& r = i.ring();
  for (const auto& x : i.generators())
    for (const auto& y : i.generators())
      if (!i.contains(r.mul(x, y))) throw std::invalid_argument("reify: subgroup is not multiplicatively closed");
  if (name.empty()) name = r.name() + "|sub";
  if (i.howell() && i.howell()->is_free() && !i.is_zero()) return reify_with_basis(r, i.generators(), name);
  if (i.size() > kMaxTableOrder) throw CapExceeded("reify (table form)", i.size(), kMaxTableOrder);
  const auto& idx = i.indices();
  const auto m = static_cast<std::uint32_t>(idx.size());
  std::vector<Element> els;
  for (Index x : idx) els.push_back(r.element_at(x));
  const auto pos = [&](const Element& e) {
    return static_cast<std::uint32_t>(std::lower_bound(idx.begin(), idx.end(), r.index_of(e)) - idx.begin());
  };
  std::vector<std::uint32_t> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      add[std::size_t{x} * m + y] = pos(r.add(els[x], els[y]));
      mul[std::size_t{x} * m + y] = pos(r.mul(els[x], els[y]));
    }
  return make_table_ring(std::move(add), std::move(mul), pos(r.zero()), std::nullopt, std::move(name));
}

}  // namespace finring
