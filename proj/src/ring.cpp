#include "finring/ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace finring {

std::uint64_t default_element_cap() {
  if (const char* env = std::getenv("FINRING_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 65536;
}

struct Ring::Impl {
  RingKind kind = RingKind::structure;
  std::string name;
  Index order = 0;
  std::uint64_t characteristic = 0;
  std::optional<Element> one;
  std::vector<Element> generators;
  std::shared_ptr<const GroupRingInfo> group_info;

  // structure ring
  Residue modulus = 0;
  std::size_t rank = 0;
  std::vector<Residue> constants;
  std::vector<std::uint32_t> term_start;
  std::vector<std::uint32_t> term_k;
  std::vector<Residue> term_c;
  Matrix commutator;

  // table ring
  std::uint32_t m = 0;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> neg;
  std::uint32_t zero = 0;
};

namespace {

void structure_mul(const Ring::Impl& d, std::span<const Residue> a, std::span<const Residue> b,
                   std::span<Residue> out) {
  const std::size_t r = d.rank;
  const Residue n = d.modulus;
  if (n <= (1u << 16)) {
    std::uint64_t acc[64];
    std::vector<std::uint64_t> big;
    std::uint64_t* s = acc;
    if (r > 64) {
      big.assign(r, 0);
      s = big.data();
    } else {
      std::fill(acc, acc + r, 0);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (b[j] == 0) continue;
        const std::uint64_t t = std::uint64_t{a[i]} * b[j] % n;
        const std::size_t ij = i * r + j;
        for (std::uint32_t p = d.term_start[ij]; p < d.term_start[ij + 1]; ++p) s[d.term_k[p]] += t * d.term_c[p];
      }
    }
    for (std::size_t k = 0; k < r; ++k) out[k] = static_cast<Residue>(s[k] % n);
    return;
  }
  std::vector<std::uint64_t> s(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      const std::uint64_t t = std::uint64_t{a[i]} * b[j] % n;
      const std::size_t ij = i * r + j;
      for (std::uint32_t p = d.term_start[ij]; p < d.term_start[ij + 1]; ++p)
        s[d.term_k[p]] = (s[d.term_k[p]] + t * d.term_c[p]) % n;
    }
  }
  for (std::size_t k = 0; k < r; ++k) out[k] = static_cast<Residue>(s[k]);
}

std::vector<Residue> unit_vector(std::size_t r, std::size_t i) {
  std::vector<Residue> v(r, 0);
  v[i] = 1;
  return v;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

void finish_tables(Ring::Impl& d) {
  const std::uint32_t m = d.m;
  d.order = m;
  d.neg.assign(m, 0);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y)
      if (d.add[x * m + y] == d.zero) {
        d.neg[x] = y;
        break;
      }
  std::uint64_t ch = 1;
  for (std::uint32_t x = 0; x < m; ++x) {
    std::uint64_t k = 1;
    for (std::uint32_t acc = x; acc != d.zero; acc = d.add[acc * m + x]) ++k;
    if (x == d.zero) k = 1;
    ch = lcm_u64(ch, k);
  }
  d.characteristic = ch;

  std::vector<char> span(m, 0);
  span[d.zero] = 1;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (span[x]) continue;
    d.generators.push_back(Element{{x}});
    // extend the span by all multiples of the new generator
    std::vector<std::uint32_t> current;
    for (std::uint32_t y = 0; y < m; ++y)
      if (span[y]) current.push_back(y);
    for (std::uint32_t y : current) {
      for (std::uint32_t acc = d.add[y * m + x]; !span[acc]; acc = d.add[acc * m + x]) span[acc] = 1;
    }
  }
  if (!d.one) {
    for (std::uint32_t u = 0; u < m && !d.one; ++u) {
      bool ok = true;
      for (std::uint32_t x = 0; x < m && ok; ++x) ok = d.mul[u * m + x] == x && d.mul[x * m + u] == x;
      if (ok) d.one = Element{{u}};
    }
  }
}

}  // namespace

Ring Ring::from_structure(Residue modulus, std::size_t rank, std::vector<Residue> constants, std::string name) {
  if (modulus < 2 || modulus > kMaxModulus) throw std::invalid_argument("structure ring: modulus must be in [2, 2^31)");
  if (rank < 1) throw std::invalid_argument("structure ring: rank must be at least 1");
  if (constants.size() != rank * rank * rank)
    throw std::invalid_argument("structure ring: expected rank^3 structure constants");
  auto d = std::make_shared<Impl>();
  d->kind = RingKind::structure;
  d->name = std::move(name);
  d->modulus = modulus;
  d->rank = rank;
  for (auto& c : constants) c %= modulus;
  d->constants = std::move(constants);

  Index order = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (order > (Index{1} << 62) / modulus) throw std::invalid_argument("structure ring: order exceeds 2^62");
    order *= modulus;
  }
  d->order = order;
  d->characteristic = modulus;

  d->term_start.assign(rank * rank + 1, 0);
  for (std::size_t ij = 0; ij < rank * rank; ++ij) {
    d->term_start[ij] = static_cast<std::uint32_t>(d->term_k.size());
    for (std::size_t k = 0; k < rank; ++k) {
      const Residue c = d->constants[ij * rank + k];
      if (c != 0) {
        d->term_k.push_back(static_cast<std::uint32_t>(k));
        d->term_c.push_back(c);
      }
    }
  }
  d->term_start[rank * rank] = static_cast<std::uint32_t>(d->term_k.size());

  std::vector<std::vector<Residue>> prod(rank * rank, std::vector<Residue>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) prod[i * rank + j][k] = d->constants[(i * rank + j) * rank + k];
  std::vector<Residue> lhs(rank), rhs(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) {
        const auto ek = unit_vector(rank, k);
        const auto ei = unit_vector(rank, i);
        structure_mul(*d, prod[i * rank + j], ek, lhs);
        structure_mul(*d, ei, prod[j * rank + k], rhs);
        if (lhs != rhs) throw AxiomViolation("associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)");
      }

  d->commutator = Matrix(rank, rank * rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k)
        d->commutator(i, j * rank + k) = mod_sub(prod[i * rank + j][k], prod[j * rank + i][k], modulus);

  // unit: u with u e_i = e_i = e_i u for every i
  Matrix system(rank, 2 * rank * rank);
  std::vector<Residue> target(2 * rank * rank, 0);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t c = 0; c < rank; ++c) {
        system(k, i * rank + c) = prod[k * rank + i][c];
        system(k, rank * rank + i * rank + c) = prod[i * rank + k][c];
      }
  for (std::size_t i = 0; i < rank; ++i) {
    target[i * rank + i] = 1;
    target[rank * rank + i * rank + i] = 1;
  }
  if (auto u = solve_left(modulus, system, target)) d->one = Element{*u};

  for (std::size_t i = 0; i < rank; ++i) d->generators.push_back(Element{unit_vector(rank, i)});
  return Ring(std::move(d));
}

Ring Ring::from_tables_unchecked(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul, std::uint32_t zero,
                                 std::string name) {
  auto d = std::make_shared<Impl>();
  d->kind = RingKind::table;
  d->name = std::move(name);
  d->m = static_cast<std::uint32_t>(std::llround(std::sqrt(static_cast<double>(add.size()))));
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->zero = zero;
  d->modulus = 0;
  d->rank = 1;
  finish_tables(*d);
  return Ring(std::move(d));
}

Ring Ring::from_tables(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul, std::uint32_t zero,
                       std::optional<std::uint32_t> one, std::string name) {
  const std::size_t sz = add.size();
  std::uint64_t m = 0;
  while (m * m < sz) ++m;
  if (m == 0 || m * m != sz) throw std::invalid_argument("table ring: addition table is not square");
  if (mul.size() != sz) throw std::invalid_argument("table ring: tables have different orders");
  if (m > kMaxTableOrder) throw CapExceeded("table ring", m, kMaxTableOrder);
  if (zero >= m) throw std::invalid_argument("table ring: zero index out of range");
  if (one && *one >= m) throw std::invalid_argument("table ring: one index out of range");
  const auto at = [m](const std::vector<std::uint32_t>& t, std::uint64_t x, std::uint64_t y) { return t[x * m + y]; };
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      if (at(add, x, y) >= m || at(mul, x, y) >= m) throw AxiomViolation("closure", {x, y}, "table entry out of range");
  for (std::uint64_t x = 0; x < m; ++x)
    if (at(add, zero, x) != x || at(add, x, zero) != x)
      throw AxiomViolation("additive identity", {zero, x}, "zero is not an additive identity");
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y)
      if (at(add, x, y) != at(add, y, x)) throw AxiomViolation("additive commutativity", {x, y});
  for (std::uint64_t x = 0; x < m; ++x) {
    bool found = false;
    for (std::uint64_t y = 0; y < m && !found; ++y) found = at(add, x, y) == zero;
    if (!found) throw AxiomViolation("additive inverse", {x});
  }
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y) {
      const std::uint64_t xy = at(add, x, y);
      const std::uint64_t pxy = at(mul, x, y);
      for (std::uint64_t z = 0; z < m; ++z) {
        if (at(add, xy, z) != at(add, x, at(add, y, z))) throw AxiomViolation("additive associativity", {x, y, z});
        if (at(mul, pxy, z) != at(mul, x, at(mul, y, z)))
          throw AxiomViolation("multiplicative associativity", {x, y, z});
        if (at(mul, x, at(add, y, z)) != at(add, pxy, at(mul, x, z)))
          throw AxiomViolation("left distributivity", {x, y, z}, "x(y+z) != xy + xz");
        if (at(mul, xy, z) != at(add, at(mul, x, z), at(mul, y, z)))
          throw AxiomViolation("right distributivity", {x, y, z}, "(x+y)z != xz + yz");
      }
    }
  for (std::uint64_t x = 0; x < m; ++x)
    if (at(mul, zero, x) != zero || at(mul, x, zero) != zero) throw AxiomViolation("zero absorption", {zero, x});
  if (one) {
    for (std::uint64_t x = 0; x < m; ++x)
      if (at(mul, *one, x) != x || at(mul, x, *one) != x)
        throw AxiomViolation("multiplicative identity", {*one, x}, "declared one is not an identity");
  }
  Ring r = from_tables_unchecked(std::move(add), std::move(mul), zero, std::move(name));
  return r;
}

RingKind Ring::kind() const { return impl_->kind; }
const std::string& Ring::name() const { return impl_->name; }

Ring Ring::renamed(std::string name) const {
  auto d = std::make_shared<Impl>(*impl_);
  d->name = std::move(name);
  return Ring(std::move(d));
}

Index Ring::order() const { return impl_->order; }
std::uint64_t Ring::characteristic() const { return impl_->characteristic; }
bool Ring::unital() const { return impl_->one.has_value(); }
const std::optional<Element>& Ring::one() const { return impl_->one; }
Residue Ring::modulus() const { return impl_->modulus; }
std::size_t Ring::rank() const { return impl_->rank; }

Residue Ring::constant(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t r = impl_->rank;
  return impl_->constants.at((i * r + j) * r + k);
}
const std::vector<Residue>& Ring::constants() const { return impl_->constants; }

std::uint32_t Ring::table_add(std::uint32_t a, std::uint32_t b) const { return impl_->add[a * impl_->m + b]; }
std::uint32_t Ring::table_mul(std::uint32_t a, std::uint32_t b) const { return impl_->mul[a * impl_->m + b]; }
std::uint32_t Ring::table_neg(std::uint32_t a) const { return impl_->neg[a]; }
std::uint32_t Ring::table_zero() const { return impl_->zero; }

const std::vector<Element>& Ring::additive_generators() const { return impl_->generators; }

Element Ring::basis(std::size_t i) const {
  if (!is_structure()) return impl_->generators.at(i);
  return Element{unit_vector(impl_->rank, i)};
}

Element Ring::zero() const {
  if (is_structure()) return Element{std::vector<Residue>(impl_->rank, 0)};
  return Element{{impl_->zero}};
}

bool Ring::is_zero(const Element& a) const {
  if (is_structure()) return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Residue x) { return x == 0; });
  return a.coeffs.at(0) == impl_->zero;
}

bool Ring::contains(const Element& a) const {
  if (is_structure()) {
    if (a.coeffs.size() != impl_->rank) return false;
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](Residue x) { return x < impl_->modulus; });
  }
  return a.coeffs.size() == 1 && a.coeffs[0] < impl_->m;
}

Element Ring::add(const Element& a, const Element& b) const {
  if (!is_structure()) return Element{{table_add(a.coeffs[0], b.coeffs[0])}};
  Element out{std::vector<Residue>(impl_->rank)};
  for (std::size_t k = 0; k < impl_->rank; ++k) out.coeffs[k] = mod_add(a.coeffs[k], b.coeffs[k], impl_->modulus);
  return out;
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::neg(const Element& a) const {
  if (!is_structure()) return Element{{table_neg(a.coeffs[0])}};
  Element out{std::vector<Residue>(impl_->rank)};
  for (std::size_t k = 0; k < impl_->rank; ++k) out.coeffs[k] = mod_neg(a.coeffs[k], impl_->modulus);
  return out;
}

Element Ring::mul(const Element& a, const Element& b) const {
  if (!is_structure()) return Element{{table_mul(a.coeffs[0], b.coeffs[0])}};
  Element out{std::vector<Residue>(impl_->rank)};
  structure_mul(*impl_, a.coeffs, b.coeffs, out.coeffs);
  return out;
}

void Ring::mul_into(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out) const {
  structure_mul(*impl_, a, b, out);
}

Element Ring::scale(std::int64_t k, const Element& a) const {
  if (is_structure()) {
    const Residue kk = mod_reduce(k, impl_->modulus);
    Element out{std::vector<Residue>(impl_->rank)};
    for (std::size_t i = 0; i < impl_->rank; ++i) out.coeffs[i] = mod_mul(kk, a.coeffs[i], impl_->modulus);
    return out;
  }
  const std::uint64_t ch = impl_->characteristic;
  std::uint64_t times = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(ch)) + ch) % ch);
  std::uint32_t acc = impl_->zero;
  for (std::uint64_t t = 0; t < times; ++t) acc = table_add(acc, a.coeffs[0]);
  return Element{{acc}};
}

Element Ring::power(const Element& a, std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("power: exponent must be positive");
  Element result = a;
  for (std::uint64_t i = 1; i < k; ++i) result = mul(result, a);
  return result;
}

Index Ring::index_of(std::span<const Residue> coeffs) const {
  if (!is_structure()) return coeffs[0];
  Index idx = 0;
  for (Residue c : coeffs) idx = idx * impl_->modulus + c;
  return idx;
}

Index Ring::index_of(const Element& a) const { return index_of(std::span<const Residue>(a.coeffs)); }

Element Ring::element_at(Index i) const {
  if (i >= impl_->order) throw std::out_of_range("element_at: index out of range");
  if (!is_structure()) return Element{{static_cast<Residue>(i)}};
  Element out{std::vector<Residue>(impl_->rank)};
  for (std::size_t k = impl_->rank; k-- > 0;) {
    out.coeffs[k] = static_cast<Residue>(i % impl_->modulus);
    i /= impl_->modulus;
  }
  return out;
}

Matrix Ring::right_mult_matrix(const Element& c) const {
  const std::size_t r = impl_->rank;
  const Residue n = impl_->modulus;
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (c.coeffs[j] == 0) continue;
      for (std::size_t k = 0; k < r; ++k)
        m(i, k) = mod_add(m(i, k), mod_mul(c.coeffs[j], impl_->constants[(i * r + j) * r + k], n), n);
    }
  return m;
}

Matrix Ring::left_mult_matrix(const Element& c) const {
  const std::size_t r = impl_->rank;
  const Residue n = impl_->modulus;
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (c.coeffs[j] == 0) continue;
      for (std::size_t k = 0; k < r; ++k)
        m(i, k) = mod_add(m(i, k), mod_mul(c.coeffs[j], impl_->constants[(j * r + i) * r + k], n), n);
    }
  return m;
}

const Matrix& Ring::commutator_matrix() const { return impl_->commutator; }

const GroupRingInfo* Ring::group_info() const { return impl_->group_info.get(); }

Ring Ring::with_group_info(GroupRingInfo info) const {
  auto d = std::make_shared<Impl>(*impl_);
  d->group_info = std::make_shared<const GroupRingInfo>(std::move(info));
  return Ring(std::move(d));
}

Ring make_zn(Residue n) {
  if (n < 2) throw std::invalid_argument("make_zn: n must be at least 2");
  return Ring::from_structure(n, 1, {1}, "Z_" + std::to_string(n));
}

Ring make_structure_ring(Residue modulus, std::size_t rank, std::vector<Residue> constants, std::string name) {
  return Ring::from_structure(modulus, rank, std::move(constants), std::move(name));
}

Ring make_table_ring(std::vector<std::uint32_t> add, std::vector<std::uint32_t> mul, std::uint32_t zero,
                     std::optional<std::uint32_t> one, std::string name) {
  return Ring::from_tables(std::move(add), std::move(mul), zero, one, std::move(name));
}

Ring make_zero_multiplication_ring(Residue n) {
  if (n < 2) throw std::invalid_argument("zero multiplication ring: n must be at least 2");
  return Ring::from_structure(n, 1, {0}, "Z_" + std::to_string(n) + "^0");
}

Ring to_table_ring(const Ring& r) {
  if (r.order() > kMaxTableOrder) throw CapExceeded("to_table_ring", r.order(), kMaxTableOrder);
  const auto m = static_cast<std::uint32_t>(r.order());
  std::vector<Element> els;
  els.reserve(m);
  for (Index i = 0; i < m; ++i) els.push_back(r.element_at(i));
  std::vector<std::uint32_t> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      add[std::size_t{x} * m + y] = static_cast<std::uint32_t>(r.index_of(r.add(els[x], els[y])));
      mul[std::size_t{x} * m + y] = static_cast<std::uint32_t>(r.index_of(r.mul(els[x], els[y])));
    }
  return Ring::from_tables_unchecked(std::move(add), std::move(mul), static_cast<std::uint32_t>(r.index_of(r.zero())),
                                     r.name());
}

Ring direct_sum(const Ring& r, const Ring& s) {
  const std::string name = "(" + r.name() + " + " + s.name() + ")";
  if (r.is_structure() && s.is_structure() && r.modulus() == s.modulus()) {
    const std::size_t a = r.rank();
    const std::size_t b = s.rank();
    const std::size_t t = a + b;
    std::vector<Residue> c(t * t * t, 0);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t k = 0; k < a; ++k) c[(i * t + j) * t + k] = r.constant(i, j, k);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < b; ++k) c[((a + i) * t + a + j) * t + a + k] = s.constant(i, j, k);
    return Ring::from_structure(r.modulus(), t, std::move(c), name);
  }
  const std::uint64_t total = r.order() * s.order();
  if (r.order() > kMaxTableOrder || s.order() > kMaxTableOrder || total > kMaxTableOrder)
    throw CapExceeded("direct_sum (table form)", total, kMaxTableOrder);
  const auto m = static_cast<std::uint32_t>(total);
  const auto sm = static_cast<std::uint32_t>(s.order());
  std::vector<Element> re, se;
  for (Index i = 0; i < r.order(); ++i) re.push_back(r.element_at(i));
  for (Index i = 0; i < s.order(); ++i) se.push_back(s.element_at(i));
  std::vector<std::uint32_t> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      const auto& x1 = re[x / sm];
      const auto& x2 = se[x % sm];
      const auto& y1 = re[y / sm];
      const auto& y2 = se[y % sm];
      add[std::size_t{x} * m + y] =
          static_cast<std::uint32_t>(r.index_of(r.add(x1, y1)) * sm + s.index_of(s.add(x2, y2)));
      mul[std::size_t{x} * m + y] =
          static_cast<std::uint32_t>(r.index_of(r.mul(x1, y1)) * sm + s.index_of(s.mul(x2, y2)));
    }
  const auto zero = static_cast<std::uint32_t>(r.index_of(r.zero()) * sm + s.index_of(s.zero()));
  return Ring::from_tables_unchecked(std::move(add), std::move(mul), zero, name);
}

Element make_element(const Ring& r, std::span<const std::int64_t> coeffs) {
  if (!r.is_structure()) {
    if (coeffs.size() != 1 || coeffs[0] < 0 || static_cast<Index>(coeffs[0]) >= r.order())
      throw std::invalid_argument("make_element: table rings take a single index");
    return Element{{static_cast<Residue>(coeffs[0])}};
  }
  if (coeffs.size() != r.rank()) throw std::invalid_argument("make_element: wrong number of coefficients");
  Element e{std::vector<Residue>(r.rank())};
  for (std::size_t k = 0; k < r.rank(); ++k) e.coeffs[k] = mod_reduce(coeffs[k], r.modulus());
  return e;
}

Element make_element(const Ring& r, std::initializer_list<std::int64_t> coeffs) {
  return make_element(r, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

std::string to_string(const Ring& r, const Element& a) {
  std::ostringstream os;
  if (!r.is_structure()) {
    os << '#' << a.coeffs.at(0);
    return os.str();
  }
  os << '(';
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) os << (k ? "," : "") << a.coeffs[k];
  os << ')';
  return os.str();
}

}  // namespace finring
