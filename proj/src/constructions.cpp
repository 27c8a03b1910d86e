#include "finring/constructions.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace finring {

namespace {

constexpr std::size_t kMaxGroupRingRank = 128;

const GroupRingInfo& require_group_info(const Ring& rg, const char* who) {
  const GroupRingInfo* info = rg.group_info();
  if (!info) throw std::invalid_argument(std::string(who) + ": not a group ring");
  return *info;
}

/// The coefficient ring R inside RG (the block of the identity element).
Ring coefficient_ring(const Ring& rg) {
  const auto& info = require_group_info(rg, "coefficient_ring");
  const std::size_t r = info.coeff_rank;
  const std::size_t base = info.group->identity() * r;
  std::vector<Residue> c(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) c[(i * r + j) * r + k] = rg.constant(base + i, base + j, base + k);
  if (r == 1 && c[0] == 1) return make_zn(rg.modulus());
  return make_structure_ring(rg.modulus(), r, std::move(c));
}

std::string zn_name(Residue n) { return "Z_" + std::to_string(n); }

}  // namespace

Ring group_ring(const Ring& coeff, const GroupPtr& g, std::string name) {
  if (!coeff.is_structure()) throw std::invalid_argument("group_ring: coefficient ring must be a structure ring");
  const std::size_t r = coeff.rank();
  const std::size_t m = g->order();
  const std::size_t rank = r * m;
  if (rank > kMaxGroupRingRank) throw CapExceeded("group ring rank", rank, kMaxGroupRingRank);
  std::vector<Residue> constants(rank * rank * rank, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t xy = g->mul(static_cast<GroupTable::Elem>(x), static_cast<GroupTable::Elem>(y));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k)
            constants[((x * r + i) * rank + (y * r + j)) * rank + xy * r + k] = coeff.constant(i, j, k);
    }
  if (name.empty()) name = coeff.name() + g->name();
  Ring rg = make_structure_ring(coeff.modulus(), rank, std::move(constants), std::move(name));
  GroupRingInfo info;
  info.group = g;
  info.coeff_rank = r;
  info.coeff_unital = coeff.unital();
  if (coeff.one()) info.coeff_one = coeff.one()->coeffs;
  return rg.with_group_info(std::move(info));
}

Element group_element(const Ring& rg, GroupTable::Elem g) {
  const auto& info = require_group_info(rg, "group_element");
  if (!info.coeff_unital) throw std::invalid_argument("group_element: coefficient ring has no unit");
  if (g >= info.group->order()) throw std::out_of_range("group_element: no such group element");
  Element e = rg.zero();
  for (std::size_t k = 0; k < info.coeff_rank; ++k) e.coeffs[g * info.coeff_rank + k] = info.coeff_one[k];
  return e;
}

AdditiveSubgroup class_sum_center(const Ring& rg) {
  const auto& info = require_group_info(rg, "class_sum_center");
  const std::size_t r = info.coeff_rank;
  const std::size_t base = info.group->identity() * r;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (rg.constant(base + i, base + j, base + k) != rg.constant(base + j, base + i, base + k))
          throw std::invalid_argument("class_sum_center: coefficient ring is not commutative");
  std::vector<Element> seed;
  for (const auto& cls : info.group->conjugacy_classes())
    for (std::size_t i = 0; i < r; ++i) {
      Element e = rg.zero();
      for (auto g : cls) e.coeffs[g * r + i] = 1;
      seed.push_back(std::move(e));
    }
  return AdditiveSubgroup(rg, seed);
}

AdditiveSubgroup delta_ideal(const Ring& rg, const std::vector<GroupTable::Elem>& h) {
  const auto& info = require_group_info(rg, "delta_ideal");
  if (!info.group->is_subgroup(h)) throw std::invalid_argument("delta_ideal: H is not a subgroup");
  const std::size_t r = info.coeff_rank;
  const Residue n = rg.modulus();
  const auto e = info.group->identity();
  std::vector<Element> seed;
  for (auto x : h) {
    if (x == e) continue;
    for (std::size_t i = 0; i < r; ++i) {
      Element v = rg.zero();
      v.coeffs[x * r + i] = 1;
      v.coeffs[e * r + i] = n - 1;
      seed.push_back(std::move(v));
    }
  }
  return two_sided_ideal_generated(rg, seed);
}

DeltaDecomposition delta_decomposition(const Ring& rq8) {
  const auto& info = require_group_info(rq8, "delta_decomposition");
  if (info.group->table() != group_q8()->table()) throw std::invalid_argument("delta_decomposition: group is not Q8");
  if (info.coeff_rank != 1 || !info.coeff_unital)
    throw std::invalid_argument("delta_decomposition: coefficient ring must be Z_n");
  const Residue n = rq8.modulus();
  const auto inv2 = mod_inverse(2, n);
  if (!inv2) throw std::invalid_argument("delta_decomposition: 2 is not invertible in the coefficient ring");

  const Element one = group_element(rq8, q8_index(0, 0));
  const Element f = rq8.scale(*inv2, rq8.sub(one, group_element(rq8, q8_index(2, 0))));
  std::vector<Element> basis{f};
  for (auto g : {q8_index(1, 0), q8_index(0, 1), q8_index(1, 1)}) basis.push_back(rq8.mul(group_element(rq8, g), f));

  const GroupPtr quotient_group = group_quotient(info.group, {q8_index(0, 0), q8_index(2, 0)});
  Ring coeff = coefficient_ring(rq8);
  DeltaDecomposition d{group_ring(coeff, quotient_group, rq8.name() + "/Q8'"),
                       reify_with_basis(rq8, basis, rq8.name() + "|Delta"), basis, f};

  // coset of g in the quotient group: the quotient lists cosets by least representative
  std::vector<std::uint32_t> coset(8);
  {
    std::map<GroupTable::Elem, std::uint32_t> rep;
    for (GroupTable::Elem g = 0; g < 8; ++g) {
      const auto partner = info.group->mul(g, q8_index(2, 0));
      const auto least = std::min(g, partner);
      if (!rep.count(least)) rep.emplace(least, static_cast<std::uint32_t>(rep.size()));
      coset[g] = rep.at(least);
    }
  }
  Matrix b(4, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t c = 0; c < 8; ++c) b(i, c) = basis[i].coeffs[c];
  const auto delta_coords = [&](const Element& x) {
    auto q = solve_left(n, b, x.coeffs);
    if (!q) throw std::logic_error("delta_decomposition: xf outside the span of the basis");
    return Element{*q};
  };
  std::vector<Element> pi(8), xf(8);
  Matrix phi(8, 8);
  for (GroupTable::Elem g = 0; g < 8; ++g) {
    const Element eg = group_element(rq8, g);
    pi[g] = group_element(d.quotient, coset[g]);
    xf[g] = delta_coords(rq8.mul(eg, f));
    for (std::size_t c = 0; c < 4; ++c) {
      phi(g, c) = pi[g].coeffs[c];
      phi(g, 4 + c) = xf[g].coeffs[c];
    }
  }
  if (!left_kernel(n, phi).is_zero()) throw std::logic_error("delta_decomposition: splitting map is not injective");
  for (GroupTable::Elem g = 0; g < 8; ++g)
    for (GroupTable::Elem h = 0; h < 8; ++h) {
      const auto gh = info.group->mul(g, h);
      if (d.quotient.mul(pi[g], pi[h]) != pi[gh] || d.delta.mul(xf[g], xf[h]) != xf[gh])
        throw std::logic_error("delta_decomposition: splitting map is not multiplicative");
    }
  return d;
}

Ring quaternion_algebra(const QuaternionParams& p) {
  const Residue n = p.n;
  if (n < 2) throw std::invalid_argument("quaternion_algebra: n must be at least 2");
  const Residue a = p.a % n, b = p.b % n;
  if (!is_unit(a, n) || !is_unit(b, n)) throw std::invalid_argument("quaternion_algebra: a and b must be units");
  const Residue ab = mod_mul(a, b, n);
  std::vector<Residue> c(64, 0);
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k, Residue v) { c[(i * 4 + j) * 4 + k] = v % n; };
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, a);
  set(1, 2, 3, 1);
  set(1, 3, 2, a);
  set(2, 1, 3, n - 1);
  set(2, 2, 0, b);
  set(2, 3, 1, mod_neg(b, n));
  set(3, 1, 2, mod_neg(a, n));
  set(3, 2, 1, b);
  set(3, 3, 0, mod_neg(ab, n));
  return make_structure_ring(n, 4, std::move(c),
                             "H(" + std::to_string(a) + "," + std::to_string(b) + ";" + zn_name(n) + ")");
}

AdditiveSubgroup quaternion_center_formula(const Ring& q, const QuaternionParams& p) {
  if (!q.is_structure() || q.rank() != 4 || q.modulus() != p.n)
    throw std::invalid_argument("quaternion_center_formula: ring does not match parameters");
  const Residue t = p.n / std::gcd(p.n, Residue{2});  // generator of Ann(2) in Z_n
  std::vector<Element> seed{q.basis(0)};
  for (std::size_t i = 1; i < 4; ++i) seed.push_back(q.scale(t, q.basis(i)));
  return AdditiveSubgroup(q, seed);
}

Matrix delta_pattern_matrix(Residue n, std::span<const Residue> q) {
  if (q.size() != 4) throw std::invalid_argument("delta_pattern_matrix: expected four entries");
  const auto m = [n](Residue x) { return mod_neg(x % n, n); };
  const Residue q0 = q[0] % n, q1 = q[1] % n, q2 = q[2] % n, q3 = q[3] % n;
  Matrix out(4, 4);
  const Residue rows[4][4] = {
      {q0, q1, q2, q3}, {m(q1), q0, q3, m(q2)}, {m(q2), m(q3), q0, q1}, {m(q3), q2, m(q1), q0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = rows[i][j];
  return out;
}

namespace {

Matrix matmul(Residue n, const Matrix& x, const Matrix& y) {
  Matrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) = mod_add(out(i, j), mod_mul(x(i, k), y(k, j), n), n);
  return out;
}

}  // namespace

Ring matrix_delta(Residue n) {
  if (!mod_inverse(2, n)) throw std::invalid_argument("matrix_delta: 2 is not invertible mod n");
  std::vector<Matrix> e;
  for (std::size_t s = 0; s < 4; ++s) {
    std::vector<Residue> q(4, 0);
    q[s] = 1;
    e.push_back(delta_pattern_matrix(n, q));
  }
  std::vector<Residue> c(64);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) {
      const Matrix p = matmul(n, e[s], e[t]);
      if (p != delta_pattern_matrix(n, p.row(0))) throw std::logic_error("matrix_delta: pattern not closed");
      for (std::size_t k = 0; k < 4; ++k) c[(s * 4 + t) * 4 + k] = p(0, k);
    }
  return make_structure_ring(n, 4, std::move(c), "M_Delta(" + zn_name(n) + ")");
}

std::vector<Element> matrix_delta_basis_image(const DeltaDecomposition& d) {
  const Residue n = d.delta.modulus();
  std::vector<Element> out = d.delta_basis;
  for (auto& x : out.back().coeffs) x = mod_neg(x, n);
  return out;
}

Ring matrix_ring_2(Residue n) {
  std::vector<Residue> c(64, 0);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) c[((a * 2 + b) * 4 + (b * 2 + d)) * 4 + a * 2 + d] = 1;
  return make_structure_ring(n, 4, std::move(c), "M_2(" + zn_name(n) + ")");
}

Ring upper_triangular_2(Residue n) {
  // E11 = 0, E12 = 1, E22 = 2
  std::vector<Residue> c(27, 0);
  const auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  return make_structure_ring(n, 3, std::move(c), "UT_2(" + zn_name(n) + ")");
}

namespace {

Ring reified_delta(Residue n, bool full) {
  Ring rg = group_ring(make_zn(n), group_q8());
  const std::vector<GroupTable::Elem> h =
      full ? std::vector<GroupTable::Elem>{0, 1, 2, 3, 4, 5, 6, 7} : std::vector<GroupTable::Elem>{0, 2};
  return reify(delta_ideal(rg, h), rg.name() + (full ? "|Delta(Q8,Q8)" : "|Delta(Q8,Q8')"));
}

const std::map<std::string, Ring (*)()>& preset_table() {
  static const std::map<std::string, Ring (*)()> table = {
      {"z2q8", [] { return group_ring(make_zn(2), group_q8()); }},
      {"z3q8", [] { return group_ring(make_zn(3), group_q8()); }},
      {"z4q8", [] { return group_ring(make_zn(4), group_q8()); }},
      {"z9q8", [] { return group_ring(make_zn(9), group_q8()); }},
      {"z2q8xc2", [] { return group_ring(make_zn(2), group_product(group_q8(), group_cyclic(2))); }},
      {"matrix_delta_z9", [] { return matrix_delta(9); }},
      {"matrix_delta_z3", [] { return matrix_delta(3); }},
      {"delta_z2q8", [] { return reified_delta(2, true); }},
      {"delta_z3q8", [] { return reified_delta(3, false); }},
      {"m2_z2", [] { return matrix_ring_2(2); }},
      {"m2_z3", [] { return matrix_ring_2(3); }},
      {"ut2_z2", [] { return upper_triangular_2(2); }},
      {"ut2_z3", [] { return upper_triangular_2(3); }},
      {"zero_mult_z2", [] { return make_zero_multiplication_ring(2); }},
      {"zero_mult_z3", [] { return make_zero_multiplication_ring(3); }},
      {"zero_mult_z4", [] { return make_zero_multiplication_ring(4); }},
      {"z2_plus_z3", [] { return direct_sum(make_zn(2), make_zn(3)); }},
      {"z2_plus_m2_z2", [] { return direct_sum(make_zn(2), matrix_ring_2(2)); }},
      {"z2_plus_ut2_z2", [] { return direct_sum(make_zn(2), upper_triangular_2(2)); }},
      {"z4_plus_zero_mult_z2", [] { return direct_sum(make_zn(4), make_zero_multiplication_ring(2)); }},
  };
  return table;
}

}  // namespace

Ring preset_ring(const std::string& name) {
  const auto& table = preset_table();
  if (auto it = table.find(name); it != table.end()) return it->second().renamed(name);
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : preset_table()) out.push_back(k);
  return out;
}

std::vector<NamedRing> ring_corpus() {
  std::vector<NamedRing> out;
  for (Residue n = 2; n <= 12; ++n) out.push_back({zn_name(n), make_zn(n)});
  for (Residue n = 2; n <= 9; ++n) {
    Ring q = quaternion_algebra({n, n - 1, n - 1});
    out.push_back({q.name(), q});
  }
  for (const char* p : {"zero_mult_z2", "zero_mult_z3", "zero_mult_z4", "m2_z2", "m2_z3", "ut2_z2", "ut2_z3",
                        "z2q8", "z3q8", "z4q8", "matrix_delta_z9", "delta_z2q8", "delta_z3q8", "z2_plus_z3",
                        "z2_plus_m2_z2", "z2_plus_ut2_z2", "z4_plus_zero_mult_z2"})
    out.push_back({p, preset_ring(p)});
  return out;
}

}  // namespace finring
