#include "finring/predicates.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "finring/constructions.hpp"

namespace finring {

namespace {

Matrix matmul(Residue n, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Residue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = mod_add(out(i, j), mod_mul(x, b(k, j), n), n);
    }
  return out;
}

std::vector<Residue> vecmat(Residue n, std::span<const Residue> v, const Matrix& m) {
  std::vector<Residue> out(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = mod_add(out[j], mod_mul(v[k], m(k, j), n), n);
  }
  return out;
}

bool all_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Element from_span(std::span<const Residue> c) { return Element{std::vector<Residue>(c.begin(), c.end())}; }

std::uint64_t resolve_cap(std::uint64_t cap) { return cap ? cap : default_element_cap(); }

void require_within(const Ring& r, std::uint64_t cap, const char* what) {
  if (r.order() > cap) throw CapExceeded(what, r.order(), cap);
}

/// Visits elements with indices in [lo, hi) in canonical order.
template <class F>
void scan_range(const Ring& r, Index lo, Index hi, F&& visit) {
  if (lo >= hi) return;
  if (!r.is_structure()) {
    for (Index i = lo; i < hi; ++i) {
      const Residue c = static_cast<Residue>(i);
      if (!visit(i, std::span<const Residue>(&c, 1))) return;
    }
    return;
  }
  std::vector<Residue> coeffs = r.element_at(lo).coeffs;
  const Residue n = r.modulus();
  for (Index i = lo; i < hi; ++i) {
    if (!visit(i, std::span<const Residue>(coeffs))) return;
    for (std::size_t p = coeffs.size(); p-- > 0;) {
      if (++coeffs[p] < n) break;
      coeffs[p] = 0;
    }
  }
}

}  // namespace

AdditiveSubgroup center(const Ring& r) {
  if (r.is_structure()) return AdditiveSubgroup(r, left_kernel(r.modulus(), r.commutator_matrix()));
  std::vector<char> mask(r.order(), 0);
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    mask[x] = 1;
    for (const auto& g : r.additive_generators())
      if (r.table_mul(x, g.coeffs[0]) != r.table_mul(g.coeffs[0], x)) {
        mask[x] = 0;
        break;
      }
  }
  return AdditiveSubgroup::from_mask(r, std::move(mask));
}

bool is_central(const Ring& r, const Element& x) {
  if (r.is_structure()) return all_zero(vecmat(r.modulus(), x.coeffs, r.commutator_matrix()));
  return std::all_of(r.additive_generators().begin(), r.additive_generators().end(),
                     [&](const Element& g) { return r.mul(x, g) == r.mul(g, x); });
}

Certificate is_commutative(const Ring& r) {
  Certificate cert;
  cert.property = "commutative";
  cert.verdict = true;
  const auto& gens = r.additive_generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++cert.examined;
      if (r.mul(gens[i], gens[j]) != r.mul(gens[j], gens[i])) {
        cert.verdict = false;
        cert.mode = CertMode::refutation;
        cert.witness = {gens[i], gens[j]};
        cert.detail = "ab != ba";
        return cert;
      }
    }
  cert.detail = "all generator pairs commute";
  return cert;
}

const char* to_string(CeVariant v) {
  switch (v) {
    case CeVariant::nonunital: return "nonunital";
    case CeVariant::all_elements: return "all_elements";
    case CeVariant::unital: return "unital";
  }
  return "?";
}

std::optional<CeVariant> parse_ce_variant(const std::string& s) {
  if (s == "nonunital") return CeVariant::nonunital;
  if (s == "all_elements") return CeVariant::all_elements;
  if (s == "unital") return CeVariant::unital;
  return std::nullopt;
}

namespace {

/// Exhaustive-scan state: center as a bitset over element indices plus
/// multiplier representatives ordered so that the likeliest succeed first.
class CeScanner {
 public:
  CeScanner(const Ring& r, bool skip_central) : r_(r), skip_central_(skip_central) {
    const AdditiveSubgroup c = center(r);
    zero_index_ = r.index_of(r.zero());
    bits_.assign((r.order() + 63) / 64, 0);
    for (Index i : c.indices()) bits_[i / 64] |= std::uint64_t{1} << (i % 64);
    build_multipliers(c);
  }

  const std::vector<Element>& multipliers() const { return reps_; }
  bool in_center(Index i) const { return (bits_[i / 64] >> (i % 64)) & 1; }
  Index zero_index() const { return zero_index_; }
  bool skip_central() const { return skip_central_; }

  /// Position of the first multiplier c with ac central and non-zero, or -1.
  long first_multiplier(std::span<const Residue> a, std::vector<Residue>& scratch) const {
    for (std::size_t t = 0; t < reps_.size(); ++t) {
      Index idx;
      if (r_.is_structure()) {
        r_.mul_into(a, reps_[t].coeffs, scratch);
        idx = r_.index_of(std::span<const Residue>(scratch));
      } else {
        idx = r_.table_mul(a[0], reps_[t].coeffs[0]);
      }
      if (idx != zero_index_ && in_center(idx)) return static_cast<long>(t);
    }
    return -1;
  }

  /// True when a needs no multiplier (zero, or central under the non-unital variant).
  bool exempt(Index i) const { return i == zero_index_ || (skip_central_ && in_center(i)); }

 private:
  void build_multipliers(const AdditiveSubgroup& c) {
    const auto& idx = c.indices();
    if (!r_.is_structure() || idx.size() > (1u << 16)) {
      for (Index i : idx)
        if (i != zero_index_) reps_.push_back(r_.element_at(i));
      return;
    }
    // group multipliers by (S_c, Z_c): a works with c iff a in S_c \ Z_c
    const Residue n = r_.modulus();
    struct Class {
      Index rep;
      std::uint64_t score;
    };
    std::map<std::vector<Residue>, Class> classes;
    for (Index i : idx) {
      if (i == zero_index_) continue;
      const Element cel = r_.element_at(i);
      const Matrix m = r_.right_mult_matrix(cel);
      HowellForm s = left_kernel(n, matmul(n, m, r_.commutator_matrix()));
      HowellForm z = left_kernel(n, m);
      const std::uint64_t score = s.count() - z.count();
      if (score == 0) continue;
      std::vector<Residue> key{static_cast<Residue>(s.rank())};
      for (const HowellForm* h : {&s, &z})
        for (std::size_t u = 0; u < h->rank(); ++u) key.insert(key.end(), h->row(u).begin(), h->row(u).end());
      classes.try_emplace(std::move(key), Class{i, score});
    }
    std::vector<Class> sorted;
    for (const auto& [k, v] : classes) sorted.push_back(v);
    std::sort(sorted.begin(), sorted.end(), [](const Class& a, const Class& b) {
      return a.score != b.score ? a.score > b.score : a.rep < b.rep;
    });
    for (const auto& cl : sorted) reps_.push_back(r_.element_at(cl.rep));
  }

  const Ring& r_;
  bool skip_central_;
  Index zero_index_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Element> reps_;
};

Certificate ce_refuted(Certificate cert, const Element& a, std::uint64_t examined) {
  cert.verdict = false;
  cert.mode = CertMode::refutation;
  cert.witness = {a};
  cert.examined = examined;
  cert.detail = "no central c != 0 with ac central and non-zero";
  return cert;
}

Certificate ce_exhaustive(const Ring& r, const CeOptions& opts, Certificate cert, bool skip_central) {
  const CeScanner scan(r, skip_central);
  std::vector<Residue> scratch(r.rank());
  std::vector<char> used(scan.multipliers().size(), 0);

  std::vector<Element> prefix = opts.priority;
  prefix.insert(prefix.end(), r.additive_generators().begin(), r.additive_generators().end());
  for (std::size_t p = 0; p < prefix.size(); ++p) {
    const Index i = r.index_of(prefix[p]);
    if (scan.exempt(i)) continue;
    const long t = scan.first_multiplier(prefix[p].coeffs, scratch);
    if (t < 0) return ce_refuted(std::move(cert), prefix[p], p + 1);
    used[t] = 1;
  }

  constexpr Index kBlock = Index{1} << 12;
  const Index order = r.order();
  const Index blocks = (order + kBlock - 1) / kBlock;
  std::atomic<Index> next{0};
  std::atomic<Index> best{std::numeric_limits<Index>::max()};
  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::vector<char>> local_used(workers, std::vector<char>(used.size(), 0));

  const auto work = [&](unsigned w) {
    std::vector<Residue> tmp(r.rank());
    auto& mine = local_used[w];
    for (Index b = next++; b < blocks; b = next++) {
      const Index lo = b * kBlock;
      if (lo >= best.load()) break;
      const Index hi = std::min(order, lo + kBlock);
      scan_range(r, lo, hi, [&](Index i, std::span<const Residue> a) {
        if (scan.exempt(i)) return true;
        const long t = scan.first_multiplier(a, tmp);
        if (t >= 0) {
          mine[t] = 1;
          return true;
        }
        Index cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return false;
      });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  if (best.load() != std::numeric_limits<Index>::max())
    return ce_refuted(std::move(cert), r.element_at(best.load()), prefix.size() + best.load() + 1);

  for (const auto& lu : local_used)
    for (std::size_t t = 0; t < used.size(); ++t) used[t] |= lu[t];
  cert.verdict = true;
  cert.mode = CertMode::exhaustive;
  cert.examined = prefix.size() + order;
  for (std::size_t t = 0; t < used.size(); ++t)
    if (used[t]) cert.multipliers.push_back(scan.multipliers()[t]);
  std::sort(cert.multipliers.begin(), cert.multipliers.end());
  cert.detail = "every candidate has a central multiplier";
  return cert;
}

/// Exact test for one element: the set {c in C : ac in C} is a kernel over the
/// center's generators; a is good iff a times some kernel generator is non-zero.
class ExactCeTest {
 public:
  explicit ExactCeTest(const Ring& r) : r_(r), c_(center(r)) {}

  std::optional<Element> multiplier(const Element& a) const {
    const Residue n = r_.modulus();
    const auto& gens = c_.generators();
    const std::size_t s = gens.size();
    if (s == 0) return std::nullopt;
    std::vector<Element> ac;
    Matrix m(s, r_.rank() * r_.rank());
    for (std::size_t t = 0; t < s; ++t) {
      ac.push_back(r_.mul(a, gens[t]));
      const auto row = vecmat(n, ac.back().coeffs, r_.commutator_matrix());
      std::copy(row.begin(), row.end(), m.row(t).begin());
    }
    const HowellForm k = left_kernel(n, m);
    for (std::size_t u = 0; u < k.rank(); ++u) {
      Element y = r_.zero(), c = r_.zero();
      for (std::size_t t = 0; t < s; ++t) {
        const Residue l = k.row(u)[t];
        if (l == 0) continue;
        y = r_.add(y, r_.scale(l, ac[t]));
        c = r_.add(c, r_.scale(l, gens[t]));
      }
      if (!r_.is_zero(y)) return c;
    }
    return std::nullopt;
  }

 private:
  const Ring& r_;
  AdditiveSubgroup c_;
};

Certificate ce_refute(const Ring& r, const CeOptions& opts, Certificate cert, bool skip_central, std::uint64_t cap) {
  const ExactCeTest test(r);
  std::set<Element> used;
  std::uint64_t examined = 0;
  const auto check = [&](const Element& a) -> bool {
    ++examined;
    if (r.is_zero(a) || (skip_central && is_central(r, a))) return true;
    auto c = test.multiplier(a);
    if (!c) return false;
    used.insert(std::move(*c));
    return true;
  };
  std::vector<Element> prefix = opts.priority;
  prefix.insert(prefix.end(), r.additive_generators().begin(), r.additive_generators().end());
  for (const auto& a : prefix) {
    if (examined >= cap) throw CapExceeded("centrally essential refutation scan", r.order() + prefix.size(), cap);
    if (!check(a)) return ce_refuted(std::move(cert), a, examined);
  }
  std::optional<Element> bad;
  scan_range(r, 0, r.order(), [&](Index, std::span<const Residue> c) {
    if (examined >= cap) throw CapExceeded("centrally essential refutation scan", r.order() + prefix.size(), cap);
    Element a = from_span(c);
    if (check(a)) return true;
    bad = std::move(a);
    return false;
  });
  if (bad) return ce_refuted(std::move(cert), *bad, examined);
  cert.verdict = true;
  cert.mode = CertMode::exhaustive;
  cert.examined = examined;
  cert.multipliers.assign(used.begin(), used.end());
  cert.detail = "every candidate has a central multiplier";
  return cert;
}

}  // namespace

Certificate is_centrally_essential(const Ring& r, const CeOptions& opts) {
  if (opts.variant == CeVariant::unital && !r.unital())
    throw std::invalid_argument("centrally essential (unital variant): ring has no unit");
  for (const auto& p : opts.priority)
    if (!r.contains(p)) throw std::invalid_argument("centrally essential: priority candidate not in ring");
  const std::uint64_t cap = resolve_cap(opts.cap);
  Certificate cert;
  cert.property = "ce";
  cert.variant = to_string(opts.variant);
  const bool skip_central = opts.variant == CeVariant::nonunital;
  if (skip_central) {
    const Certificate comm = is_commutative(r);
    if (comm.verdict) {
      cert.verdict = true;
      cert.examined = comm.examined;
      cert.detail = "commutative";
      return cert;
    }
  }
  if (opts.mode == ScanMode::refute && r.is_structure()) return ce_refute(r, opts, std::move(cert), skip_central, cap);
  require_within(r, cap, "centrally essential exhaustive scan");
  return ce_exhaustive(r, opts, std::move(cert), skip_central);
}

Certificate is_essential_right_ideal(const Ring& r, const AdditiveSubgroup& i, std::uint64_t cap) {
  if (i.ring() != r) throw std::invalid_argument("is_essential_right_ideal: subgroup of another ring");
  if (!i.is_right_ideal()) throw std::invalid_argument("is_essential_right_ideal: not a right ideal");
  require_within(r, cap, "essential right ideal scan");
  Certificate cert;
  cert.property = "essential";
  cert.verdict = true;
  cert.subject = i.generators();
  std::optional<Element> bad;
  for_each_element(r, [&](Index, std::span<const Residue> c) {
    if (bad) return;
    ++cert.examined;
    Element a = from_span(c);
    if (r.is_zero(a) || i.contains(a)) return;
    if (subgroup_intersection(right_ideal_generated(r, {a}), i).is_zero()) bad = std::move(a);
  });
  if (bad) {
    cert.verdict = false;
    cert.mode = CertMode::refutation;
    cert.witness = {*bad};
    cert.detail = "principal right ideal of the witness meets the ideal trivially";
  }
  return cert;
}

Certificate is_semiprime(const Ring& r, std::uint64_t cap) {
  require_within(r, cap, "semiprime scan");
  Certificate cert;
  cert.property = "semiprime";
  cert.verdict = true;
  std::optional<Element> bad;
  for_each_element(r, [&](Index, std::span<const Residue> c) {
    if (bad) return;
    ++cert.examined;
    Element a = from_span(c);
    if (r.is_zero(a)) return;
    const AdditiveSubgroup ideal = two_sided_ideal_generated(r, {a});
    if (subgroup_product(ideal, ideal).is_zero()) bad = std::move(a);
  });
  if (bad) {
    cert.verdict = false;
    cert.mode = CertMode::refutation;
    cert.witness = {*bad};
    cert.detail = "ideal generated by the witness squares to zero";
  }
  return cert;
}

Certificate is_reduced(const Ring& r, std::uint64_t cap) {
  require_within(r, cap, "reduced scan");
  Certificate cert;
  cert.property = "reduced";
  cert.verdict = true;
  std::optional<Element> bad;
  for_each_element(r, [&](Index, std::span<const Residue> c) {
    if (bad) return;
    ++cert.examined;
    Element a = from_span(c);
    if (!r.is_zero(a) && nilpotency_index(r, a)) bad = std::move(a);
  });
  if (bad) {
    cert.verdict = false;
    cert.mode = CertMode::refutation;
    cert.witness = {*bad};
    cert.detail = "non-zero nilpotent element, index " + std::to_string(*nilpotency_index(r, *bad));
  }
  return cert;
}

namespace {

std::optional<Element> rational_witness_structure(const Ring& r, const AdditiveSubgroup& c, const Element& x) {
  const Residue n = r.modulus();
  const std::size_t k = r.rank();
  const auto& gens = c.generators();
  const std::size_t s = gens.size();
  Matrix a(s + 1, k * k);
  for (std::size_t t = 0; t < s; ++t) {
    const auto row = vecmat(n, r.mul(x, gens[t]).coeffs, r.commutator_matrix());
    std::copy(row.begin(), row.end(), a.row(t).begin());
  }
  const auto xrow = vecmat(n, x.coeffs, r.commutator_matrix());
  std::copy(xrow.begin(), xrow.end(), a.row(s).begin());
  // T_x: pairs (c, nu) with xc + nu x central
  const HowellForm t = left_kernel(n, a);
  if (t.is_zero()) return r.basis(0);  // only (0,0): every y != 0 refutes
  std::vector<Matrix> maps;
  for (std::size_t u = 0; u < t.rank(); ++u) {
    Element cu = r.zero();
    for (std::size_t v = 0; v < s; ++v)
      if (t.row(u)[v]) cu = r.add(cu, r.scale(t.row(u)[v], gens[v]));
    Matrix m = r.right_mult_matrix(cu);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = mod_add(m(i, i), t.row(u)[s], n);
    maps.push_back(std::move(m));
  }
  Matrix joint(k, k * maps.size());
  for (std::size_t u = 0; u < maps.size(); ++u)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) joint(i, u * k + j) = maps[u](i, j);
  // Y_x: y with yc + nu y = 0 for every pair in T_x
  const HowellForm y = left_kernel(n, joint);
  if (y.is_zero()) return std::nullopt;
  return from_span(y.row(0));
}

std::optional<Element> rational_witness_table(const Ring& r, const std::vector<Element>& cs, const Element& x) {
  std::vector<std::pair<Element, std::uint64_t>> t;
  for (const auto& c : cs)
    for (std::uint64_t nu = 0; nu < r.characteristic(); ++nu) {
      const Element v = r.add(r.mul(x, c), r.scale(static_cast<std::int64_t>(nu), x));
      if (is_central(r, v)) t.emplace_back(c, nu);
    }
  for (std::uint32_t yi = 0; yi < r.order(); ++yi) {
    const Element y{{yi}};
    if (r.is_zero(y)) continue;
    const bool killed = std::all_of(t.begin(), t.end(), [&](const auto& p) {
      return r.is_zero(r.add(r.mul(y, p.first), r.scale(static_cast<std::int64_t>(p.second), y)));
    });
    if (killed) return y;
  }
  return std::nullopt;
}

}  // namespace

Certificate is_centrally_rational(const Ring& r, std::uint64_t cap) {
  Certificate cert;
  cert.property = "centrally-rational";
  const Certificate comm = is_commutative(r);
  if (comm.verdict) {
    cert.verdict = true;
    cert.examined = comm.examined;
    cert.detail = "commutative: (c, n) = (0, 1) serves every x";
    return cert;
  }
  const AdditiveSubgroup c = center(r);
  std::vector<Element> cs;
  if (!r.is_structure()) cs = c.elements();
  const auto witness_for = [&](const Element& x) -> std::optional<Element> {
    ++cert.examined;
    if (is_central(r, x)) return std::nullopt;
    return r.is_structure() ? rational_witness_structure(r, c, x) : rational_witness_table(r, cs, x);
  };
  const auto refute = [&](const Element& x, const Element& y) {
    cert.verdict = false;
    cert.mode = CertMode::refutation;
    cert.witness = {x, y};
    cert.detail = "xc + nx central forces yc + ny = 0";
    return cert;
  };
  for (const auto& g : r.additive_generators())
    if (auto y = witness_for(g)) return refute(g, *y);
  std::optional<std::pair<Element, Element>> bad;
  scan_range(r, 0, r.order(), [&](Index, std::span<const Residue> co) {
    if (cert.examined >= cap) throw CapExceeded("centrally rational scan", r.order(), cap);
    Element x = from_span(co);
    if (auto y = witness_for(x)) {
      bad.emplace(std::move(x), std::move(*y));
      return false;
    }
    return true;
  });
  if (bad) return refute(bad->first, bad->second);
  cert.verdict = true;
  cert.detail = "every x admits a multiplier for every y";
  return cert;
}

const char* to_string(Side s) {
  switch (s) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::both: return "both";
  }
  return "?";
}

AdditiveSubgroup ideal_core(const AdditiveSubgroup& p) {
  const Ring& r = p.ring();
  if (p.is_two_sided()) return p;
  const bool right = p.is_right_ideal();
  if (!right && !p.is_left_ideal()) throw std::invalid_argument("ideal_core: not a one-sided ideal");
  // right ideal: {x in P : Rx in P}; left ideal: {x in P : xR in P}
  if (!r.is_structure()) {
    std::vector<char> mask(r.order(), 0);
    for (Index x : p.indices()) {
      const std::uint32_t xi = static_cast<std::uint32_t>(x);
      mask[x] = std::all_of(r.additive_generators().begin(), r.additive_generators().end(), [&](const Element& g) {
        return p.contains_index(right ? r.table_mul(g.coeffs[0], xi) : r.table_mul(xi, g.coeffs[0]));
      });
    }
    return AdditiveSubgroup::from_mask(r, std::move(mask));
  }
  const Residue n = r.modulus();
  const std::size_t k = r.rank();
  const Matrix& prow = p.howell()->rows();
  const std::size_t m = prow.rows();
  if (m == 0) return p;
  // unknowns (lambda, mu_1..mu_k): (lambda P) L_i = mu_i P for every basis e_i
  Matrix sys(m + k * m, k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const Element ei = r.basis(i);
    const Matrix li = right ? r.left_mult_matrix(ei) : r.right_mult_matrix(ei);
    const Matrix pl = matmul(n, prow, li);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < k; ++c) {
        sys(a, i * k + c) = pl(a, c);
        sys(m + i * m + a, i * k + c) = mod_neg(prow(a, c), n);
      }
  }
  const HowellForm ker = left_kernel(n, sys);
  std::vector<Element> seed;
  for (std::size_t u = 0; u < ker.rank(); ++u) seed.push_back(Element{vecmat(n, ker.row(u).subspan(0, m), prow)});
  return AdditiveSubgroup(r, seed);
}

Certificate is_strongly_bounded(const Ring& r, Side side, std::uint64_t cap) {
  require_within(r, cap, "strongly bounded scan");
  Certificate cert;
  cert.property = "strongly-bounded";
  cert.variant = to_string(side);
  cert.verdict = true;
  for (IdealKind kind : {IdealKind::right, IdealKind::left}) {
    if ((kind == IdealKind::right && side == Side::left) || (kind == IdealKind::left && side == Side::right)) continue;
    std::set<std::vector<Index>> seen;
    std::optional<Element> bad;
    for_each_element(r, [&](Index, std::span<const Residue> c) {
      if (bad) return;
      ++cert.examined;
      Element a = from_span(c);
      if (r.is_zero(a)) return;
      const AdditiveSubgroup p = ideal_generated(r, {a}, kind);
      if (!seen.insert(p.indices()).second) return;
      if (ideal_core(p).is_zero()) bad = std::move(a);
    });
    if (bad) {
      cert.verdict = false;
      cert.mode = CertMode::refutation;
      cert.witness = {*bad};
      cert.labels = {kind == IdealKind::right ? "right" : "left"};
      cert.detail = std::string("principal ") + cert.labels[0] + " ideal of the witness contains no non-zero ideal";
      return cert;
    }
  }
  return cert;
}

std::vector<MinimalRightIdeal> minimal_right_ideals(const Ring& r, std::optional<std::uint64_t> cap) {
  std::vector<MinimalRightIdeal> out;
  for (auto& ideal : all_ideals(r, IdealKind::right, cap)) {
    if (ideal.is_zero()) continue;
    const bool minimal =
        std::none_of(out.begin(), out.end(), [&](const MinimalRightIdeal& m) { return m.ideal.subset_of(ideal); });
    if (!minimal) continue;
    MinimalRightIdeal m{ideal, false, false, false, std::nullopt};
    m.nilpotent = is_nilpotent_subgroup(r, ideal);
    m.two_sided = ideal.is_two_sided();
    m.central = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                            [&](const Element& g) { return is_central(r, g); });
    if (!m.nilpotent) {
      for (const auto& e : ideal.elements()) {
        if (r.is_zero(e) || r.mul(e, e) != e || !is_central(r, e)) continue;
        if (right_ideal_generated(r, {e}) == ideal) {
          m.idempotent = e;
          break;
        }
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

Certificate minimal_right_ideals_certificate(const Ring& r, std::optional<std::uint64_t> cap) {
  Certificate cert;
  cert.property = "minimal-right-ideals";
  cert.verdict = true;
  cert.bound = cap.value_or(kOneSidedIdealCap);
  for (const auto& m : minimal_right_ideals(r, cap)) {
    cert.families.push_back(m.ideal.generators());
    cert.labels.push_back(m.nilpotent ? "nilpotent" : "non-nilpotent");
    if (m.idempotent) cert.witness.push_back(*m.idempotent);
  }
  cert.examined = r.order();
  cert.detail = std::to_string(cert.families.size()) + " minimal right ideals";
  return cert;
}

std::optional<CentralMultiplier> find_central_multiplier(const Ring& r, const Element& x) {
  if (!r.contains(x)) throw std::invalid_argument("find_central_multiplier: element not in ring");
  if (r.is_zero(x)) throw std::invalid_argument("find_central_multiplier: x must be non-zero");
  const GroupRingInfo* info = r.group_info();
  if (info && info->coeff_unital && r.modulus() == 2 && info->group->table() == group_q8()->table()) {
    // x_{k+1} = x_k (1 - a^2) until x_k kills the fundamental ideal of Z(Q8)
    const Element one = group_element(r, q8_index(0, 0));
    const Element u = r.sub(one, group_element(r, q8_index(2, 0)));
    Element c = one, xk = x;
    for (int step = 0; step < 64; ++step) {
      const Element next = r.mul(xk, u);
      if (r.is_zero(next)) break;
      xk = next;
      c = r.mul(c, u);
    }
    if (r.is_zero(r.mul(xk, u)) && is_central(r, xk)) return CentralMultiplier{c, xk, true};
  }
  for (const auto& c : center(r).elements()) {
    if (r.is_zero(c)) continue;
    Element y = r.mul(x, c);
    if (!r.is_zero(y) && is_central(r, y)) return CentralMultiplier{c, std::move(y), false};
  }
  return std::nullopt;
}

Certificate center_certificate(const Ring& r) {
  const AdditiveSubgroup c = center(r);
  Certificate cert;
  cert.property = "center";
  cert.verdict = true;
  cert.subject = c.generators();
  cert.examined = c.size();
  cert.detail = "order " + std::to_string(c.size());
  return cert;
}

Certificate idempotents_certificate(const Ring& r, std::uint64_t cap) {
  Certificate cert;
  cert.property = "idempotents";
  cert.verdict = true;
  cert.witness = idempotents(r, cap);
  for (const auto& e : cert.witness) cert.labels.push_back(is_central(r, e) ? "central" : "non-central");
  cert.examined = r.order();
  cert.detail = std::to_string(cert.witness.size()) + " idempotents";
  return cert;
}

}  // namespace finring
