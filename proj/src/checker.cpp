#include "finring/checker.hpp"

#include <algorithm>
#include <set>

#include "finring/howell.hpp"
#include "finring/subgroup.hpp"

namespace finring {

namespace {

CheckOutcome pass() { return {true, {}}; }
CheckOutcome fail(std::string why) { return {false, std::move(why)}; }

bool commutes_with_generators(const Ring& r, const Element& x) {
  for (const auto& g : r.additive_generators())
    if (r.mul(x, g) != r.mul(g, x)) return false;
  return true;
}

/// Explicit element set with generator-driven closure.
class ElementSet {
 public:
  explicit ElementSet(const Ring& r) : r_(&r), in_(r.order(), 0) { insert_raw(r.index_of(r.zero())); }

  bool contains(Index i) const { return in_[i]; }
  bool contains(const Element& e) const { return in_[r_->index_of(e)]; }
  const std::vector<Index>& members() const { return list_; }
  std::size_t size() const { return list_.size(); }

  /// Replaces the set by the subgroup generated by itself and x.
  void add_generator(const Element& x) {
    const Index xi = r_->index_of(x);
    if (in_[xi]) return;
    gens_.push_back(x);
    const std::size_t before = list_.size();
    for (std::size_t k = 0; k < before; ++k) {
      Element acc = r_->add(r_->element_at(list_[k]), x);
      for (Index ai = r_->index_of(acc); !in_[ai]; ai = r_->index_of(acc)) {
        insert_raw(ai);
        acc = r_->add(acc, x);
      }
    }
  }

  /// Closes under multiplication by ring generators on the requested sides.
  void close_ideal(bool right, bool left) {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const Element x = gens_[k];
      for (const auto& g : r_->additive_generators()) {
        if (right) add_generator(r_->mul(x, g));
        if (left) add_generator(r_->mul(g, x));
      }
    }
  }

  const std::vector<Element>& generators() const { return gens_; }

 private:
  void insert_raw(Index i) {
    in_[i] = 1;
    list_.push_back(i);
  }

  const Ring* r_;
  std::vector<char> in_;
  std::vector<Index> list_;
  std::vector<Element> gens_;
};

ElementSet span_of(const Ring& r, const std::vector<Element>& gens) {
  ElementSet s(r);
  for (const auto& g : gens) s.add_generator(g);
  return s;
}

ElementSet ideal_of(const Ring& r, const Element& a, bool right, bool left) {
  ElementSet s(r);
  s.add_generator(a);
  s.close_ideal(right, left);
  return s;
}

/// Central elements: by direct enumeration for small rings, otherwise from a
/// commutation kernel rebuilt here from basis products.
class CenterOracle {
 public:
  explicit CenterOracle(const Ring& r) : r_(r) {
    if (r.order() <= kDirectCenterLimit) {
      bits_.assign(r.order(), 0);
      for (Index i = 0; i < r.order(); ++i) {
        if (commutes_with_generators(r, r.element_at(i))) {
          bits_[i] = 1;
          list_.push_back(r.element_at(i));
        }
      }
      return;
    }
    const std::size_t k = r.rank();
    const Residue n = r.modulus();
    Matrix d(k, k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const Element c = r.sub(r.mul(r.basis(i), r.basis(j)), r.mul(r.basis(j), r.basis(i)));
        for (std::size_t t = 0; t < k; ++t) d(i, j * k + t) = c.coeffs[t];
      }
    const HowellForm h = left_kernel(n, d);
    if (h.count() > kCheckerEnumerationCap) throw CapExceeded("checker center", h.count(), kCheckerEnumerationCap);
    h.for_each([&](std::span<const Residue> v) { list_.push_back(Element{{v.begin(), v.end()}}); });
    for (const auto& z : list_)
      if (!commutes_with_generators(r, z)) throw std::logic_error("checker center contains a non-central element");
    if (r.order() <= kCheckerEnumerationCap) {
      bits_.assign(r.order(), 0);
      for (const auto& z : list_) bits_[r.index_of(z)] = 1;
    }
  }

  bool central_index(Index i) const { return bits_[i]; }
  bool has_bits() const { return !bits_.empty(); }
  bool central(const Element& x) const {
    if (!bits_.empty()) return bits_[r_.index_of(x)];
    return commutes_with_generators(r_, x);
  }
  const std::vector<Element>& elements() const { return list_; }

 private:
  static constexpr std::uint64_t kDirectCenterLimit = std::uint64_t{1} << 16;
  const Ring& r_;
  std::vector<char> bits_;
  std::vector<Element> list_;
};

bool require_enumerable(const Ring& r, std::uint64_t limit = kCheckerEnumerationCap) { return r.order() <= limit; }

CheckOutcome check_commutative(const Ring& r, const Certificate& c) {
  if (!c.verdict) {
    if (c.witness.size() != 2) return fail("expected witness pair");
    return r.mul(c.witness[0], c.witness[1]) != r.mul(c.witness[1], c.witness[0]) ? pass() : fail("witness commutes");
  }
  for (const auto& g : r.additive_generators())
    if (!commutes_with_generators(r, g)) return fail("generators do not commute");
  return pass();
}

CheckOutcome check_center(const Ring& r, const Certificate& c) {
  if (!require_enumerable(r)) return fail("ring too large to enumerate");
  const CenterOracle oracle(r);
  for (const auto& g : c.subject)
    if (!oracle.central(g)) return fail("claimed center generator is not central");
  const ElementSet span = span_of(r, c.subject);
  if (span.size() != oracle.elements().size()) return fail("claimed center has the wrong order");
  return pass();
}

CheckOutcome check_ce(const Ring& r, const Certificate& c) {
  const bool nonunital = c.variant == "nonunital";
  if (c.variant == "unital" && !r.unital()) return fail("unital variant on a ring without unit");
  if (!c.verdict) {
    if (c.witness.size() != 1) return fail("expected a single witness");
    const Element& a = c.witness[0];
    if (r.is_zero(a)) return fail("witness is zero");
    if (nonunital && commutes_with_generators(r, a)) return fail("witness is central");
    const CenterOracle oracle(r);
    for (const auto& z : oracle.elements()) {
      if (r.is_zero(z)) continue;
      const Element y = r.mul(a, z);
      if (!r.is_zero(y) && oracle.central(y)) return fail("witness has a central multiplier");
    }
    return pass();
  }
  if (nonunital && c.multipliers.empty()) {
    Certificate comm;
    comm.verdict = true;
    return check_commutative(r, comm);
  }
  if (!require_enumerable(r)) return fail("ring too large to enumerate");
  const CenterOracle oracle(r);
  for (const auto& m : c.multipliers)
    if (r.is_zero(m) || !oracle.central(m)) return fail("multiplier is zero or not central");
  const Index zero = r.index_of(r.zero());
  if (r.is_structure()) {
    std::vector<Residue> a = r.zero().coeffs, y(r.rank());
    for (Index i = 0; i < r.order(); ++i) {
      if (i != zero && !(nonunital && oracle.central_index(i))) {
        const bool ok = std::any_of(c.multipliers.begin(), c.multipliers.end(), [&](const Element& m) {
          r.mul_into(a, m.coeffs, y);
          const Index yi = r.index_of(std::span<const Residue>(y));
          return yi != zero && oracle.central_index(yi);
        });
        if (!ok) return fail("element " + to_string(r, Element{a}) + " has no listed multiplier");
      }
      for (std::size_t p = a.size(); p-- > 0;) {
        if (++a[p] < r.modulus()) break;
        a[p] = 0;
      }
    }
    return pass();
  }
  for (Index i = 0; i < r.order(); ++i) {
    const Element a = r.element_at(i);
    if (i == zero || (nonunital && oracle.central_index(i))) continue;
    const bool ok = std::any_of(c.multipliers.begin(), c.multipliers.end(), [&](const Element& m) {
      const Element y = r.mul(a, m);
      return !r.is_zero(y) && oracle.central(y);
    });
    if (!ok) return fail("element " + to_string(r, a) + " has no listed multiplier");
  }
  return pass();
}

CheckOutcome check_essential(const Ring& r, const Certificate& c) {
  if (!require_enumerable(r, 1u << 16)) return fail("ring too large to enumerate");
  const ElementSet ideal = span_of(r, c.subject);
  const auto meets = [&](const Element& a) {
    const ElementSet p = ideal_of(r, a, true, false);
    return std::any_of(p.members().begin(), p.members().end(),
                       [&](Index i) { return ideal.contains(i) && !r.is_zero(r.element_at(i)); });
  };
  if (!c.verdict) {
    if (c.witness.size() != 1 || r.is_zero(c.witness[0])) return fail("expected a non-zero witness");
    return meets(c.witness[0]) ? fail("witness ideal meets the subject") : pass();
  }
  for (Index i = 0; i < r.order(); ++i) {
    const Element a = r.element_at(i);
    if (!r.is_zero(a) && !meets(a)) return fail("principal right ideal misses the subject");
  }
  return pass();
}

bool square_zero(const Ring& r, const ElementSet& s) {
  for (const auto& x : s.generators())
    for (const auto& y : s.generators())
      if (!r.is_zero(r.mul(x, y))) return false;
  return true;
}

CheckOutcome check_semiprime(const Ring& r, const Certificate& c) {
  if (!c.verdict) {
    if (c.witness.size() != 1 || r.is_zero(c.witness[0])) return fail("expected a non-zero witness");
    return square_zero(r, ideal_of(r, c.witness[0], true, true)) ? pass() : fail("witness ideal is not square-zero");
  }
  if (!require_enumerable(r, 1u << 14)) return fail("ring too large to enumerate");
  for (Index i = 0; i < r.order(); ++i) {
    const Element a = r.element_at(i);
    if (!r.is_zero(a) && square_zero(r, ideal_of(r, a, true, true))) return fail("square-zero ideal found");
  }
  return pass();
}

CheckOutcome check_reduced(const Ring& r, const Certificate& c) {
  if (!c.verdict) {
    if (c.witness.size() != 1 || r.is_zero(c.witness[0])) return fail("expected a non-zero witness");
    Element p = c.witness[0];
    for (Index k = 1; k <= r.order(); ++k) {
      if (r.is_zero(p)) return pass();
      p = r.mul(p, c.witness[0]);
    }
    return fail("witness is not nilpotent");
  }
  if (!require_enumerable(r)) return fail("ring too large to enumerate");
  for (Index i = 0; i < r.order(); ++i) {
    const Element a = r.element_at(i);
    if (!r.is_zero(a) && r.is_zero(r.mul(a, a))) return fail("square-zero element found");
  }
  return pass();
}

CheckOutcome check_rational(const Ring& r, const Certificate& c) {
  if (c.verdict) {
    for (Index i = 0; i < std::min<Index>(r.order(), kCheckerEnumerationCap); ++i)
      if (!commutes_with_generators(r, r.element_at(i)))
        return fail("positive verdict on a non-commutative ring cannot be re-verified");
    return r.order() <= kCheckerEnumerationCap ? pass() : fail("ring too large to enumerate");
  }
  if (c.witness.size() != 2) return fail("expected witness pair");
  const Element& x = c.witness[0];
  const Element& y = c.witness[1];
  if (r.is_zero(y)) return fail("y is zero");
  const CenterOracle oracle(r);
  for (const auto& z : oracle.elements())
    for (std::uint64_t nu = 0; nu < r.characteristic(); ++nu) {
      const auto k = static_cast<std::int64_t>(nu);
      if (oracle.central(r.add(r.mul(x, z), r.scale(k, x))) && !r.is_zero(r.add(r.mul(y, z), r.scale(k, y))))
        return fail("a multiplier separates the witness");
    }
  return pass();
}

bool contains_nonzero_ideal(const Ring& r, const ElementSet& p) {
  for (Index i : p.members()) {
    const Element x = r.element_at(i);
    if (r.is_zero(x)) continue;
    const ElementSet j = ideal_of(r, x, true, true);
    if (std::all_of(j.members().begin(), j.members().end(), [&](Index m) { return p.contains(m); })) return true;
  }
  return false;
}

CheckOutcome check_bounded(const Ring& r, const Certificate& c) {
  if (!c.verdict) {
    if (c.witness.size() != 1 || c.labels.size() != 1) return fail("expected witness and side");
    const bool right = c.labels[0] == "right";
    const ElementSet p = ideal_of(r, c.witness[0], right, !right);
    return contains_nonzero_ideal(r, p) ? fail("witness ideal contains a non-zero ideal") : pass();
  }
  if (!require_enumerable(r, 1u << 12)) return fail("ring too large to enumerate");
  for (bool right : {true, false}) {
    if ((right && c.variant == "left") || (!right && c.variant == "right")) continue;
    std::set<std::vector<Index>> seen;
    for (Index i = 0; i < r.order(); ++i) {
      const Element a = r.element_at(i);
      if (r.is_zero(a)) continue;
      const ElementSet p = ideal_of(r, a, right, !right);
      auto key = p.members();
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      if (!contains_nonzero_ideal(r, p)) return fail("one-sided ideal without a non-zero ideal");
    }
  }
  return pass();
}

CheckOutcome check_idempotents(const Ring& r, const Certificate& c) {
  if (!require_enumerable(r)) return fail("ring too large to enumerate");
  std::set<Element> claimed(c.witness.begin(), c.witness.end());
  std::size_t found = 0;
  for (Index i = 0; i < r.order(); ++i) {
    const Element e = r.element_at(i);
    if (r.mul(e, e) != e) continue;
    ++found;
    if (!claimed.count(e)) return fail("idempotent missing from the list");
  }
  if (found != claimed.size()) return fail("list contains non-idempotents");
  for (std::size_t k = 0; k < c.witness.size() && k < c.labels.size(); ++k)
    if ((c.labels[k] == "central") != commutes_with_generators(r, c.witness[k])) return fail("wrong central label");
  return pass();
}

CheckOutcome check_minimal(const Ring& r, const Certificate& c) {
  if (!require_enumerable(r, 1u << 12)) return fail("ring too large to enumerate");
  if (c.labels.size() != c.families.size()) return fail("label count mismatch");
  std::vector<ElementSet> mins;
  for (std::size_t f = 0; f < c.families.size(); ++f) {
    ElementSet s = span_of(r, c.families[f]);
    if (s.size() < 2) return fail("zero ideal listed");
    for (const auto& g : s.generators())
      for (const auto& x : r.additive_generators())
        if (!s.contains(r.mul(g, x))) return fail("listed subgroup is not a right ideal");
    for (Index i : s.members()) {
      const Element a = r.element_at(i);
      if (!r.is_zero(a) && ideal_of(r, a, true, false).size() != s.size()) return fail("listed ideal is not minimal");
    }
    // I^k by explicit products until zero or stable
    ElementSet power = s;
    bool nilpotent = false;
    for (std::size_t step = 0; step <= s.size(); ++step) {
      if (power.size() == 1) {
        nilpotent = true;
        break;
      }
      ElementSet next(r);
      for (const auto& x : power.generators())
        for (const auto& y : s.generators()) next.add_generator(r.mul(x, y));
      if (next.size() == power.size()) break;
      power = std::move(next);
    }
    if (nilpotent != (c.labels[f] == "nilpotent")) return fail("wrong nilpotency label");
    mins.push_back(std::move(s));
  }
  for (Index i = 0; i < r.order(); ++i) {
    const Element a = r.element_at(i);
    if (r.is_zero(a)) continue;
    const ElementSet p = ideal_of(r, a, true, false);
    const bool covers = std::any_of(mins.begin(), mins.end(), [&](const ElementSet& m) {
      return std::all_of(m.members().begin(), m.members().end(), [&](Index x) { return p.contains(x); });
    });
    if (!covers) return fail("a minimal right ideal is missing");
  }
  return pass();
}

/// A nilpotent minimal two-sided ideal (generated by subject[0]) containing
/// the non-central witness[0], which fails to commute with witness[1].
CheckOutcome check_noncentral_minimal(const Ring& r, const Certificate& c) {
  if (c.verdict) return fail("only counterexamples are certified");
  if (c.subject.size() != 1 || c.witness.size() != 2) return fail("expected one generator and a witness pair");
  if (!require_enumerable(r, 1u << 16)) return fail("ring too large to enumerate");
  const ElementSet i = ideal_of(r, c.subject[0], true, true);
  if (i.size() < 2) return fail("ideal is zero");
  for (Index m : i.members()) {
    const Element a = r.element_at(m);
    if (!r.is_zero(a) && ideal_of(r, a, true, true).size() != i.size()) return fail("ideal is not minimal");
  }
  ElementSet power = i;
  for (std::size_t step = 0; power.size() > 1; ++step) {
    if (step > i.size()) return fail("ideal is not nilpotent");
    ElementSet next(r);
    for (const auto& x : power.generators())
      for (const auto& y : i.generators()) next.add_generator(r.mul(x, y));
    if (next.size() == power.size()) return fail("ideal is not nilpotent");
    power = std::move(next);
  }
  if (!i.contains(c.witness[0])) return fail("witness outside the ideal");
  const Element& x = c.witness[0];
  const Element& s = c.witness[1];
  return r.mul(x, s) != r.mul(s, x) ? pass() : fail("witness commutes");
}

}  // namespace

CheckOutcome recheck(const Ring& r, const Certificate& cert) {
  try {
    for (const auto* group : {&cert.witness, &cert.multipliers, &cert.subject})
      for (const auto& e : *group)
        if (!r.contains(e)) return fail("certificate element outside the ring");
    const std::string& p = cert.property;
    if (p == "commutative") return check_commutative(r, cert);
    if (p == "center") return check_center(r, cert);
    if (p == "ce") return check_ce(r, cert);
    if (p == "essential") return check_essential(r, cert);
    if (p == "semiprime") return check_semiprime(r, cert);
    if (p == "reduced") return check_reduced(r, cert);
    if (p == "centrally-rational") return check_rational(r, cert);
    if (p == "strongly-bounded") return check_bounded(r, cert);
    if (p == "idempotents") return check_idempotents(r, cert);
    if (p == "minimal-right-ideals") return check_minimal(r, cert);
    if (p == "noncentral-minimal-ideal") return check_noncentral_minimal(r, cert);
    return fail("no ring checker for property '" + p + "'");
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace finring
