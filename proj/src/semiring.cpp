#include "finring/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finring {

Semiring::Semiring(std::vector<Elem> add, std::vector<Elem> mul, Elem zero, std::optional<Elem> one,
                   std::vector<std::string> labels, std::string name)
    : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one), labels_(std::move(labels)),
      name_(std::move(name)) {
  const auto m = static_cast<Elem>(std::llround(std::sqrt(static_cast<double>(add_.size()))));
  if (m == 0 || std::size_t{m} * m != add_.size() || mul_.size() != add_.size())
    throw std::invalid_argument("semiring tables must be square and of equal order");
  if (m > kMaxTableOrder) throw CapExceeded("semiring order", m, kMaxTableOrder);
  m_ = m;
  if (labels_.empty())
    for (Elem x = 0; x < m; ++x) labels_.push_back(std::to_string(x));
  if (labels_.size() != m) throw std::invalid_argument("semiring labels do not match order");
  if (zero_ >= m) throw std::invalid_argument("semiring zero out of range");
  if (one_ && *one_ >= m) throw std::invalid_argument("semiring one out of range");

  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (this->add(a, b) >= m || this->mul(a, b) >= m) throw AxiomViolation("closure", {a, b});
  for (Elem a = 0; a < m; ++a) {
    if (this->add(zero_, a) != a || this->add(a, zero_) != a) throw AxiomViolation("additive identity", {a});
    if (this->mul(zero_, a) != zero_ || this->mul(a, zero_) != zero_) throw AxiomViolation("zero absorption", {a});
    if (one_ && (this->mul(*one_, a) != a || this->mul(a, *one_) != a)) throw AxiomViolation("multiplicative identity", {a});
  }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (this->add(a, b) != this->add(b, a)) throw AxiomViolation("additive commutativity", {a, b});
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c) {
        if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c)))
          throw AxiomViolation("additive associativity", {a, b, c});
        if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
          throw AxiomViolation("multiplicative associativity", {a, b, c});
        if (this->mul(a, this->add(b, c)) != this->add(this->mul(a, b), this->mul(a, c)))
          throw AxiomViolation("left distributivity", {a, b, c});
        if (this->mul(this->add(a, b), c) != this->add(this->mul(a, c), this->mul(b, c)))
          throw AxiomViolation("right distributivity", {a, b, c});
      }
  if (name_.empty()) name_ = "S" + std::to_string(m);
}

Semiring make_semiring(std::vector<Semiring::Elem> add, std::vector<Semiring::Elem> mul, Semiring::Elem zero,
                       std::optional<Semiring::Elem> one, std::vector<std::string> labels, std::string name) {
  return Semiring(std::move(add), std::move(mul), zero, one, std::move(labels), std::move(name));
}

namespace {

bool central(const Semiring& s, Semiring::Elem x) {
  for (Semiring::Elem y = 0; y < s.order(); ++y)
    if (s.mul(x, y) != s.mul(y, x)) return false;
  return true;
}

Element el(Semiring::Elem x) { return Element{{x}}; }

}  // namespace

std::vector<Semiring::Elem> semiring_center(const Semiring& s) {
  std::vector<Semiring::Elem> out;
  for (Semiring::Elem x = 0; x < s.order(); ++x)
    if (central(s, x)) out.push_back(x);
  return out;
}

Certificate semiring_center_certificate(const Semiring& s) {
  Certificate cert;
  cert.property = "semiring-center";
  cert.verdict = true;
  for (auto x : semiring_center(s)) cert.subject.push_back(el(x));
  cert.examined = s.order();
  cert.detail = "order " + std::to_string(cert.subject.size());
  return cert;
}

Certificate is_commutative_semiring(const Semiring& s) {
  Certificate cert;
  cert.property = "semiring-commutative";
  cert.verdict = true;
  for (Semiring::Elem a = 0; a < s.order(); ++a)
    for (Semiring::Elem b = a + 1; b < s.order(); ++b) {
      ++cert.examined;
      if (s.mul(a, b) != s.mul(b, a)) {
        cert.verdict = false;
        cert.mode = CertMode::refutation;
        cert.witness = {el(a), el(b)};
        cert.detail = "ab != ba";
        return cert;
      }
    }
  return cert;
}

Certificate is_ce_semiring(const Semiring& s) {
  Certificate cert;
  cert.property = "semiring-ce";
  cert.variant = "nonunital";
  const Certificate comm = is_commutative_semiring(s);
  cert.verdict = true;
  if (comm.verdict) {
    cert.examined = comm.examined;
    cert.detail = "commutative";
    return cert;
  }
  const auto c = semiring_center(s);
  std::vector<char> in_c(s.order(), 0);
  for (auto x : c) in_c[x] = 1;
  std::vector<Semiring::Elem> used;
  for (Semiring::Elem a = 0; a < s.order(); ++a) {
    ++cert.examined;
    if (in_c[a]) continue;
    const auto it = std::find_if(c.begin(), c.end(), [&](Semiring::Elem x) {
      const auto y = s.mul(a, x);
      return x != s.zero() && y != s.zero() && in_c[y];
    });
    if (it == c.end()) {
      cert.verdict = false;
      cert.mode = CertMode::refutation;
      cert.witness = {el(a)};
      cert.detail = "no central x != 0 with ax central and non-zero";
      return cert;
    }
    used.push_back(*it);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto x : used) cert.multipliers.push_back(el(x));
  cert.detail = "every non-central element has a central multiplier";
  return cert;
}

Certificate is_semisubtractive(const Semiring& s) {
  Certificate cert;
  cert.property = "semisubtractive";
  cert.verdict = true;
  for (Semiring::Elem a = 0; a < s.order(); ++a)
    for (Semiring::Elem b = a + 1; b < s.order(); ++b) {
      ++cert.examined;
      bool found = false;
      for (Semiring::Elem x = 0; x < s.order() && !found; ++x) found = s.add(a, x) == b || s.add(b, x) == a;
      if (!found) {
        cert.verdict = false;
        cert.mode = CertMode::refutation;
        cert.witness = {el(a), el(b)};
        cert.detail = "neither element reaches the other by addition";
        return cert;
      }
    }
  return cert;
}

Semiring example_order5() {
  // 0, 1, a, b, c
  std::vector<Semiring::Elem> add = {
      0, 1, 2, 3, 4,  //
      1, 1, 1, 3, 1,  //
      2, 1, 2, 3, 2,  //
      3, 3, 3, 3, 3,  //
      4, 1, 2, 3, 4,
  };
  std::vector<Semiring::Elem> mul = {
      0, 0, 0, 0, 0,  //
      0, 1, 2, 3, 4,  //
      0, 2, 2, 2, 4,  //
      0, 3, 3, 3, 4,  //
      0, 4, 4, 4, 4,
  };
  return Semiring(std::move(add), std::move(mul), 0, 1, {"0", "1", "a", "b", "c"}, "S5");
}

Semiring boolean_semiring() { return Semiring({0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1, {"0", "1"}, "B"); }

Semiring diamond_semiring() {
  std::vector<Semiring::Elem> add = {
      0, 1, 2, 3,  //
      1, 1, 3, 3,  //
      2, 3, 2, 3,  //
      3, 3, 3, 3,
  };
  return Semiring(std::move(add), std::vector<Semiring::Elem>(16, 0), 0, std::nullopt, {"0", "u", "v", "w"}, "D4");
}

Semiring ring_as_semiring(const Ring& r) {
  const Ring t = r.is_structure() ? to_table_ring(r) : r;
  const auto m = static_cast<Semiring::Elem>(t.order());
  std::vector<Semiring::Elem> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (Semiring::Elem a = 0; a < m; ++a)
    for (Semiring::Elem b = 0; b < m; ++b) {
      add[std::size_t{a} * m + b] = t.table_add(a, b);
      mul[std::size_t{a} * m + b] = t.table_mul(a, b);
    }
  std::optional<Semiring::Elem> one;
  if (r.one()) one = static_cast<Semiring::Elem>(r.index_of(*r.one()));
  return Semiring(std::move(add), std::move(mul), t.table_zero(), one, {}, r.name());
}

CheckOutcome recheck(const Semiring& s, const Certificate& cert) {
  const auto fail = [](std::string why) { return CheckOutcome{false, std::move(why)}; };
  for (const auto* group : {&cert.witness, &cert.multipliers, &cert.subject})
    for (const auto& e : *group)
      if (e.coeffs.size() != 1 || e.coeffs[0] >= s.order()) return fail("certificate element outside the semiring");
  const auto commutes = [&](Semiring::Elem x) {
    for (Semiring::Elem y = 0; y < s.order(); ++y)
      if (s.mul(x, y) != s.mul(y, x)) return false;
    return true;
  };
  const std::string& p = cert.property;
  if (p == "semiring-center") {
    std::size_t count = 0;
    for (Semiring::Elem x = 0; x < s.order(); ++x) count += commutes(x);
    if (count != cert.subject.size()) return fail("center has the wrong order");
    for (const auto& e : cert.subject)
      if (!commutes(e.coeffs[0])) return fail("listed element is not central");
    return {true, {}};
  }
  if (p == "semiring-commutative") {
    if (!cert.verdict) {
      if (cert.witness.size() != 2) return fail("expected witness pair");
      const auto a = cert.witness[0].coeffs[0], b = cert.witness[1].coeffs[0];
      return s.mul(a, b) != s.mul(b, a) ? CheckOutcome{true, {}} : fail("witness commutes");
    }
    for (Semiring::Elem x = 0; x < s.order(); ++x)
      if (!commutes(x)) return fail("non-commuting pair exists");
    return {true, {}};
  }
  if (p == "semiring-ce") {
    const auto good = [&](Semiring::Elem a, Semiring::Elem x) {
      const auto y = s.mul(a, x);
      return x != s.zero() && commutes(x) && y != s.zero() && commutes(y);
    };
    if (!cert.verdict) {
      if (cert.witness.size() != 1) return fail("expected a single witness");
      const auto a = cert.witness[0].coeffs[0];
      if (commutes(a)) return fail("witness is central");
      for (Semiring::Elem x = 0; x < s.order(); ++x)
        if (good(a, x)) return fail("witness has a central multiplier");
      return {true, {}};
    }
    for (Semiring::Elem a = 0; a < s.order(); ++a) {
      if (commutes(a)) continue;
      const bool ok = std::any_of(cert.multipliers.begin(), cert.multipliers.end(),
                                  [&](const Element& m) { return good(a, m.coeffs[0]); });
      if (!ok) return fail("element without listed multiplier");
    }
    return {true, {}};
  }
  if (p == "semisubtractive") {
    const auto reach = [&](Semiring::Elem a, Semiring::Elem b) {
      for (Semiring::Elem x = 0; x < s.order(); ++x)
        if (s.add(a, x) == b || s.add(b, x) == a) return true;
      return false;
    };
    if (!cert.verdict) {
      if (cert.witness.size() != 2) return fail("expected witness pair");
      const auto a = cert.witness[0].coeffs[0], b = cert.witness[1].coeffs[0];
      return a != b && !reach(a, b) ? CheckOutcome{true, {}} : fail("witness pair is connected");
    }
    for (Semiring::Elem a = 0; a < s.order(); ++a)
      for (Semiring::Elem b = a + 1; b < s.order(); ++b)
        if (!reach(a, b)) return fail("unconnected pair exists");
    return {true, {}};
  }
  return fail("no semiring checker for property '" + p + "'");
}

}  // namespace finring
