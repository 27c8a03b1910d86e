#include "finring/module.hpp"

#include <stdexcept>

namespace finring {

namespace {

std::vector<Residue> apply(const FiniteModule& m, std::span<const Residue> v, const Matrix& t) {
  std::vector<Residue> out(m.dim, 0);
  for (std::size_t k = 0; k < m.dim; ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.dim; ++j) out[j] = mod_add(out[j], mod_mul(v[k], t(k, j), m.modulus), m.modulus);
  }
  return out;
}

Matrix identity(std::size_t d) {
  Matrix i(d, d);
  for (std::size_t k = 0; k < d; ++k) i(k, k) = 1;
  return i;
}

template <class F>
void for_each_vector(const FiniteModule& m, F&& visit) {
  std::vector<Residue> v(m.dim, 0);
  for (std::uint64_t i = 0; i < m.order(); ++i) {
    visit(std::span<const Residue>(v));
    for (std::size_t p = m.dim; p-- > 0;) {
      if (++v[p] < m.modulus) break;
      v[p] = 0;
    }
  }
}

std::uint64_t encode(const FiniteModule& m, std::span<const Residue> v) {
  std::uint64_t i = 0;
  for (Residue x : v) i = i * m.modulus + x;
  return i;
}

std::vector<Residue> decode(const FiniteModule& m, std::uint64_t i) {
  std::vector<Residue> v(m.dim);
  for (std::size_t p = m.dim; p-- > 0; i /= m.modulus) v[p] = static_cast<Residue>(i % m.modulus);
  return v;
}

/// Explicit closure of a vector set under addition and the action, as a membership mask.
std::vector<char> explicit_closure(const FiniteModule& m, std::vector<std::vector<Residue>> gens) {
  std::vector<char> in(m.order(), 0);
  std::vector<std::uint64_t> members{0};
  in[0] = 1;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::vector<Residue> x = gens[g];
    if (in[encode(m, x)]) continue;
    for (const auto& t : m.action) gens.push_back(apply(m, x, t));
    const std::size_t before = members.size();
    for (std::size_t k = 0; k < before; ++k) {
      std::vector<Residue> acc = decode(m, members[k]);
      while (true) {
        for (std::size_t c = 0; c < m.dim; ++c) acc[c] = mod_add(acc[c], x[c], m.modulus);
        const std::uint64_t e = encode(m, acc);
        if (in[e]) break;
        in[e] = 1;
        members.push_back(e);
      }
    }
  }
  return in;
}

}  // namespace

std::uint64_t FiniteModule::order() const {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < dim; ++i) o *= modulus;
  return o;
}

FiniteModule scalar_module(Residue n) { return FiniteModule{n, 1, {identity(1)}, "Z_" + std::to_string(n)}; }

FiniteModule scalar_restriction(const Ring& r) {
  if (!r.is_structure()) throw std::invalid_argument("scalar_restriction: structure rings only");
  return FiniteModule{r.modulus(), r.rank(), {identity(r.rank())}, r.name()};
}

HowellForm submodule_generated(const FiniteModule& m, const std::vector<std::vector<Residue>>& gens) {
  HowellForm h(m.modulus, m.dim, gens);
  while (true) {
    std::vector<std::vector<Residue>> more;
    for (std::size_t u = 0; u < h.rank(); ++u)
      for (const auto& t : m.action) more.push_back(apply(m, h.row(u), t));
    HowellForm next = h + HowellForm(m.modulus, m.dim, more);
    if (next == h) return h;
    h = std::move(next);
  }
}

bool is_submodule(const FiniteModule& m, const HowellForm& sub) {
  if (sub.modulus() != m.modulus || sub.width() != m.dim) return false;
  for (std::size_t u = 0; u < sub.rank(); ++u)
    for (const auto& t : m.action)
      if (!sub.contains(apply(m, sub.row(u), t))) return false;
  return true;
}

Certificate is_essential_submodule(const FiniteModule& m, const HowellForm& sub, std::uint64_t cap) {
  if (!is_submodule(m, sub)) throw std::invalid_argument("is_essential_submodule: not a submodule");
  if (m.order() > cap) throw CapExceeded("essential submodule scan", m.order(), cap);
  Certificate cert;
  cert.property = "essential-submodule";
  cert.verdict = true;
  for (std::size_t u = 0; u < sub.rank(); ++u)
    cert.subject.push_back(Element{std::vector<Residue>(sub.row(u).begin(), sub.row(u).end())});
  bool done = false;
  for_each_vector(m, [&](std::span<const Residue> v) {
    if (done) return;
    ++cert.examined;
    bool zero = true;
    for (Residue x : v) zero = zero && x == 0;
    if (zero || sub.contains(v)) return;
    const HowellForm cyclic = submodule_generated(m, {std::vector<Residue>(v.begin(), v.end())});
    if (intersect(cyclic, sub).is_zero()) {
      cert.verdict = false;
      cert.mode = CertMode::refutation;
      cert.witness = {Element{std::vector<Residue>(v.begin(), v.end())}};
      cert.detail = "cyclic submodule of the witness meets the submodule trivially";
      done = true;
    }
  });
  return cert;
}

CheckOutcome recheck_module(const FiniteModule& m, const HowellForm& sub, const Certificate& cert) {
  if (m.order() > kCheckerEnumerationCap) return {false, "module too large to enumerate"};
  std::vector<std::vector<Residue>> gens;
  for (std::size_t u = 0; u < sub.rank(); ++u) gens.emplace_back(sub.row(u).begin(), sub.row(u).end());
  const auto s = explicit_closure(m, gens);
  const auto meets = [&](const std::vector<Residue>& v) {
    const auto cyc = explicit_closure(m, {v});
    for (std::uint64_t i = 1; i < cyc.size(); ++i)
      if (cyc[i] && s[i]) return true;
    return false;
  };
  if (!cert.verdict) {
    if (cert.witness.size() != 1) return {false, "expected a single witness"};
    const auto& w = cert.witness[0].coeffs;
    bool zero = true;
    for (Residue c : w) zero = zero && c == 0;
    if (zero) return {false, "witness is zero"};
    return meets(w) ? CheckOutcome{false, "witness submodule meets the submodule"} : CheckOutcome{true, {}};
  }
  if (m.order() > (1u << 14)) return {false, "module too large to enumerate"};
  bool ok = true;
  for_each_vector(m, [&](std::span<const Residue> v) {
    if (!ok) return;
    std::vector<Residue> x(v.begin(), v.end());
    bool zero = true;
    for (Residue c : x) zero = zero && c == 0;
    if (!zero && !meets(x)) ok = false;
  });
  return ok ? CheckOutcome{true, {}} : CheckOutcome{false, "a cyclic submodule misses the submodule"};
}

}  // namespace finring
