#include "finring/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "finring/predicates.hpp"
#include "finring/suite.hpp"

namespace finring {
namespace {

std::vector<Residue> prime_divisors(std::uint64_t n) {
  std::vector<Residue> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(static_cast<Residue>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<Residue>(n));
  return out;
}

/// Elements x with p x = 0.
std::vector<Element> torsion(const Ring& r, Residue p, std::uint64_t cap) {
  std::vector<Element> out;
  if (r.is_structure()) {
    const std::size_t k = r.rank();
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = p % r.modulus();
    const HowellForm h = left_kernel(r.modulus(), m);
    if (h.count() > cap) throw CapExceeded("p-torsion", h.count(), cap);
    h.for_each([&](std::span<const Residue> v) { out.push_back(Element{{v.begin(), v.end()}}); });
    return out;
  }
  for (Index i = 0; i < r.order(); ++i) {
    const Element x = r.element_at(i);
    if (r.is_zero(r.scale(p, x))) out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> key_of(const AdditiveSubgroup& s) {
  if (const HowellForm* h = s.howell()) {
    std::vector<std::uint64_t> k;
    for (std::size_t i = 0; i < h->rank(); ++i)
      for (Residue v : h->row(i)) k.push_back(v);
    return k;
  }
  return s.indices();
}

struct Instance {
  std::string label;
  Json spec;
};

std::vector<Instance> family_instances(const SearchOptions& o) {
  std::vector<Instance> out;
  if (o.family == "znq8") {
    for (Residue n = 2; n <= o.max_param; ++n) out.push_back({"Z_" + std::to_string(n) + "Q8", znq8_spec(n)});
  } else if (o.family == "zn") {
    for (Residue n = 2; n <= o.max_param; ++n) out.push_back({"Z_" + std::to_string(n), zn_spec(n)});
  } else if (o.family == "quaternion") {
    for (Residue n = 2; n <= o.max_param; ++n)
      for (Residue a = 1; a < n; ++a)
        for (Residue b = 1; b < n; ++b)
          if (is_unit(a, n) && is_unit(b, n))
            out.push_back({"H(" + std::to_string(a) + "," + std::to_string(b) + ";Z_" + std::to_string(n) + ")",
                           quaternion_spec(n, a, b)});
  } else if (o.family == "corpus") {
    for (const auto& s : corpus_specs()) out.push_back({{}, s});
  } else {
    throw std::invalid_argument("unknown search family '" + o.family + "'");
  }
  return out;
}

/// First pair (x, s) with x a generator of the ideal and s a ring generator not commuting with it.
std::optional<std::pair<Element, Element>> noncentral_pair(const Ring& r, const AdditiveSubgroup& i) {
  for (const auto& x : i.generators())
    for (const auto& s : r.additive_generators())
      if (r.mul(x, s) != r.mul(s, x)) return std::make_pair(x, s);
  return std::nullopt;
}

}  // namespace

std::vector<std::string> search_families() { return {"znq8", "zn", "quaternion", "corpus"}; }

std::vector<AdditiveSubgroup> minimal_ideals(const Ring& r, std::uint64_t cap) {
  std::map<std::vector<std::uint64_t>, AdditiveSubgroup> principal;
  for (Residue p : prime_divisors(r.characteristic()))
    for (const auto& x : torsion(r, p, cap)) {
      if (r.is_zero(x)) continue;
      AdditiveSubgroup i = two_sided_ideal_generated(r, {x});
      principal.emplace(key_of(i), std::move(i));
    }
  std::vector<AdditiveSubgroup> out;
  for (const auto& [k, i] : principal) {
    bool minimal = true;
    for (const auto& [k2, j] : principal)
      if (j.size() < i.size() && j.subset_of(i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  std::sort(out.begin(), out.end(), [](const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.indices() < b.indices();
  });
  return out;
}

Report run_search(const SearchOptions& opts) {
  const std::uint64_t cap = opts.cap ? opts.cap : default_element_cap();
  Report report;
  report.command = "search";
  std::size_t ce_rings = 0, nilpotent = 0, found = 0, skipped = 0;
  for (const auto& inst : family_instances(opts)) {
    CheckResult res;
    const auto start = std::chrono::steady_clock::now();
    res.passed = true;
    try {
      const Ring r = build_ring(inst.spec);
      res.check = "search/" + (inst.label.empty() ? r.name() : inst.label);
      if (r.order() > cap) {
        ++skipped;
        res.verdict = "skipped";
        res.note = "order " + std::to_string(r.order()) + " exceeds the cap " + std::to_string(cap);
      } else {
        CeOptions o;
        o.cap = cap;
        o.workers = opts.workers;
        const Certificate c = is_centrally_essential(r, o);
        res.evidence.push_back({TargetKind::ring, inst.spec, c});
        res.examined += c.examined;
        if (!c.verdict) {
          res.verdict = "not centrally essential";
        } else if (is_commutative(r).verdict) {
          ++ce_rings;
          res.verdict = "commutative (vacuous)";
        } else {
          ++ce_rings;
          std::size_t mins = 0, nil = 0;
          for (const auto& i : minimal_ideals(r, cap)) {
            ++mins;
            if (!is_nilpotent_subgroup(r, i)) continue;
            ++nil;
            if (const auto pair = noncentral_pair(r, i)) {
              ++found;
              Certificate k;
              k.property = "noncentral-minimal-ideal";
              k.verdict = false;
              k.mode = CertMode::refutation;
              k.subject = {i.generators().front()};
              k.witness = {pair->first, pair->second};
              k.detail = "nilpotent minimal ideal outside the center";
              res.evidence.push_back({TargetKind::ring, inst.spec, k});
            }
          }
          nilpotent += nil;
          const bool counter = res.evidence.size() > 1;
          res.verdict = counter ? "COUNTEREXAMPLE" : std::to_string(mins) + " minimal ideals, " + std::to_string(nil) +
                                                         " nilpotent, all central";
        }
      }
    } catch (const CapExceeded& e) {
      ++skipped;
      res.verdict = "skipped";
      res.note = e.what();
    } catch (const std::exception& e) {
      res.passed = false;
      res.verdict = "error";
      res.note = e.what();
    }
    if (res.check.empty()) res.check = "search/" + inst.label;
    res.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(res));
  }
  CheckResult summary;
  summary.check = "search/bounds";
  summary.passed = true;
  summary.verdict = std::to_string(found) + " counterexamples";
  summary.note = "family " + opts.family + (opts.family == "corpus" ? "" : ", n <= " + std::to_string(opts.max_param)) +
                 ", cap " + std::to_string(cap) + ": " + std::to_string(ce_rings) + " centrally essential rings, " +
                 std::to_string(nilpotent) + " nilpotent minimal ideals, " + std::to_string(skipped) + " skipped";
  report.checks.push_back(std::move(summary));
  return report;
}

std::size_t counterexamples(const Report& r) {
  std::size_t n = 0;
  for (const auto& c : r.checks)
    for (const auto& e : c.evidence) n += e.cert.property == "noncentral-minimal-ideal";
  return n;
}

}  // namespace finring
