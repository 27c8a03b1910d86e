#include "finring/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "finring/constructions.hpp"
#include "finring/module.hpp"
#include "finring/predicates.hpp"
#include "finring/semiring.hpp"
#include "finring/subgroup.hpp"

namespace finring {

bool CheckContext::expect(bool condition, const std::string& what) {
  if (!condition) {
    if (!failed_) note(what);
    failed_ = true;
  }
  return condition;
}

void CheckContext::evidence(TargetKind target, const Json& spec, const Certificate& cert) {
  result_.examined += cert.examined;
  result_.evidence.push_back({target, spec, cert});
}

void CheckContext::note(const std::string& n) {
  if (!result_.note.empty()) result_.note += "; ";
  result_.note += n;
}

namespace {

constexpr std::uint64_t kTableEvidenceOrder = 128;

Json table_rows(const std::vector<std::uint32_t>& flat, std::uint32_t m) {
  Json rows = Json::array();
  for (std::uint32_t a = 0; a < m; ++a)
    rows.push_back(std::vector<std::uint32_t>(flat.begin() + std::size_t{a} * m, flat.begin() + std::size_t{a + 1} * m));
  return rows;
}

Json q8_group_spec(const SuiteOptions& opts) {
  if (opts.inject_fault != "q8-table") return Json{{"kind", "q8"}};
  auto t = group_q8()->table();
  std::swap(t[8], t[9]);  // row a: a*e and a*a exchanged
  return Json{{"kind", "table"}, {"table", table_rows(t, 8)}, {"name", "Q8"}};
}

Certificate ce(const CheckContext& ctx, const Ring& r, CeVariant v = CeVariant::nonunital,
               ScanMode mode = ScanMode::exhaustive, std::uint64_t cap = 0, std::vector<Element> priority = {}) {
  CeOptions o;
  o.variant = v;
  o.mode = mode;
  o.cap = cap;
  o.workers = ctx.options().workers;
  o.priority = std::move(priority);
  return is_centrally_essential(r, o);
}

bool ce_verdict(const CheckContext& ctx, const Ring& r) { return ce(ctx, r).verdict; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Evidence for a sub-structure that has no spec kind of its own: recorded
/// as explicit tables when small enough.
void table_evidence(CheckContext& ctx, const Ring& r, const Certificate& cert) {
  if (r.order() <= kTableEvidenceOrder) ctx.evidence(TargetKind::ring, table_spec(r), cert);
}

Element q8_hat(const Ring& r) {
  Element e = r.zero();
  for (GroupTable::Elem g = 0; g < 8; ++g) e = r.add(e, group_element(r, g));
  return e;
}

bool is_ring_unit(const Ring& r, const Element& c) {
  if (!r.one()) return false;
  for (Index i = 0; i < r.order(); ++i)
    if (r.mul(c, r.element_at(i)) == *r.one()) return true;
  return false;
}

struct CorpusRing {
  Json spec;
  Ring ring;
};

/// Corpus members of order <= kSuiteIdealCap; the rest are listed in the note.
std::vector<CorpusRing> bounded_corpus(CheckContext& ctx) {
  std::vector<CorpusRing> out;
  std::vector<std::string> skipped;
  for (const auto& spec : corpus_specs(ctx.options())) {
    Ring r = build_ring(spec);
    if (r.order() <= kSuiteIdealCap)
      out.push_back({spec, r});
    else
      skipped.push_back(r.name());
  }
  std::string n = "bounded claim: ideal lattices enumerated for rings of order <= " + std::to_string(kSuiteIdealCap) +
                  " (" + std::to_string(out.size()) + " rings); skipped:";
  for (const auto& s : skipped) n += " " + s;
  ctx.note(n);
  return out;
}

Certificate bounded(Certificate c) {
  c.bound = kSuiteIdealCap;
  return c;
}

bool contains_all(const AdditiveSubgroup& big, const AdditiveSubgroup& small) { return small.subset_of(big); }

// ---------------------------------------------------------------- checks

void thm36_z2q8(CheckContext& ctx) {
  const Json spec = znq8_spec(2, ctx.options());
  const Ring r = build_ring(spec);
  for (CeVariant v : {CeVariant::nonunital, CeVariant::all_elements}) {
    const Certificate c = ce(ctx, r, v);
    ctx.expect(c.verdict, std::string("not centrally essential under the ") + to_string(v) + " variant");
    ctx.evidence(TargetKind::ring, spec, c);
  }
  Certificate k;
  k.property = "ce";
  k.variant = to_string(CeVariant::all_elements);
  k.verdict = true;
  k.detail = "multipliers from the constructive (1 - a^2) procedure";
  std::set<Element> used;
  for (Index i = 1; i < r.order(); ++i) {
    const Element x = r.element_at(i);
    const auto m = find_central_multiplier(r, x);
    ++k.examined;
    const bool ok = m && m->constructive && r.mul(x, m->c) == m->y && !r.is_zero(m->y) && is_central(r, m->y);
    if (!ctx.expect(ok, "constructive multiplier fails for " + to_string(r, x))) continue;
    used.insert(m->c);
  }
  k.multipliers.assign(used.begin(), used.end());
  ctx.evidence(TargetKind::ring, spec, k);
  ctx.verdict("centrally essential; " + std::to_string(k.examined) + " constructive multipliers verified");
}

void ex43_center(CheckContext& ctx) {
  const Json spec = znq8_spec(2, ctx.options());
  const Ring r = build_ring(spec);
  const Certificate c = center_certificate(r);
  const AdditiveSubgroup z = center(r);
  ctx.expect(z.size() == 32, "center has order " + std::to_string(z.size()));
  ctx.expect(r.group_info()->group->conjugacy_classes().size() == 5, "Q8 does not have five conjugacy classes");
  ctx.expect(class_sum_center(r) == z, "center differs from the span of the class sums");
  ctx.evidence(TargetKind::ring, spec, c);
  ctx.verdict("order " + std::to_string(z.size()));
}

void ex43_core(CheckContext& ctx) {
  const Json spec = znq8_spec(2, ctx.options());
  const Ring r = build_ring(spec);
  const Element q = q8_hat(r);
  const AdditiveSubgroup h = additive_closure(r, {q});
  ctx.expect(h.size() == 2, "additive closure of the group sum is not {0, Q8^}");
  ctx.expect(two_sided_ideal_generated(r, {q}) == h, "ideal generated by the group sum is larger than {0, Q8^}");
  const auto ideals = all_ideals(r, IdealKind::two_sided, kSuiteIdealCap);
  for (const auto& i : ideals)
    if (!i.is_zero()) ctx.expect(contains_all(i, h), "a non-zero ideal misses {0, Q8^}");
  const AdditiveSubgroup z = center(r);
  ctx.expect(contains_all(z, h), "{0, Q8^} is not central");
  // the ring, not its center, is subdirectly indecomposable: J(C)^2 = 0 gives the center 15 minimal ideals
  const Ring zr = reify(z, "C(Z_2Q8)");
  std::size_t center_minimal = 0;
  const auto zi = all_ideals(zr, IdealKind::two_sided, kSuiteIdealCap);
  for (const auto& i : zi)
    if (i.size() == 2) ++center_minimal;
  const Certificate m = minimal_right_ideals_certificate(r, kSuiteIdealCap);
  ctx.expect(m.families.size() == 1 && m.labels == std::vector<std::string>{"nilpotent"},
             "minimal right ideals differ from the single nilpotent {0, Q8^}");
  ctx.evidence(TargetKind::ring, spec, m);
  ctx.verdict("core {0, Q8^} among " + std::to_string(ideals.size()) + " ideals; the center has " +
              std::to_string(center_minimal) + " minimal ideals");
}

void ex43_rational(CheckContext& ctx) {
  const Json spec = znq8_spec(2, ctx.options());
  const Ring r = build_ring(spec);
  const Certificate c = is_centrally_rational(r);
  ctx.expect(!c.verdict, "Z_2Q8 reported centrally rational");
  ctx.evidence(TargetKind::ring, spec, c);

  const AdditiveSubgroup z = center(r);
  const Element q = q8_hat(r);
  const Element b = group_element(r, q8_index(0, 1));
  std::size_t units = 0, multipliers = 0;
  for (const auto& c0 : z.elements()) {
    if (is_ring_unit(r, c0)) {
      ++units;
      std::size_t terms = 0;
      for (Residue v : c0.coeffs) terms += v != 0;
      ctx.expect(terms % 2 == 1, "central unit supported on an even number of group elements");
      ctx.expect(!is_central(r, r.mul(b, c0)), "b times a central unit is central");
    }
    const Element bd = r.mul(b, c0);
    if (!r.is_zero(bd) && is_central(r, bd)) {
      ++multipliers;
      ctx.expect(nilpotency_index(r, c0).has_value(), "central multiplier of b is not nilpotent");
      ctx.expect(r.is_zero(r.mul(c0, q)), "central multiplier of b does not annihilate H");
    }
  }
  ctx.expect(units == 16, "center has " + std::to_string(units) + " units");
  ctx.expect(multipliers > 0, "b has no central multiplier");
  ctx.verdict("not centrally rational; " + std::to_string(units) + " central units");
}

void ce_expect_false(CheckContext& ctx, Residue n) {
  const Json spec = znq8_spec(n, ctx.options());
  const Ring r = build_ring(spec);
  const Certificate c = ce(ctx, r);
  ctx.evidence(TargetKind::ring, spec, c);
  ctx.expect(!c.verdict, "expected a refutation, but the exhaustive scan found a central multiplier for every "
                         "non-central element of " + r.name());
  ctx.verdict(c.verdict ? "true" : "false, witness " + to_string(r, c.witness.at(0)));
}

void thm36_z9q8(CheckContext& ctx) {
  const Json spec = znq8_spec(9, ctx.options());
  const Ring r = build_ring(spec);
  const DeltaDecomposition d = delta_decomposition(r);
  const Element af = d.delta_basis.at(1);
  const Certificate c = ce(ctx, r, CeVariant::nonunital, ScanMode::refute, 0, {af});
  ctx.expect(!c.verdict, "refutation at af failed");
  ctx.expect(!c.witness.empty() && c.witness[0] == af, "first witness is not af");
  ctx.evidence(TargetKind::ring, spec, c);
  ctx.verdict(c.verdict ? "true" : "false, witness af = " + to_string(r, c.witness.at(0)));
}

void ex37_matrix(CheckContext& ctx) {
  const Json spec{{"kind", "matrix_delta"}, {"base", zn_spec(9)}};
  const Ring r = build_ring(spec);
  const Element e = make_element(r, {5, 1, 1, 0});
  ctx.expect(r.mul(e, e) == e, "e is not idempotent");
  ctx.expect(!is_central(r, e), "e is central");
  const Certificate idem = idempotents_certificate(r);
  const auto it = std::find(idem.witness.begin(), idem.witness.end(), e);
  ctx.expect(it != idem.witness.end() && idem.labels[it - idem.witness.begin()] == "non-central",
             "e missing from the non-central idempotents");
  ctx.evidence(TargetKind::ring, spec, idem);
  const Certificate c = ce(ctx, r);
  ctx.expect(!c.verdict, "M_Delta(Z_9) reported centrally essential");
  ctx.evidence(TargetKind::ring, spec, c);
  ctx.verdict(c.verdict ? "true" : "false, witness " + to_string(r, c.witness.at(0)));
}

void ex37_decomposition(CheckContext& ctx) {
  const Ring r = build_ring(znq8_spec(9, ctx.options()));
  const DeltaDecomposition d = delta_decomposition(r);
  ctx.expect(d.quotient.order() == 6561 && d.delta.order() == 6561, "components do not have order 9^4");
  const Ring image = reify_with_basis(r, matrix_delta_basis_image(d));
  ctx.expect(image.constants() == matrix_delta(9).constants(), "basis map is not an isomorphism onto M_Delta(Z_9)");
  ctx.expect(!ce_verdict(ctx, d.delta), "Delta component reported centrally essential");
  const Json qspec{{"kind", "group_ring"},
                   {"coeff", zn_spec(9)},
                   {"group", {{"kind", "elementary_abelian_2"}, {"rank", 2}}}};
  const Certificate qc = ce(ctx, build_ring(qspec));
  ctx.expect(qc.verdict, "commutative component reported not centrally essential");
  ctx.evidence(TargetKind::ring, qspec, qc);
  ctx.verdict("Z_9Q8 = Z_9(Q8/Q8') + M_Delta(Z_9)");
}

bool power_of_two(Residue n) { return (n & (n - 1)) == 0; }

void thm32(CheckContext& ctx, Residue n) {
  const Json zspec = zn_spec(n);
  const Ring zn = build_ring(zspec);
  const FiniteModule m = scalar_module(n);
  const HowellForm ann2(n, 1, std::vector<std::vector<Residue>>{{n / std::gcd<Residue>(n, 2)}});
  const Certificate ess = is_essential_submodule(m, ann2);
  ctx.evidence(TargetKind::module, zspec, ess);
  // the ideal lattice of Z_n: Ann(2) is essential iff it meets every non-zero ideal
  bool lattice = true;
  for (const auto& i : all_ideals(zn, IdealKind::two_sided, n))
    if (!i.is_zero() && intersect(*i.howell(), ann2).is_zero()) lattice = false;
  const bool pow2 = power_of_two(n);
  ctx.expect(ess.verdict == lattice && lattice == pow2, "essentiality of Ann(2) disagrees with the ideal lattice");
  std::size_t pairs = 0;
  for (Residue a = 1; a < n; ++a) {
    if (!is_unit(a, n)) continue;
    for (Residue b = 1; b < n; ++b) {
      if (!is_unit(b, n)) continue;
      const Json spec = quaternion_spec(n, a, b);
      const Certificate c = ce(ctx, build_ring(spec), CeVariant::nonunital, ScanMode::exhaustive, kQuaternionScanCap);
      ctx.expect(c.verdict == ess.verdict,
                 "CE(H(" + std::to_string(a) + "," + std::to_string(b) + ";Z_" + std::to_string(n) + ")) = " +
                     yes_no(c.verdict) + " but essentiality is " + yes_no(ess.verdict));
      ctx.evidence(TargetKind::ring, spec, c);
      ++pairs;
    }
  }
  ctx.verdict(std::string(pow2 ? "CE and essential" : "neither CE nor essential") + " for " + std::to_string(pairs) +
              " unit pairs");
}

void quaternion_center(CheckContext& ctx, Residue n) {
  std::size_t pairs = 0;
  for (Residue a = 1; a < n; ++a) {
    if (!is_unit(a, n)) continue;
    for (Residue b = 1; b < n; ++b) {
      if (!is_unit(b, n)) continue;
      const Json spec = quaternion_spec(n, a, b);
      const Ring q = build_ring(spec);
      const AdditiveSubgroup z = center(q);
      ctx.expect(z == quaternion_center_formula(q, {n, a, b}),
                 "center of H(" + std::to_string(a) + "," + std::to_string(b) + ") differs from A + I i + I j + I k");
      ctx.evidence(TargetKind::ring, spec, center_certificate(q));
      ++pairs;
    }
  }
  ctx.verdict("formula holds for " + std::to_string(pairs) + " unit pairs");
}

void prop42(CheckContext& ctx) {
  std::size_t rings = 0;
  for (const auto& spec : corpus_specs(ctx.options())) {
    const Ring r = build_ring(spec);
    const Certificate rat = is_centrally_rational(r);
    const Certificate com = is_commutative(r);
    ctx.expect(rat.verdict == com.verdict, r.name() + ": centrally rational = " + yes_no(rat.verdict) +
                                               ", commutative = " + yes_no(com.verdict));
    ctx.evidence(TargetKind::ring, spec, rat);
    ctx.evidence(TargetKind::ring, spec, com);
    ++rings;
  }
  ctx.verdict("rational iff commutative on " + std::to_string(rings) + " rings");
}

void rem41(CheckContext& ctx) {
  std::size_t rational = 0;
  for (const auto& spec : corpus_specs(ctx.options())) {
    const Ring r = build_ring(spec);
    if (!is_centrally_rational(r).verdict) continue;
    ++rational;
    const Certificate c = ce(ctx, r);
    ctx.expect(c.verdict, r.name() + " is centrally rational but not centrally essential");
    ctx.evidence(TargetKind::ring, spec, c);
  }
  ctx.verdict(std::to_string(rational) + " centrally rational rings, all centrally essential");
}

void thm22(CheckContext& ctx) {
  std::size_t checked = 0;
  for (const auto& [spec, r] : bounded_corpus(ctx)) {
    const Certificate c = ce(ctx, r);
    ctx.evidence(TargetKind::ring, spec, bounded(c));
    if (!c.verdict) continue;
    for (const auto& i : all_ideals(r, IdealKind::two_sided, kSuiteIdealCap)) {
      if (i.is_zero()) continue;
      const Ring ir = reify(i);
      const Certificate sp = is_semiprime(ir);
      if (!sp.verdict) continue;
      ++checked;
      table_evidence(ctx, ir, sp);
      for (const auto& g : i.generators())
        ctx.expect(is_central(r, g), r.name() + ": semiprime ideal not contained in the center");
    }
  }
  ctx.verdict(std::to_string(checked) + " semiprime ideals of centrally essential rings, all central");
}

void prop24(CheckContext& ctx, bool with_annihilator) {
  std::size_t checked = 0;
  for (const auto& [spec, r] : bounded_corpus(ctx)) {
    const Certificate c = ce(ctx, r);
    ctx.evidence(TargetKind::ring, spec, bounded(c));
    if (!c.verdict) continue;
    for (const auto& j : all_ideals(r, IdealKind::right, kSuiteIdealCap)) {
      if (j.is_zero()) continue;
      const Ring jr = reify(j);
      const Certificate sp = is_semiprime(jr);
      if (!sp.verdict) continue;
      if (with_annihilator) {
        if (!left_annihilator(r, j.generators()).is_zero()) continue;
        ++checked;
        for (const auto& g : j.generators())
          ctx.expect(is_central(r, g), r.name() + ": right ideal with zero annihilator not central");
        continue;
      }
      ++checked;
      const Certificate red = is_reduced(jr);
      const Certificate com = is_commutative(jr);
      ctx.expect(red.verdict, r.name() + ": semiprime right ideal is not reduced");
      ctx.expect(com.verdict, r.name() + ": semiprime right ideal is not commutative");
      table_evidence(ctx, jr, sp);
      table_evidence(ctx, jr, red);
      table_evidence(ctx, jr, com);
    }
  }
  ctx.verdict(std::to_string(checked) + (with_annihilator ? " semiprime right ideals with zero annihilator, all central"
                                                          : " semiprime right ideals, all reduced and commutative"));
}

void cor23(CheckContext& ctx) {
  std::size_t checked = 0;
  for (const auto& [spec, r] : bounded_corpus(ctx)) {
    const Certificate c = ce(ctx, r);
    ctx.evidence(TargetKind::ring, spec, bounded(c));
    if (!c.verdict) continue;
    ctx.evidence(TargetKind::ring, spec, minimal_right_ideals_certificate(r, kSuiteIdealCap));
    for (const auto& m : minimal_right_ideals(r, kSuiteIdealCap)) {
      if (m.nilpotent) continue;
      ++checked;
      ctx.expect(m.two_sided && m.central, r.name() + ": minimal non-nilpotent right ideal not central and two-sided");
    }
  }
  ctx.verdict(std::to_string(checked) + " minimal non-nilpotent right ideals, all central and two-sided");
}

void prop26(CheckContext& ctx) {
  std::size_t checked = 0;
  for (const auto& [spec, r] : bounded_corpus(ctx)) {
    const Certificate c = ce(ctx, r);
    ctx.evidence(TargetKind::ring, spec, bounded(c));
    if (!c.verdict) continue;
    for (const auto& m : minimal_right_ideals(r, kSuiteIdealCap)) {
      if (m.nilpotent) continue;
      ++checked;
      const Ring ir = reify(m.ideal);
      const Ring qr = quotient_ring(m.ideal);
      const bool ci = ce_verdict(ctx, ir), cq = ce_verdict(ctx, qr);
      ctx.expect(ci && cq, r.name() + ": I or R/I not centrally essential");
      if (!ctx.expect(m.idempotent.has_value(), r.name() + ": no central idempotent generates I") || !r.unital())
        continue;
      const Element e = *m.idempotent;
      const Element f = r.sub(*r.one(), e);
      const Ring er = reify(right_ideal_generated(r, {e}));
      const Ring fr = reify(right_ideal_generated(r, {f}));
      const Ring sum = direct_sum(er, fr);
      ctx.expect(sum.order() == r.order(), r.name() + ": eR + (1-e)R has the wrong order");
      const bool ce_e = ce_verdict(ctx, er), ce_f = ce_verdict(ctx, fr);
      ctx.expect(ce_verdict(ctx, sum) == (ce_e && ce_f), r.name() + ": CE(eR + (1-e)R) differs from CE of the summands");
      ctx.expect(c.verdict == (ce_e && ce_f), r.name() + ": CE(R) differs from CE of eR and (1-e)R");
    }
  }
  ctx.verdict(std::to_string(checked) + " minimal non-nilpotent right ideals split off centrally essential summands");
}

void prop26_nilpotent(CheckContext& ctx) {
  const Ring r = build_ring(znq8_spec(2, ctx.options()));
  const AdditiveSubgroup h = two_sided_ideal_generated(r, {q8_hat(r)});
  ctx.expect(h.size() == 2 && is_nilpotent_subgroup(r, h), "{0, Q8^} is not a nilpotent ideal of order 2");
  const Ring a = quotient_ring(h, "Z_2Q8/{0,Q8^}");
  const Certificate c = ce(ctx, a);
  ctx.expect(!c.verdict, "Z_2Q8/{0, Q8^} reported centrally essential");
  table_evidence(ctx, a, c);
  ctx.verdict(c.verdict ? "true" : "quotient of order " + std::to_string(a.order()) + " not centrally essential");
}

void cor27(CheckContext& ctx) {
  std::size_t checked = 0;
  for (const auto& [spec, r] : bounded_corpus(ctx)) {
    if (central_idempotents(r).size() != idempotents(r).size()) continue;
    const bool cr = ce_verdict(ctx, r);
    for (const auto& m : minimal_right_ideals(r, kSuiteIdealCap)) {
      if (m.nilpotent || !m.two_sided) continue;
      ++checked;
      const bool both = ce_verdict(ctx, reify(m.ideal)) && ce_verdict(ctx, quotient_ring(m.ideal));
      ctx.expect(cr == both, r.name() + ": CE(R) differs from CE(I) and CE(R/I)");
    }
  }
  ctx.verdict(std::to_string(checked) + " minimal non-nilpotent right ideals in rings with central idempotents");
}

bool is_field(const Ring& f) {
  if (!f.unital() || !is_commutative(f).verdict || f.order() < 2) return false;
  for (Index i = 0; i < f.order(); ++i) {
    const Element x = f.element_at(i);
    if (!f.is_zero(x) && !is_ring_unit(f, x)) return false;
  }
  return true;
}

void cor28(CheckContext& ctx) {
  std::size_t checked = 0;
  for (const auto& [spec, r] : bounded_corpus(ctx)) {
    const auto two = all_ideals(r, IdealKind::two_sided, kSuiteIdealCap);
    if (all_ideals(r, IdealKind::right, kSuiteIdealCap).size() != two.size() || !ce_verdict(ctx, r)) continue;
    for (const auto& i : two) {
      if (i.is_zero() || is_nilpotent_subgroup(r, i)) continue;
      bool minimal = true;
      for (const auto& j : two)
        if (!j.is_zero() && j.size() < i.size() && j.subset_of(i)) minimal = false;
      if (!minimal) continue;
      ++checked;
      ctx.expect(is_field(reify(i)), r.name() + ": non-nilpotent minimal ideal is not a field");
    }
  }
  ctx.verdict(std::to_string(checked) + " non-nilpotent minimal ideals of invariant rings, all fields");
}

void ex44(CheckContext& ctx) {
  const Json spec = semiring_order5_spec(ctx.options());
  const Semiring s = build_semiring(spec);
  const Json again = parse_spec_text(serialize_spec(spec));
  ctx.expect(again == spec, "semiring spec does not round-trip");
  const Semiring t = build_semiring(again);
  ctx.expect(t.add_table() == s.add_table() && t.mul_table() == s.mul_table(), "tables change under serialization");
  const Certificate z = semiring_center_certificate(s);
  ctx.expect(semiring_center(s) == std::vector<Semiring::Elem>{0, 1, 4}, "center is not {0, 1, c}");
  const Certificate com = is_commutative_semiring(s);
  ctx.expect(!com.verdict && com.witness.size() == 2 && com.witness[0].coeffs[0] == 2 && com.witness[1].coeffs[0] == 3,
             "commutativity not refuted by (a, b)");
  ctx.expect(s.mul(2, 3) == 2 && s.mul(3, 2) == 3, "ab = a and ba = b fail");
  const Certificate c = is_ce_semiring(s);
  ctx.expect(c.verdict, "not centrally essential");
  const Certificate sub = is_semisubtractive(s);
  ctx.expect(sub.verdict, "not semisubtractive");
  for (const auto* cert : {&z, &com, &c, &sub}) ctx.evidence(TargetKind::semiring, spec, *cert);
  ctx.verdict("center {0,1,c}; non-commutative; centrally essential; semisubtractive");
}

void lem31(CheckContext& ctx, Residue n) {
  const Json spec = quaternion_spec(n, n - 1, n - 1);
  const Ring q = build_ring(spec);
  const FiniteModule m = scalar_restriction(q);
  // essential submodules of each summand A e_i = Z_n
  std::vector<Residue> ess;
  for (Residue d = 1; d < n; ++d)
    if (n % d == 0 && is_essential_submodule(scalar_module(n), HowellForm(n, 1, {{d}})).verdict) ess.push_back(d);
  std::size_t combos = 0;
  std::vector<std::size_t> pick(4, 0);
  while (true) {
    std::vector<std::vector<Residue>> rows(4, std::vector<Residue>(4, 0));
    for (std::size_t i = 0; i < 4; ++i) rows[i][i] = ess[pick[i]];
    const HowellForm sub(n, 4, rows);
    const Certificate c = is_essential_submodule(m, sub);
    ctx.expect(c.verdict, "direct sum of essential submodules is not essential");
    if (pick[0] == pick[1] && pick[1] == pick[2] && pick[2] == pick[3]) ctx.evidence(TargetKind::module, spec, c);
    ++combos;
    std::size_t p = 0;
    for (; p < 4; ++p) {
      if (++pick[p] < ess.size()) break;
      pick[p] = 0;
    }
    if (p == 4) break;
  }
  ctx.verdict(std::to_string(combos) + " sums of essential submodules, all essential");
}

void zero_multiplication(CheckContext& ctx) {
  for (const char* p : {"zero_mult_z2", "zero_mult_z3", "zero_mult_z4"}) {
    const Json spec = preset_spec(p);
    const Ring r = build_ring(spec);
    const Certificate a = ce(ctx, r, CeVariant::nonunital);
    const Certificate b = ce(ctx, r, CeVariant::all_elements);
    ctx.expect(a.verdict && !b.verdict, std::string(p) + ": variants do not split as expected");
    ctx.evidence(TargetKind::ring, spec, a);
    ctx.evidence(TargetKind::ring, spec, b);
  }
  ctx.verdict("commutative, yet no element has a non-zero central product");
}

void semiring_adapter(CheckContext& ctx) {
  std::size_t rings = 0;
  for (const auto& spec : corpus_specs(ctx.options())) {
    const Ring r = build_ring(spec);
    if (r.order() > 64) continue;
    const Semiring s = ring_as_semiring(r);
    ++rings;
    ctx.expect(semiring_center(s).size() == center(r).size(), r.name() + ": centers differ");
    ctx.expect(is_ce_semiring(s).verdict == ce_verdict(ctx, r), r.name() + ": CE verdicts differ");
  }
  ctx.verdict("identical centers and CE verdicts on " + std::to_string(rings) + " rings");
}

std::vector<SuiteCheck> build_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"Thm3.6/Z2Q8", 1, thm36_z2q8});
  c.push_back({"Ex4.3/center-Z2Q8", 2, ex43_center});
  c.push_back({"Thm3.6/Z3Q8", 3, [](CheckContext& x) { ce_expect_false(x, 3); }});
  c.push_back({"Thm3.6/Z4Q8", 3, [](CheckContext& x) { ce_expect_false(x, 4); }});
  c.push_back({"Ex3.7/matrix-delta-Z9", 4, ex37_matrix});
  c.push_back({"Ex3.7/decomposition-Z9", 4, ex37_decomposition});
  c.push_back({"Thm3.6/Z9Q8-af", 4, thm36_z9q8});
  for (Residue n = 2; n <= 32; ++n)
    c.push_back({"Thm3.2/quaternion-Z" + std::to_string(n), 5, [n](CheckContext& x) { thm32(x, n); }});
  for (Residue n = 2; n <= 9; ++n)
    c.push_back({"Quaternion/center-Z" + std::to_string(n), 6, [n](CheckContext& x) { quaternion_center(x, n); }});
  c.push_back({"Prop4.2/corpus", 7, prop42});
  c.push_back({"Ex4.3/not-centrally-rational-Z2Q8", 7, ex43_rational});
  c.push_back({"Thm2.2/corpus", 8, thm22});
  c.push_back({"Prop2.4/corpus", 8, [](CheckContext& x) { prop24(x, false); }});
  c.push_back({"Cor2.3/corpus", 8, cor23});
  c.push_back({"Cor2.5/corpus", 8, [](CheckContext& x) { prop24(x, true); }});
  c.push_back({"Prop2.6/corpus", 8, prop26});
  c.push_back({"Ex4.4/semiring", 9, ex44});
  c.push_back({"Lem3.1/Z4", 10, [](CheckContext& x) { lem31(x, 4); }});
  c.push_back({"Lem3.1/Z8", 10, [](CheckContext& x) { lem31(x, 8); }});
  c.push_back({"Ex4.3/core-Z2Q8", 0, ex43_core});
  c.push_back({"Prop2.6/nilpotent-ideal-Z2Q8", 0, prop26_nilpotent});
  c.push_back({"Cor2.7/corpus", 0, cor27});
  c.push_back({"Cor2.8/corpus", 0, cor28});
  c.push_back({"Rem4.1/corpus", 0, rem41});
  c.push_back({"Intro/zero-multiplication", 0, zero_multiplication});
  c.push_back({"Semiring/ring-adapter", 0, semiring_adapter});
  return c;
}

}  // namespace

Json zn_spec(Residue n) { return Json{{"kind", "zn"}, {"n", n}}; }

Json quaternion_spec(Residue n, Residue a, Residue b) {
  return Json{{"kind", "quaternion"}, {"base", zn_spec(n)}, {"a", a}, {"b", b}};
}

Json znq8_spec(Residue n, const SuiteOptions& opts) {
  return Json{{"kind", "group_ring"}, {"coeff", zn_spec(n)}, {"group", q8_group_spec(opts)}};
}

Json semiring_order5_spec(const SuiteOptions& opts) {
  const Semiring s = example_order5();
  auto mul = s.mul_table();
  if (opts.inject_fault == "semiring-table") mul[1] = 1;  // 0 * 1 = 1 breaks zero absorption
  Json j{{"kind", "semiring"},
         {"add", table_rows(s.add_table(), s.order())},
         {"mul", table_rows(mul, s.order())},
         {"zero", s.zero()}};
  if (s.one()) j["one"] = *s.one();
  j["labels"] = s.labels();
  j["name"] = s.name();
  return j;
}

Json table_spec(const Ring& r) {
  if (r.order() > kTableEvidenceOrder) throw CapExceeded("table_spec", r.order(), kTableEvidenceOrder);
  const Ring t = r.is_structure() ? to_table_ring(r) : r;
  const auto m = static_cast<std::uint32_t>(t.order());
  std::vector<std::uint32_t> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      add[std::size_t{a} * m + b] = t.table_add(a, b);
      mul[std::size_t{a} * m + b] = t.table_mul(a, b);
    }
  Json j{{"kind", "table"}, {"add", table_rows(add, m)}, {"mul", table_rows(mul, m)}, {"zero", t.table_zero()}};
  if (t.one()) j["one"] = t.one()->coeffs[0];
  if (!r.name().empty()) j["name"] = r.name();
  return j;
}

std::vector<Json> corpus_specs(const SuiteOptions& opts) {
  std::vector<Json> out;
  for (Residue n = 2; n <= 12; ++n) out.push_back(zn_spec(n));
  for (Residue n = 2; n <= 9; ++n) out.push_back(quaternion_spec(n, n - 1, n - 1));
  for (const char* p : {"zero_mult_z2", "zero_mult_z3", "zero_mult_z4", "m2_z2", "m2_z3", "ut2_z2", "ut2_z3"})
    out.push_back(preset_spec(p));
  for (Residue n : {2, 3, 4}) {
    Json s = znq8_spec(n, opts);
    s["name"] = "z" + std::to_string(n) + "q8";
    out.push_back(s);
  }
  for (const char* p : {"matrix_delta_z9", "delta_z2q8", "delta_z3q8", "z2_plus_z3", "z2_plus_m2_z2", "z2_plus_ut2_z2",
                        "z4_plus_zero_mult_z2"})
    out.push_back(preset_spec(p));
  return out;
}

const std::vector<SuiteCheck>& reference_checks() {
  static const std::vector<SuiteCheck> checks = build_checks();
  return checks;
}

std::vector<std::string> fault_names() { return {"q8-table", "semiring-table"}; }

CheckResult run_check(const SuiteCheck& check, const SuiteOptions& opts) {
  CheckContext ctx(opts, check.name);
  const auto start = std::chrono::steady_clock::now();
  try {
    check.run(ctx);
  } catch (const std::exception& e) {
    ctx.expect(false, std::string("error: ") + e.what());
    ctx.verdict("error");
  }
  CheckResult& r = ctx.result();
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.passed = !ctx.failed();
  return r;
}

Report run_reference_suite(const SuiteOptions& opts) {
  if (!opts.inject_fault.empty()) {
    const auto f = fault_names();
    if (std::find(f.begin(), f.end(), opts.inject_fault) == f.end())
      throw std::invalid_argument("unknown fault '" + opts.inject_fault + "'");
  }
  Report report;
  report.command = "verify-paper";
  for (const auto& c : reference_checks())
    if (opts.filter.empty() || c.name.find(opts.filter) != std::string::npos) report.checks.push_back(run_check(c, opts));
  return report;
}

}  // namespace finring
