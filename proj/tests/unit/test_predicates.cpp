#include <gtest/gtest.h>

#include <random>

#include "finring/checker.hpp"
#include "finring/constructions.hpp"
#include "finring/module.hpp"
#include "finring/predicates.hpp"
#include "oracles.hpp"

using namespace finring;

namespace {

std::vector<NamedRing> small_corpus(std::uint64_t max_order = 81) {
  std::vector<NamedRing> out;
  for (auto& nr : ring_corpus())
    if (nr.ring.order() <= max_order) out.push_back(nr);
  return out;
}

oracle::Mask mask_of(const AdditiveSubgroup& s) {
  oracle::Mask m;
  for (Index i : s.indices()) m.set(i);
  return m;
}

}  // namespace

TEST(CentrallyEssential, KnownVerdicts) {
  EXPECT_TRUE(is_centrally_essential(make_zn(12)).verdict);
  EXPECT_TRUE(is_centrally_essential(preset_ring("z2q8")).verdict);
  EXPECT_FALSE(is_centrally_essential(preset_ring("m2_z2")).verdict);
  EXPECT_FALSE(is_centrally_essential(preset_ring("ut2_z2")).verdict);
  EXPECT_FALSE(is_centrally_essential(preset_ring("z3q8")).verdict);
  EXPECT_TRUE(is_centrally_essential(make_zero_multiplication_ring(4)).verdict);
}

TEST(CentrallyEssential, MatchesBruteForceOnCorpus) {
  for (const auto& nr : small_corpus(256)) {
    const oracle::Tables t = oracle::tables_of(nr.ring);
    const Certificate c = is_centrally_essential(nr.ring);
    EXPECT_EQ(c.verdict, oracle::centrally_essential(t, t.all())) << nr.name;
    EXPECT_TRUE(recheck(nr.ring, c).ok) << nr.name;
  }
}

TEST(CentrallyEssential, AllElementsVariantNeedsMultipliersForCentralElements) {
  // in Z_2 + zero-multiplication Z_2 the element (0, 1) is central with no multiplier
  const Ring r = direct_sum(make_zn(2), make_zero_multiplication_ring(2));
  CeOptions o;
  EXPECT_TRUE(is_centrally_essential(r, o).verdict);
  o.variant = CeVariant::all_elements;
  const Certificate c = is_centrally_essential(r, o);
  EXPECT_FALSE(c.verdict);
  EXPECT_TRUE(recheck(r, c).ok);
  o.variant = CeVariant::unital;
  EXPECT_THROW(is_centrally_essential(r, o), std::invalid_argument);
}

TEST(CentrallyEssential, RefuteModeAgreesWithExhaustive) {
  for (const char* p : {"m2_z2", "ut2_z3", "z3q8", "matrix_delta_z9"}) {
    const Ring r = preset_ring(p);
    CeOptions o;
    const Certificate full = is_centrally_essential(r, o);
    o.mode = ScanMode::refute;
    const Certificate quick = is_centrally_essential(r, o);
    EXPECT_FALSE(quick.verdict) << p;
    EXPECT_EQ(quick.witness, full.witness) << p;
    EXPECT_EQ(quick.mode, CertMode::refutation);
    EXPECT_TRUE(recheck(r, quick).ok) << p;
  }
}

TEST(CentrallyEssential, WorkersDoNotChangeWitnesses) {
  for (const char* p : {"z2q8", "z3q8", "m2_z3", "matrix_delta_z9"}) {
    const Ring r = preset_ring(p);
    CeOptions one, four;
    four.workers = 4;
    const Certificate a = is_centrally_essential(r, one), b = is_centrally_essential(r, four);
    EXPECT_EQ(a.verdict, b.verdict) << p;
    EXPECT_EQ(a.witness, b.witness) << p;
    EXPECT_EQ(a.multipliers, b.multipliers) << p;
    EXPECT_EQ(a.examined, b.examined) << p;
  }
}

TEST(CentrallyEssential, PriorityCandidatesComeFirst) {
  const Ring r = preset_ring("z3q8");
  const oracle::GroupRingQ8 m{3};
  const auto centre = m.center();
  // the last element in canonical order without a multiplier, by brute force
  std::optional<Element> last;
  for (Index i = r.order(); i-- > 0 && !last;) {
    const Element x = r.element_at(i);
    const auto a = m.from_library(x);
    if (!m.central(a) && !m.multiplier(a, centre)) last = x;
  }
  ASSERT_TRUE(last.has_value());
  CeOptions o;
  o.mode = ScanMode::refute;
  o.priority = {*last};
  const Certificate c = is_centrally_essential(r, o);
  ASSERT_FALSE(c.verdict);
  EXPECT_EQ(c.witness.at(0), *last);
  EXPECT_TRUE(recheck(r, c).ok);
}

TEST(CentrallyEssential, CapIsEnforced) {
  CeOptions o;
  o.cap = 1000;
  EXPECT_THROW(is_centrally_essential(preset_ring("z4q8"), o), CapExceeded);
}

TEST(CentrallyEssential, DirectSumFuzz) {
  // CE(R + S) holds iff CE(R) and CE(S)
  const auto corpus = small_corpus(32);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const auto& a = corpus[pick(rng)];
    const auto& b = corpus[pick(rng)];
    if (a.ring.order() * b.ring.order() > 256) continue;
    const Ring s = direct_sum(a.ring, b.ring);
    const bool both = is_centrally_essential(a.ring).verdict && is_centrally_essential(b.ring).verdict;
    const Certificate c = is_centrally_essential(s);
    EXPECT_EQ(c.verdict, both) << a.name << " + " << b.name;
    EXPECT_TRUE(recheck(s, c).ok);
  }
}

TEST(Checker, RejectsTamperedCertificates) {
  const Ring r = preset_ring("m2_z2");
  Certificate c = is_centrally_essential(r);
  ASSERT_FALSE(c.verdict);
  ASSERT_TRUE(recheck(r, c).ok);
  Certificate flipped = c;
  flipped.verdict = true;
  EXPECT_FALSE(recheck(r, flipped).ok);
  Certificate moved = c;
  moved.witness = {*r.one()};  // the identity is central
  EXPECT_FALSE(recheck(r, moved).ok);

  const Ring z = preset_ring("z2q8");
  Certificate pos = is_centrally_essential(z);
  ASSERT_TRUE(pos.verdict);
  ASSERT_FALSE(pos.multipliers.empty());
  pos.multipliers.front() = z.zero();
  EXPECT_FALSE(recheck(z, pos).ok);
}

TEST(Predicates, SemiprimeReducedMatchBruteForce) {
  for (const auto& nr : small_corpus(256)) {
    const oracle::Tables t = oracle::tables_of(nr.ring);
    const Certificate sp = is_semiprime(nr.ring), red = is_reduced(nr.ring);
    EXPECT_EQ(sp.verdict, oracle::semiprime(t, t.all())) << nr.name;
    EXPECT_EQ(red.verdict, oracle::reduced(t, t.all())) << nr.name;
    EXPECT_TRUE(recheck(nr.ring, sp).ok) << nr.name;
    EXPECT_TRUE(recheck(nr.ring, red).ok) << nr.name;
  }
}

TEST(Predicates, CentrallyRationalMatchesBruteForce) {
  for (const auto& nr : small_corpus(256)) {
    const oracle::Tables t = oracle::tables_of(nr.ring);
    const Certificate c = is_centrally_rational(nr.ring);
    EXPECT_EQ(c.verdict, oracle::centrally_rational(t)) << nr.name;
    EXPECT_TRUE(recheck(nr.ring, c).ok) << nr.name;
  }
}

TEST(Predicates, StronglyBoundedMatchesBruteForce) {
  for (const auto& nr : small_corpus(32)) {
    const oracle::Tables t = oracle::tables_of(nr.ring);
    const auto right = oracle::all_right_ideals(t);
    std::vector<oracle::Mask> two;
    for (const auto& m : right)
      if (oracle::left_ideal(t, m) && m.count() > 1) two.push_back(m);
    bool bounded = true;
    for (const auto& j : right) {
      if (j.count() == 1) continue;
      bool contains = false;
      for (const auto& i : two) contains = contains || (i & ~j).none();
      bounded = bounded && contains;
    }
    const Certificate c = is_strongly_bounded(nr.ring, Side::right);
    EXPECT_EQ(c.verdict, bounded) << nr.name;
    EXPECT_TRUE(recheck(nr.ring, c).ok) << nr.name;
  }
}

TEST(Predicates, EssentialRightIdealMatchesBruteForce) {
  for (const auto& nr : small_corpus(32)) {
    const Ring& r = nr.ring;
    const oracle::Tables t = oracle::tables_of(r);
    const auto right = oracle::all_right_ideals(t);
    for (const auto& i : all_ideals(r, IdealKind::right)) {
      const oracle::Mask m = mask_of(i);
      bool essential = true;
      for (const auto& j : right)
        if (j.count() > 1 && (j & m).count() == 1) essential = false;
      const Certificate c = is_essential_right_ideal(r, i);
      EXPECT_EQ(c.verdict, essential) << nr.name;
      EXPECT_TRUE(recheck(r, c).ok) << nr.name;
    }
  }
}

TEST(Predicates, MinimalRightIdealsMatchBruteForce) {
  for (const auto& nr : small_corpus(32)) {
    const Ring& r = nr.ring;
    const oracle::Tables t = oracle::tables_of(r);
    const auto right = oracle::all_right_ideals(t);
    std::vector<oracle::Mask> brute;
    for (const auto& j : right) {
      if (j.count() == 1) continue;
      bool minimal = true;
      for (const auto& k : right)
        if (k.count() > 1 && k.count() < j.count() && (k & ~j).none()) minimal = false;
      if (minimal) brute.push_back(j);
    }
    const auto lib = minimal_right_ideals(r);
    ASSERT_EQ(lib.size(), brute.size()) << nr.name;
    const oracle::Mask c = oracle::center_of(t, t.all());
    for (const auto& m : lib) {
      const oracle::Mask mm = mask_of(m.ideal);
      EXPECT_NE(std::find(brute.begin(), brute.end(), mm), brute.end()) << nr.name;
      EXPECT_EQ(m.nilpotent, oracle::nilpotent(t, mm)) << nr.name;
      EXPECT_EQ(m.two_sided, oracle::left_ideal(t, mm)) << nr.name;
      EXPECT_EQ(m.central, (mm & ~c).none()) << nr.name;
    }
    EXPECT_TRUE(recheck(r, minimal_right_ideals_certificate(r)).ok) << nr.name;
  }
}

TEST(Predicates, IdealCoreIsLargestTwoSidedIdealInside) {
  const Ring r = preset_ring("m2_z2");
  for (const auto& j : all_ideals(r, IdealKind::right)) {
    const AdditiveSubgroup core = ideal_core(j);
    EXPECT_TRUE(core.is_two_sided());
    EXPECT_TRUE(core.subset_of(j));
    for (const auto& i : all_ideals(r, IdealKind::two_sided))
      if (i.subset_of(j)) {
        EXPECT_TRUE(i.subset_of(core));
      }
  }
}

TEST(Predicates, CentralMultiplierIsConstructiveInCharacteristicTwo) {
  const Ring r = preset_ring("z2q8");
  for (Index i = 1; i < r.order(); ++i) {
    const Element x = r.element_at(i);
    const auto m = find_central_multiplier(r, x);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(m->constructive);
    EXPECT_TRUE(is_central(r, m->c));
    EXPECT_TRUE(is_central(r, m->y));
    EXPECT_FALSE(r.is_zero(m->y));
  }
}

TEST(Predicates, QueryCertificatesRecheck) {
  for (const char* p : {"z2q8", "m2_z2", "matrix_delta_z9", "z2_plus_m2_z2"}) {
    const Ring r = preset_ring(p);
    EXPECT_TRUE(recheck(r, center_certificate(r)).ok) << p;
    EXPECT_TRUE(recheck(r, idempotents_certificate(r)).ok) << p;
    EXPECT_TRUE(recheck(r, is_commutative(r)).ok) << p;
  }
}

TEST(Modules, EssentialSubmodulesOfZn) {
  for (Residue n = 2; n <= 24; ++n) {
    const FiniteModule m = scalar_module(n);
    for (Residue d = 1; d < n; ++d) {
      if (n % d) continue;
      const HowellForm sub(n, 1, std::vector<std::vector<Residue>>{{d}});
      const bool brute = oracle::essential_scalar_submodule(int(n), 1, [&](const std::vector<int>& v) {
        return v[0] % int(d) == 0;
      });
      const Certificate c = is_essential_submodule(m, sub);
      EXPECT_EQ(c.verdict, brute) << n << " " << d;
      EXPECT_TRUE(recheck_module(m, sub, c).ok);
    }
  }
}

TEST(Modules, RejectsNonSubmodule) {
  const Ring q = quaternion_algebra({4, 3, 3});
  const FiniteModule m = scalar_restriction(q);
  EXPECT_EQ(m.order(), 256u);
  const HowellForm sub(4, 4, std::vector<std::vector<Residue>>{{2, 0, 0, 0}});
  EXPECT_TRUE(is_submodule(m, sub));
  const HowellForm gen = submodule_generated(m, {{1, 1, 0, 0}});
  EXPECT_TRUE(is_submodule(m, gen));
  EXPECT_FALSE(is_essential_submodule(m, sub).verdict);
}
