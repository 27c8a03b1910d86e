#include <gtest/gtest.h>

#include <random>

#include "finring/constructions.hpp"
#include "finring/predicates.hpp"
#include "finring/subgroup.hpp"
#include "oracles.hpp"

using namespace finring;

namespace {

/// Z_n tables with multiplication x*y = f(x, y).
template <class F>
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> zn_tables(std::uint32_t n, F f) {
  std::vector<std::uint32_t> add(n * n), mul(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = f(a, b) % n;
    }
  return {add, mul};
}

oracle::Mask mask_of(const AdditiveSubgroup& s) {
  oracle::Mask m;
  for (Index i : s.indices()) m.set(i);
  return m;
}

std::vector<Ring> small_rings() {
  std::vector<Ring> out;
  for (const auto& nr : ring_corpus())
    if (nr.ring.order() <= 81) out.push_back(nr.ring);
  return out;
}

}  // namespace

TEST(Ring, ZnArithmetic) {
  const Ring r = make_zn(12);
  EXPECT_EQ(r.order(), 12u);
  EXPECT_EQ(r.characteristic(), 12u);
  ASSERT_TRUE(r.unital());
  EXPECT_EQ(*r.one(), make_element(r, {1}));
  EXPECT_EQ(r.mul(make_element(r, {5}), make_element(r, {7})), make_element(r, {11}));
  EXPECT_EQ(r.add(make_element(r, {5}), make_element(r, {7})), r.zero());
  EXPECT_EQ(r.neg(make_element(r, {5})), make_element(r, {7}));
  EXPECT_EQ(r.power(make_element(r, {2}), 3), make_element(r, {8}));
  EXPECT_EQ(r.scale(-1, make_element(r, {3})), make_element(r, {9}));
}

TEST(Ring, IndexRoundTripFollowsCanonicalOrder) {
  const Ring r = preset_ring("m2_z2");
  Index prev = 0;
  for (Index i = 0; i < r.order(); ++i) {
    const Element e = r.element_at(i);
    EXPECT_EQ(r.index_of(e), i);
    if (i) {
      EXPECT_LT(r.element_at(prev), e);
    }
    prev = i;
  }
  EXPECT_EQ(r.element_at(1), make_element(r, {0, 0, 0, 1}));  // last coefficient least significant
}

TEST(Ring, TableRingRejectsNonAssociativeProduct) {
  // x*y = 1 for all non-zero x, y violates the ring axioms on Z_3
  auto [add, mul] = zn_tables(3, [](std::uint32_t a, std::uint32_t b) { return a && b ? 1u : 0u; });
  try {
    make_table_ring(add, mul, 0);
    FAIL() << "expected an axiom violation";
  } catch (const AxiomViolation& e) {
    EXPECT_FALSE(e.witness().empty());
    EXPECT_FALSE(e.axiom().empty());
  }
}

TEST(Ring, TableRingRejectsWrongOne) {
  auto [add, mul] = zn_tables(4, [](std::uint32_t a, std::uint32_t b) { return a * b; });
  EXPECT_THROW(make_table_ring(add, mul, 0, 2u), AxiomViolation);
  const Ring r = make_table_ring(add, mul, 0, 1u);
  EXPECT_TRUE(r.unital());
}

TEST(Ring, StructureRingRejectsNonAssociativeConstants) {
  // rank 2 over Z_2 with e1 e1 = e2, e1 e2 = 0, e2 e1 = e1 is not associative
  std::vector<Residue> c(8, 0);
  c[(0 * 2 + 0) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 0] = 1;
  EXPECT_THROW(make_structure_ring(2, 2, c), AxiomViolation);
}

TEST(Ring, TableCopyAgreesWithStructureRing) {
  for (const Ring& r : small_rings()) {
    if (!r.is_structure()) continue;
    const Ring t = to_table_ring(r);
    ASSERT_EQ(t.order(), r.order());
    for (Index a = 0; a < r.order(); a += 3)
      for (Index b = 0; b < r.order(); b += 5) {
        EXPECT_EQ(t.index_of(t.mul(t.element_at(a), t.element_at(b))),
                  r.index_of(r.mul(r.element_at(a), r.element_at(b))));
        EXPECT_EQ(t.index_of(t.add(t.element_at(a), t.element_at(b))),
                  r.index_of(r.add(r.element_at(a), r.element_at(b))));
      }
  }
}

TEST(Ring, DirectSumIsComponentwise) {
  const Ring a = make_zn(4), b = preset_ring("m2_z2");
  const Ring s = direct_sum(a, b);
  EXPECT_EQ(s.order(), a.order() * b.order());
  EXPECT_EQ(s.characteristic(), 4u);
  EXPECT_TRUE(s.unital());
  const oracle::Tables t = oracle::tables_of(s);
  EXPECT_EQ(oracle::center_of(t, t.all()).count(), center(a).size() * center(b).size());
}

TEST(Ring, CharacteristicMatchesBruteForce) {
  for (const Ring& r : small_rings()) {
    std::uint64_t k = 1;
    for (;; ++k) {
      bool zero = true;
      for (Index i = 0; i < r.order() && zero; ++i) zero = r.is_zero(r.scale(static_cast<std::int64_t>(k), r.element_at(i)));
      if (zero) break;
    }
    EXPECT_EQ(r.characteristic(), k) << r.name();
  }
}

TEST(Ideals, CenterMatchesBruteForce) {
  for (const Ring& r : small_rings()) {
    const oracle::Tables t = oracle::tables_of(r);
    EXPECT_EQ(mask_of(center(r)), oracle::center_of(t, t.all())) << r.name();
  }
}

TEST(Ideals, RightIdealLatticeMatchesBruteForce) {
  for (const Ring& r : small_rings()) {
    if (r.order() > kOneSidedIdealCap) continue;
    const oracle::Tables t = oracle::tables_of(r);
    auto brute = oracle::all_right_ideals(t);
    std::vector<oracle::Mask> lib;
    for (const auto& i : all_ideals(r, IdealKind::right)) lib.push_back(mask_of(i));
    const auto key = [](const oracle::Mask& a, const oracle::Mask& b) { return a.to_string() < b.to_string(); };
    std::sort(brute.begin(), brute.end(), key);
    std::sort(lib.begin(), lib.end(), key);
    EXPECT_EQ(lib, brute) << r.name();
  }
}

TEST(Ideals, TwoSidedIdealsAreTheBilateralRightIdeals) {
  for (const Ring& r : small_rings()) {
    if (r.order() > kOneSidedIdealCap) continue;
    const oracle::Tables t = oracle::tables_of(r);
    std::size_t brute = 0;
    for (const auto& m : oracle::all_right_ideals(t)) brute += oracle::left_ideal(t, m);
    EXPECT_EQ(all_ideals(r, IdealKind::two_sided).size(), brute) << r.name();
  }
}

TEST(Ideals, GeneratedIdealsMatchClosure) {
  const Ring r = preset_ring("ut2_z2");
  const oracle::Tables t = oracle::tables_of(r);
  for (Index i = 0; i < r.order(); ++i) {
    const auto right = right_ideal_generated(r, {r.element_at(i)});
    EXPECT_EQ(mask_of(right), oracle::principal_right(t, static_cast<std::uint32_t>(i)));
    const auto two = two_sided_ideal_generated(r, {r.element_at(i)});
    EXPECT_TRUE(two.is_two_sided());
    EXPECT_TRUE(right.subset_of(two));
  }
}

TEST(Ideals, AnnihilatorsMatchBruteForce) {
  for (const Ring& r : small_rings()) {
    const oracle::Tables t = oracle::tables_of(r);
    for (Index i = 0; i < r.order(); i += 7) {
      oracle::Mask s;
      s.set(i);
      EXPECT_EQ(mask_of(left_annihilator(r, {r.element_at(i)})), oracle::left_annihilator(t, s)) << r.name();
      oracle::Mask right;
      for (std::uint32_t x = 0; x < t.m; ++x)
        if (t.times(static_cast<std::uint32_t>(i), x) == t.zero) right.set(x);
      EXPECT_EQ(mask_of(right_annihilator(r, {r.element_at(i)})), right) << r.name();
    }
  }
}

TEST(Ideals, NilpotencyIndex) {
  const Ring r = make_zn(8);
  EXPECT_EQ(nilpotency_index(r, make_element(r, {2})), 3u);
  EXPECT_EQ(nilpotency_index(r, make_element(r, {4})), 2u);
  EXPECT_FALSE(nilpotency_index(r, make_element(r, {3})).has_value());
  const Ring z = make_zero_multiplication_ring(5);
  EXPECT_EQ(nilpotency_index(z, make_element(z, {3})), 2u);
  EXPECT_TRUE(is_nilpotent_subgroup(z, additive_closure(z, {make_element(z, {1})})));
}

TEST(Ideals, QuotientMatchesBruteForce) {
  const Ring r = preset_ring("z2q8");
  const oracle::Tables t = oracle::tables_of(r);
  Element hat = r.zero();
  for (std::size_t g = 0; g < 8; ++g) hat = r.add(hat, r.basis(g));
  const AdditiveSubgroup h = two_sided_ideal_generated(r, {hat});
  ASSERT_EQ(h.size(), 2u);
  const Ring q = quotient_ring(h);
  const oracle::Tables qt = oracle::quotient(t, mask_of(h));
  const oracle::Tables lt = oracle::tables_of(q);
  EXPECT_EQ(q.order(), 128u);
  EXPECT_EQ(lt.add, qt.add);
  EXPECT_EQ(lt.mul, qt.mul);
  EXPECT_FALSE(is_centrally_essential(q).verdict);
  EXPECT_FALSE(oracle::centrally_essential(qt, qt.all()));
}

TEST(Ideals, ReifiedSubringKeepsProducts) {
  const Ring r = preset_ring("z2q8");
  const Ring z = reify(center(r));
  EXPECT_EQ(z.order(), 32u);
  EXPECT_TRUE(is_commutative(z).verdict);
}

TEST(Ideals, IdempotentsMatchBruteForce) {
  for (const Ring& r : small_rings()) {
    std::vector<Element> brute, central;
    for (Index i = 0; i < r.order(); ++i) {
      const Element e = r.element_at(i);
      if (r.mul(e, e) != e) continue;
      brute.push_back(e);
      if (is_central(r, e)) central.push_back(e);
    }
    EXPECT_EQ(idempotents(r), brute) << r.name();
    EXPECT_EQ(central_idempotents(r), central) << r.name();
  }
}

TEST(Ideals, AllIdealsRespectsCap) {
  EXPECT_THROW(all_ideals(preset_ring("m2_z3"), IdealKind::right), CapExceeded);
  EXPECT_NO_THROW(all_ideals(preset_ring("m2_z3"), IdealKind::right, 81));
}

TEST(Ring, RandomElementsSatisfyRingAxioms) {
  std::mt19937_64 rng(2024);
  for (const auto& nr : ring_corpus()) {
    const Ring& r = nr.ring;
    std::uniform_int_distribution<Index> pick(0, r.order() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const Element a = r.element_at(pick(rng)), b = r.element_at(pick(rng)), c = r.element_at(pick(rng));
      EXPECT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) << nr.name;
      EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))) << nr.name;
      EXPECT_EQ(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))) << nr.name;
      EXPECT_TRUE(r.is_zero(r.add(a, r.neg(a)))) << nr.name;
      if (r.one()) {
        EXPECT_EQ(r.mul(*r.one(), a), a) << nr.name;
      }
    }
  }
}
