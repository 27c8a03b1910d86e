#include <gtest/gtest.h>

#include "finring/constructions.hpp"
#include "finring/semiring.hpp"

using namespace finring;

TEST(Semiring, Order5Example) {
  const Semiring s = example_order5();
  EXPECT_EQ(s.order(), 5u);
  EXPECT_EQ(semiring_center(s), (std::vector<Semiring::Elem>{0, 1, 4}));
  const Certificate com = is_commutative_semiring(s);
  EXPECT_FALSE(com.verdict);
  ASSERT_EQ(com.witness.size(), 2u);
  EXPECT_EQ(com.witness[0].coeffs[0], 2u);
  EXPECT_EQ(com.witness[1].coeffs[0], 3u);
  EXPECT_TRUE(is_ce_semiring(s).verdict);
  EXPECT_TRUE(is_semisubtractive(s).verdict);
  for (const auto& c : {com, is_ce_semiring(s), is_semisubtractive(s), semiring_center_certificate(s)})
    EXPECT_TRUE(recheck(s, c).ok) << c.property;
}

TEST(Semiring, AxiomViolationsNameTheAxiom) {
  auto mul = example_order5().mul_table();
  mul[1] = 1;  // 0 * 1 = 1: zero no longer absorbs
  try {
    make_semiring(example_order5().add_table(), mul, 0, 1);
    FAIL() << "expected an axiom violation";
  } catch (const AxiomViolation& e) {
    EXPECT_FALSE(e.axiom().empty());
    EXPECT_FALSE(e.witness().empty());
  }
  // non-commutative addition
  EXPECT_THROW(make_semiring({0, 1, 0, 1}, {0, 0, 0, 1}, 0), AxiomViolation);
}

TEST(Semiring, SmallExamples) {
  const Semiring b = boolean_semiring();
  EXPECT_TRUE(is_commutative_semiring(b).verdict);
  EXPECT_TRUE(is_ce_semiring(b).verdict);
  EXPECT_TRUE(is_semisubtractive(b).verdict);
  const Semiring d = diamond_semiring();
  const Certificate sub = is_semisubtractive(d);
  EXPECT_FALSE(sub.verdict);  // u and v differ by no element
  EXPECT_TRUE(recheck(d, sub).ok);
}

TEST(Semiring, RingAdapterAgreesWithRingPredicates) {
  for (const char* p : {"m2_z2", "ut2_z2", "zero_mult_z3"}) {
    const Ring r = to_table_ring(preset_ring(p));
    const Semiring s = ring_as_semiring(r);
    EXPECT_EQ(s.order(), r.order());
    EXPECT_TRUE(is_semisubtractive(s).verdict) << p;  // rings are subtractive
    EXPECT_EQ(is_commutative_semiring(s).verdict, std::string(p) == "zero_mult_z3") << p;
  }
}

TEST(Semiring, CheckerRejectsTamperedCertificate) {
  const Semiring s = example_order5();
  Certificate c = is_commutative_semiring(s);
  c.witness = {Element{{0}}, Element{{1}}};  // 0 and 1 commute
  EXPECT_FALSE(recheck(s, c).ok);
  Certificate ce = is_ce_semiring(s);
  ce.verdict = false;
  EXPECT_FALSE(recheck(s, ce).ok);
}
