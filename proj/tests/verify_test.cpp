#include "oddsigma/verify.hpp"

#include <gtest/gtest.h>

#include "oddsigma/errors.hpp"
#include "oddsigma/polygonal.hpp"
#include "oracles.hpp"

namespace oddsigma {
namespace {

using V = std::vector<std::int64_t>;

const SigmaTable& table() {
  static const SigmaTable t = build_sigma_table_serial(10000);
  return t;
}

TEST(ExpectedResidue, GoldenCases) {
  EXPECT_EQ(expected_residue({Conjecture::kI, 5}, 3), (ResidueClass{0, 2}));
  EXPECT_EQ(expected_residue({Conjecture::kII, 7}, 2), (ResidueClass{2, 7}));
  EXPECT_EQ(expected_residue({Conjecture::kI, 3}, 3), (ResidueClass{1, 2}));
  // 2 = P_5(-1), sign(-1) = -1: -2 mod 7
  EXPECT_EQ(expected_residue({Conjecture::kIII, 7}, 2), (ResidueClass{5, 7}));
  EXPECT_EQ(expected_residue({Conjecture::kIII, 7}, 3), (ResidueClass{0, 7}));
  EXPECT_EQ(expected_residue({Conjecture::kII, 1}, 5), (ResidueClass{0, 1}));
}

TEST(ExpectedResidue, Errors) {
  EXPECT_THROW(expected_residue({Conjecture::kI, 2}, 3), DivergenceError);
  EXPECT_THROW(expected_residue({Conjecture::kI, 1}, 3), DivergenceError);
  EXPECT_THROW(expected_residue({Conjecture::kII, 0}, 3), UnsupportedOrderError);
  EXPECT_THROW(expected_residue({Conjecture::kII, 3}, 0), OutOfRangeError);
}

TEST(SignedWitnessResidue, AgreeingAndConflictingWitnesses) {
  const V agree{0, 1};     // both sign +1
  EXPECT_EQ(signed_witness_residue(agree, 5, 7), 5);
  const V conflict{1, 2};  // +1 and -1
  EXPECT_THROW(signed_witness_residue(conflict, 5, 7), AmbiguityError);
  // -5 == 5 mod 2, so opposite signs agree there.
  EXPECT_EQ(signed_witness_residue(conflict, 5, 2), 1);
  EXPECT_THROW(signed_witness_residue(V{}, 5, 7), std::invalid_argument);
}

TEST(ExpectedResidue, PentagonalWitnessIsAlwaysUnique) {
  for (std::int64_t n = 1; n <= 100000; ++n) {
    ASSERT_LE(polygonal_index(5, n).size(), 1u) << n;
  }
}

TEST(CheckCongruence, ModulusSixHolds) {
  const auto r = check_congruence_serial({Conjecture::kII, 6}, 10000, table());
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.trivial);
  EXPECT_FALSE(r.minimal_counterexample.has_value());
}

TEST(CheckCongruence, ModulusFiveFailsAtThree) {
  const auto r = check_congruence_serial({Conjecture::kII, 5}, 100, table());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(*r.minimal_counterexample, (Counterexample{3, 6, 0, 5}));
  EXPECT_TRUE(fails(*r.minimal_counterexample));
}

TEST(CheckCongruence, SquaresFailFirstAtTwo) {
  // 2 is not a square but sigma_odd(2) + 2 sigma_odd(1) = 3 is odd.
  auto so = [](std::int64_t r) { return oracle::sigma_odd(r); };
  ASSERT_EQ(oracle::convolution(4, 2, [](std::int64_t) { return 1; }, so), 3);
  ASSERT_EQ(oracle::convolution(4, 1, [](std::int64_t) { return 1; }, so), 1);

  const CongruenceCase squares{Conjecture::kI, 4};
  const auto r = check_congruence_serial(squares, 100, table());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(*r.minimal_counterexample, (Counterexample{2, 3, 0, 2}));

  // n = 4 also fails: a_4(4) + b_4(4) = 1.
  ASSERT_EQ(expected_residue(squares, 4), (ResidueClass{0, 2}));
  EXPECT_EQ(mod_floor(congruence_lhs(table(), squares, 4), 2), 1);
}

TEST(CheckCongruence, TriangularFailsAtOne) {
  // 1 = P_3(1) = P_3(-2) needs odd, but P_3(0) = P_3(-1) = 0 contributes 2.
  const CongruenceCase tri{Conjecture::kI, 3};
  const auto r = check_congruence_serial(tri, 100, table());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(*r.minimal_counterexample, (Counterexample{1, 2, 1, 2}));
  auto so = [](std::int64_t r) { return oracle::sigma_odd(r); };
  const auto at_three = oracle::convolution(3, 3, [](std::int64_t) { return 1; }, so);
  ASSERT_EQ(at_three, 10);  // 2 sigma_odd(3) + 2 sigma_odd(2), even
  EXPECT_EQ(congruence_lhs(table(), tri, 3), at_three);
  EXPECT_EQ(expected_residue(tri, 3), (ResidueClass{1, 2}));
}

TEST(CheckCongruence, SignedFamilyFailsFirstAtTwo) {
  // n = 2 = P_5(-1): lhs = sigma_odd(2) + sigma_odd(1) = 2, required -2.
  for (std::int64_t m : {3, 5, 6, 7, 50}) {
    const auto r = check_congruence_serial({Conjecture::kIII, m}, 100, table());
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(*r.minimal_counterexample, (Counterexample{2, 2, mod_floor(-2, m), m}));
    EXPECT_EQ(congruence_lhs(table(), {Conjecture::kIII, m}, 3), 4);
  }
}

TEST(CheckCongruence, TrivialModulusOne) {
  for (auto c : {Conjecture::kII, Conjecture::kIII}) {
    const auto r = check_congruence_serial({c, 1}, 500, table());
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.trivial);
  }
}

TEST(CheckCongruence, Errors) {
  EXPECT_THROW(check_congruence_serial({Conjecture::kI, 2}, 10, table()), DivergenceError);
  EXPECT_THROW(check_congruence_serial({Conjecture::kII, 3}, 10001, table()), OutOfRangeError);
  EXPECT_THROW(check_congruence_serial({Conjecture::kII, 3}, 0, table()), OutOfRangeError);
}

TEST(CheckCongruence, CounterexampleIsMinimal) {
  for (auto c : {Conjecture::kI, Conjecture::kII, Conjecture::kIII}) {
    for (std::int64_t m = 3; m <= 40; ++m) {
      const CongruenceCase cc{c, m};
      const auto r = check_congruence_serial(cc, 2000, table());
      if (r.holds) continue;
      const auto& cx = *r.minimal_counterexample;
      ASSERT_EQ(cx.lhs_value, congruence_lhs(table(), cc, cx.n));
      ASSERT_TRUE(fails(cx));
      for (std::int64_t n = 1; n < cx.n; ++n) {
        const auto rhs = expected_residue(cc, n);
        ASSERT_EQ(mod_floor(congruence_lhs(table(), cc, n), rhs.modulus), rhs.residue);
      }
    }
  }
}

TEST(CheckCongruence, LhsIndependentOfLibraryConvolution) {
  auto so = [](std::int64_t r) { return table().sigma_odd(r); };
  for (std::int64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(congruence_lhs(table(), {Conjecture::kIII, 7}, n),
              oracle::convolution(5, n, oracle::triangular_sign, so));
    ASSERT_EQ(congruence_lhs(table(), {Conjecture::kI, 9}, n),
              oracle::convolution(9, n, [](std::int64_t) { return 1; }, so));
  }
}

TEST(ScanIff, SmallRanges) {
  const auto two = scan_iff(Conjecture::kII, 2, 2, 10, table());
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(two[0].holds);

  const auto reports = scan_iff(Conjecture::kIII, 1, 12, 1000, table());
  ASSERT_EQ(reports.size(), 12u);
  EXPECT_TRUE(reports[0].trivial);
  EXPECT_EQ(holds_set(reports), (V{2, 4}));
  for (const auto& r : reports) {
    if (r.holds) continue;
    EXPECT_EQ(r.minimal_counterexample->n, 2);
    EXPECT_EQ(r.minimal_counterexample->lhs_value, 2);
  }

  EXPECT_THROW(scan_iff(Conjecture::kI, 2, 10, 100, table()), DivergenceError);
  EXPECT_THROW(scan_iff(Conjecture::kI, 9, 3, 100, table()), OutOfRangeError);
}

TEST(ConjectureIds, Parse) {
  EXPECT_EQ(conjecture_from_int(1), Conjecture::kI);
  EXPECT_EQ(conjecture_from_int(3), Conjecture::kIII);
  EXPECT_THROW(conjecture_from_int(4), std::invalid_argument);
}

}  // namespace
}  // namespace oddsigma
