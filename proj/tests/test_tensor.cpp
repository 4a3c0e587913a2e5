#include <gtest/gtest.h>

#include "charkit/reconstruct.hpp"
#include "charkit/tensor.hpp"

using namespace charkit;

namespace {

Weight W(const char* s) { return Weight::parse(s); }

const QuadraticCorpus& corpus() {
  static const QuadraticCorpus c = load_quadratic_corpus(default_data_dir());
  return c;
}

CharacterTable& table() {
  static const Reconstruction r = build_delta1(corpus());
  static CharacterTable t(r.op);
  return t;
}

CGSeries series(std::initializer_list<std::pair<const char*, long>> terms) {
  CGSeries s;
  for (const auto& [w, n] : terms) s.add(W(w), n);
  return s;
}

}  // namespace

TEST(CgDecompose, SevenTimesSeven) {
  auto s = cg_decompose(table(), W("0000001"), W("0000001"));
  EXPECT_EQ(s, series({{"0000002", 1}, {"1000000", 1}, {"0000010", 1}, {"0000000", 1}}));
  EXPECT_EQ(s.dimension(), 3136);
}

TEST(CgDecompose, TrivialFactor) {
  for (const char* m : {"0000000", "0000001", "1010000", "0003000"})
    EXPECT_EQ(cg_decompose(table(), W(m), Weight{}), series({{m, 1}}));
}

TEST(CgDecompose, SymmetricWithLeadingOne) {
  const char* ws[] = {"0000001", "1000000", "0000011", "0100000", "2000000"};
  for (const char* a : ws)
    for (const char* b : ws) {
      auto ab = cg_decompose(table(), W(a), W(b));
      EXPECT_EQ(ab, cg_decompose(table(), W(b), W(a)));
      EXPECT_EQ(ab.multiplicity(W(a) + W(b)), 1);
      EXPECT_EQ(ab.dimension(), weyl_dim(W(a)) * weyl_dim(W(b)));
      EXPECT_TRUE(ab.all_positive());
    }
}

TEST(CgDecompose, TrivialConstituentOnlyForEqualFactors) {
  for (int j = 1; j <= kRank; ++j)
    for (int k = 1; k <= kRank; ++k) {
      auto s = cg_decompose(table(), Weight::fundamental(j), Weight::fundamental(k));
      EXPECT_EQ(s.multiplicity(Weight{}), j == k ? 1 : 0) << j << "," << k;
    }
}

TEST(CgDecompose, SevenCubed) {
  auto seven_sq = cg_decompose(table(), W("0000001"), W("0000001"));
  CGSeries cubed;
  for (const auto& [w, n] : seven_sq.terms()) {
    CGSeries step = cg_decompose(table(), w, W("0000001"));
    for (const auto& [v, k] : step.terms()) cubed.add(v, n * k);
  }
  auto expected = series({{"0000003", 1}, {"0000011", 2}, {"0000100", 1}, {"1000001", 3}, {"0100000", 2}, {"0000001", 4}});
  EXPECT_EQ(cubed, expected);
  EXPECT_EQ(monomial_decompose(table(), W("0000003")), expected);
}

TEST(MonomialDecompose, Examples) {
  EXPECT_EQ(monomial_decompose(table(), W("0000002")),
            series({{"0000002", 1}, {"1000000", 1}, {"0000010", 1}, {"0000000", 1}}));
  EXPECT_EQ(monomial_decompose(table(), W("1000000")), series({{"1000000", 1}}));
  auto z1_cubed = monomial_decompose(table(), W("3000000"));
  EXPECT_EQ(z1_cubed.size(), 11u);
  EXPECT_EQ(z1_cubed.multiplicity(W("1000000")), 5);
  EXPECT_EQ(z1_cubed.multiplicity(W("3000000")), 1);
  EXPECT_EQ(z1_cubed.dimension(), 133 * 133 * 133);
}

TEST(Decompose, ErrorsOnInconsistentInput) {
  EXPECT_THROW(decompose_polynomial(table(), -MultiPoly::variable(7), W("0000001")), DecompositionError);
  EXPECT_THROW(decompose_polynomial(table(), MultiPoly::variable(1), W("0000001")), DecompositionError);
  Weight bad;
  bad[0] = -1;
  EXPECT_THROW(cg_decompose(table(), bad, W("0000001")), DomainError);
}

TEST(SeriesFamily, SevenAtTwo) {
  auto r = series_family_z7(table(), 7, 2);
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.computed, series({{"0000003", 1}, {"0000011", 1}, {"1000001", 1}, {"0000001", 1}}));
}

TEST(SeriesFamily, SevenAtOneReducesToQuadratic) {
  auto r = series_family_z7(table(), 7, 1);
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.computed, corpus().series.at({7, 7}));
  EXPECT_EQ(r.closed_form, corpus().series.at({7, 7}));
}

TEST(SeriesFamily, TwoAtTwo) {
  auto r = series_family_z7(table(), 2, 2);
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.computed, series({{"0200001", 1}, {"0110000", 1}, {"0100010", 1}, {"1100000", 1}}));
}

TEST(SeriesFamily, ClosedFormMismatchIsReported) {
  FamilyResult r = series_family_z7(table(), 1, 2);
  ASSERT_TRUE(r.match);
  CGSeries wrong = r.closed_form;
  wrong.add(W("0000001"), 1);
  EXPECT_FALSE(wrong == r.computed);
  EXPECT_THROW(z7_family_closed_form(0, 1), DomainError);
  EXPECT_THROW(z7_family_closed_form(7, 0), DomainError);
}

TEST(Roundtrip, AllQuadraticSeries) {
  auto report = verify_quadratic_roundtrip(table(), corpus());
  EXPECT_EQ(report.checked, 28u);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(cg_decompose(table(), W("1000000"), W("0000001")),
            series({{"1000001", 1}, {"0100000", 1}, {"0000001", 1}}));
  EXPECT_EQ(cg_decompose(table(), W("0001000"), W("0001000")).multiplicity(W("1100001")), 12);
}
