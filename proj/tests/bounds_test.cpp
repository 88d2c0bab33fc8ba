#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/census.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

const IndependentSetCensus& census_t(int t) {
  static const IndependentSetCensus c4 = count_independent_sets(build_g0(4), 4);
  static const IndependentSetCensus c6 = count_independent_sets(build_g0(6), 6);
  return t == 4 ? c4 : c6;
}

TEST(SurjectionTest, Examples) {
  EXPECT_EQ(surjection_count(4, 1), 1);
  EXPECT_EQ(surjection_count(4, 2), 14);
  EXPECT_EQ(surjection_count(4, 4), 24);
  EXPECT_EQ(surjection_count(0, 0), 1);
  EXPECT_EQ(surjection_count(3, 0), 0);
}

TEST(SurjectionTest, MatchesEnumeration) {
  for (int t = 1; t <= 7; ++t) {
    for (int k = 1; k <= t; ++k) {
      EXPECT_EQ(surjection_count(t, k), oracle::surjections_brute(t, k)) << t << "," << k;
    }
  }
}

TEST(IndependenceProbabilityTest, T4IsExactly23Over128) {
  const Rational p = exact_independence_probability(census_t(4), 4);
  EXPECT_EQ(to_fraction_string(p), "23/128");
  const auto good = oracle::independent_tuples_brute(oracle::g0_matrix(4), 4);
  EXPECT_EQ(p, Rational(good, 4096));
  EXPECT_EQ(good, 736U);
}

TEST(IndependenceProbabilityTest, T2IsOne) {
  const IndependentSetCensus c2 = count_independent_sets(build_g0(2), 2);
  EXPECT_EQ(exact_independence_probability(c2, 2), 1);
}

TEST(IndependenceProbabilityTest, CompleteGraph) {
  const IndependentSetCensus k5 = count_independent_sets(BitGraph::complete(5), 3);
  EXPECT_EQ(exact_independence_probability(k5, 3), Rational(1, 25));
}

TEST(IndependenceProbabilityTest, RejectsShortCensus) {
  const IndependentSetCensus c = count_independent_sets(build_g0(4), 3);
  EXPECT_THROW(exact_independence_probability(c, 4), InputError);
}

TEST(IndependenceProbabilityTest, T6MatchesMonteCarlo) {
  const double exact = to_double(exact_independence_probability(census_t(6), 6));
  const std::uint64_t samples = 1'000'000;
  const double estimate = oracle::monte_carlo_p_ind(6, samples, 2024);
  const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(samples));
  EXPECT_LE(std::abs(estimate - exact), 3 * sigma);
}

TEST(UnionUpperBoundTest, T4Value) {
  EXPECT_EQ(union_upper_bound_p_ind(census_t(4), 4), Rational(39, 16));
}

TEST(UnionUpperBoundTest, DominatesExactAndFitsExponent) {
  for (int t : {4, 6}) {
    const Rational bound = union_upper_bound_p_ind(census_t(t), t);
    EXPECT_GE(bound, exact_independence_probability(census_t(t), t));
    EXPECT_LE(log2_of(bound), -3.0 * t * t / 8 + 2 * t);
  }
}

TEST(ExpectationTest, Examples) {
  const ExpectationReport r9 = expected_mono_count(4, 1, 9, census_t(4));
  EXPECT_EQ(r9.expected_count, Rational(2898, 4096));
  EXPECT_EQ(r9.display_fraction(), "2898/4096");
  EXPECT_EQ(r9.per_set_mono, Rational(23, 4096));
  EXPECT_LT(r9.expected_count, 1);

  const ExpectationReport erdos = expected_mono_count(4, 0, 6, census_t(4));
  EXPECT_EQ(erdos.expected_count, Rational(15, 32));
  EXPECT_EQ(erdos.display_fraction(), "15/32");

  const ExpectationReport r10 = expected_mono_count(4, 1, 10, census_t(4));
  EXPECT_EQ(r10.expected_count, Rational(210 * 23, 32 * 128));
  EXPECT_GT(r10.expected_count, 1);

  EXPECT_THROW(expected_mono_count(4, 1, 3, census_t(4)), InputError);
}

TEST(ExpectationTest, UniformModel) {
  EXPECT_EQ(expected_uniform_count(4, 2, 6).expected_count, Rational(15, 32));
  EXPECT_EQ(expected_uniform_count(3, 3, 5).expected_count, Rational(10, 9));
  EXPECT_EQ(expected_uniform_count(4, 2, 6).display_fraction(), "15/32");
}

TEST(ExpectationProperty, MonotoneInNAndM) {
  for (int t : {4, 6}) {
    for (int m = 0; m <= 3; ++m) {
      for (std::uint64_t n = static_cast<std::uint64_t>(t); n < 60; ++n) {
        const auto here = expected_mono_count(t, m, n, census_t(t)).expected_count;
        EXPECT_LT(here, expected_mono_count(t, m, n + 1, census_t(t)).expected_count);
        EXPECT_GT(here, expected_mono_count(t, m + 1, n, census_t(t)).expected_count);
      }
    }
  }
}

TEST(CertifyTest, Examples) {
  const CertifiedN c41 = certify_max_n(4, 1, census_t(4));
  ASSERT_TRUE(c41.n);
  EXPECT_EQ(*c41.n, 9U);
  EXPECT_EQ(c41.report.display_fraction(), "2898/4096");

  const CertifiedN c40 = certify_max_n(4, 0, census_t(4));
  ASSERT_TRUE(c40.n);
  EXPECT_EQ(*c40.n, 6U);
  EXPECT_EQ(c40.next_report.expected_count, Rational(35, 32));
}

TEST(CertifyTest, NoCertifiableN) {
  // t = 2: a single pair is always monochromatic.
  const IndependentSetCensus c2 = count_independent_sets(build_g0(2), 2);
  EXPECT_FALSE(certify_max_n(2, 3, c2).n);
}

TEST(CertifyProperty, ThresholdStraddlesOneAndGrowsWithM) {
  for (int t : {4, 6}) {
    std::uint64_t previous = 0;
    for (int m = 0; m <= 4; ++m) {
      const CertifiedN c = certify_max_n(t, m, census_t(t));
      ASSERT_TRUE(c.n);
      EXPECT_LT(c.report.expected_count, 1);
      EXPECT_GE(c.next_report.expected_count, 1);
      EXPECT_EQ(c.report.n + 1, c.next_report.n);
      EXPECT_GE(*c.n, previous);
      previous = *c.n;
    }
  }
}

TEST(RationalFormatTest, DecimalAndFraction) {
  EXPECT_EQ(to_decimal_string(Rational(2898, 4096), 6), "0.707520");
  EXPECT_EQ(to_decimal_string(Rational(15, 32), 3), "0.469");
  EXPECT_EQ(to_decimal_string(Rational(7), 2), "7.00");
  EXPECT_EQ(to_fraction_string(Rational(2898, 4096)), "1449/2048");
  EXPECT_EQ(parse_fraction("23/128"), Rational(23, 128));
  EXPECT_THROW(parse_fraction("23/0"), InputError);
  EXPECT_THROW(parse_fraction("a/2"), InputError);
  EXPECT_NEAR(log2_of(Rational(BigInt(1), BigInt(1) << 5000)), -5000.0, 1e-9);
}

TEST(BoundTableTest, HeadlineRates) {
  const auto rows = asymptotic_bound_table(2, 8);
  auto find = [&](int ell, BoundSource s) {
    for (const auto& r : rows) {
      if (r.ell == ell && r.source == s) return r;
    }
    ADD_FAILURE() << "missing row";
    return BoundTableRow{};
  };
  const auto four = find(4, BoundSource::kThisConstruction);
  EXPECT_EQ(*four.rate, Rational(5, 4));
  EXPECT_EQ(four.base_2pow, "2.378");
  EXPECT_EQ(*find(3, BoundSource::kThisConstruction).rate, Rational(7, 8));
  EXPECT_EQ(*find(2, BoundSource::kThisConstruction).rate, Rational(1, 2));
  EXPECT_EQ(find(2, BoundSource::kThisConstruction).note, "erdos (coincides)");
  EXPECT_EQ(*find(2, BoundSource::kErdos).rate, Rational(1, 2));
  EXPECT_FALSE(find(3, BoundSource::kErdos).rate);
  EXPECT_NEAR(*find(3, BoundSource::kErdos).rate_value, std::log2(3.0) / 2, 1e-12);
  EXPECT_FALSE(find(5, BoundSource::kConlonFerber).rate);
  EXPECT_EQ(find(5, BoundSource::kConlonFerber).rate_num, "35+24C");

  for (int ell = 2; ell <= 8; ++ell) {
    const Rational ours = *find(ell, BoundSource::kThisConstruction).rate;
    const Rational lefmann = *find(ell, BoundSource::kLefmann).rate;
    EXPECT_EQ(ours > lefmann, ell > 2);
  }
  EXPECT_THROW(asymptotic_bound_table(1, 4), InputError);
  EXPECT_THROW(asymptotic_bound_table(5, 4), InputError);
}

TEST(BoundTableTest, CsvLayout) {
  const std::string csv = bound_table_csv(asymptotic_bound_table(4, 4));
  EXPECT_EQ(csv,
            "ell,source,rate_num,rate_den,base_2pow,note\n"
            "4,erdos,1,1,2.000,\n"
            "4,lefmann,1,1,2.000,\n"
            "4,conlon_ferber,28+24C,24,,C depends on ell mod 3 and is unspecified\n"
            "4,this_paper,5,4,2.378,\n");
}

}  // namespace
}  // namespace ramsey
