#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nlmc/codes.hpp"
#include "nlmc/error.hpp"

using namespace nlmc;

namespace {

const GeneratorMatrix kHamming = GeneratorMatrix::from_strings({"1000110", "0100101", "0010011", "0001111"});

std::vector<BitVec> all_codewords(const GeneratorMatrix& g) {
  std::vector<BitVec> words;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << g.dimension()); ++t) {
    BitVec w(g.length());
    for (std::size_t i = 0; i < g.dimension(); ++i)
      if ((t >> i) & 1u) w ^= g.row(i);
    words.push_back(std::move(w));
  }
  return words;
}

GeneratorMatrix random_code(std::size_t m, std::size_t s, std::mt19937_64& rng) {
  for (;;) {
    std::vector<BitVec> rows(m, BitVec(s));
    for (auto& r : rows)
      for (std::size_t j = 0; j < s; ++j)
        if (rng() & 1u) r.set(j);
    if (rank_f2(rows) == m) return GeneratorMatrix(s, std::move(rows));
  }
}

// Binomial sums in long double, only as a cross-check away from the threshold.
bool gv_approx(std::uint64_t s, std::uint64_t m, std::uint64_t d) {
  long double sum = 0, term = 1;
  for (std::uint64_t i = 0; i + 2 <= d; ++i) {
    sum += term;
    term = term * static_cast<long double>(s - 1 - i) / static_cast<long double>(i + 1);
  }
  return sum < std::pow(2.0L, static_cast<long double>(s - m));
}

}  // namespace

TEST(MinDistance, Examples) {
  EXPECT_EQ(min_distance(GeneratorMatrix::identity(3)), 1u);
  EXPECT_EQ(min_distance(kHamming), 3u);
  EXPECT_EQ(min_distance(GeneratorMatrix::from_strings({"11111111"})), 8u);
  EXPECT_THROW(min_distance(GeneratorMatrix::from_strings({"110", "110"})), ValidationError);
  Limits tight;
  tight.max_code_dimension = 3;
  EXPECT_THROW(min_distance(kHamming, tight), BudgetError);
}

TEST(MinDistance, EqualsMinimumPairwiseDistance) {
  std::mt19937_64 rng(31);
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto g = random_code(m, m + 5, rng);
    const auto words = all_codewords(g);
    std::size_t best = SIZE_MAX;
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = a + 1; b < words.size(); ++b) best = std::min(best, hamming_distance(words[a], words[b]));
    EXPECT_EQ(min_distance(g), best) << "m=" << m;
  }
}

TEST(SpanDistance, DegenerateAndEmpty) {
  const std::vector<BitVec> twice = {BitVec::from_string("0110"), BitVec::from_string("0110")};
  EXPECT_EQ(span_min_distance(twice), 2u);
  const std::vector<BitVec> zero = {BitVec(3)};
  EXPECT_EQ(span_min_distance(zero), 0u);
  EXPECT_EQ(span_min_distance(std::vector<BitVec>{}), 0u);
}

TEST(LinearAlgebra, RankAndRowSpace) {
  EXPECT_EQ(rank_f2(kHamming.rows()), 4u);
  const std::vector<BitVec> dependent = {BitVec::from_string("1100"), BitVec::from_string("0110"),
                                         BitVec::from_string("1010")};
  EXPECT_EQ(rank_f2(dependent), 2u);
  std::vector<BitVec> mixed = kHamming.rows();
  mixed[0] ^= mixed[3];
  mixed[2] ^= mixed[1];
  EXPECT_TRUE(same_row_space(mixed, kHamming.rows()));
  mixed[0].flip(0);
  EXPECT_FALSE(same_row_space(mixed, kHamming.rows()));
}

TEST(LinearAlgebra, NullSpace) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 20; ++t) {
    const auto h = random_code(4, 10, rng);
    const auto kernel = null_space(h.rows(), 10);
    EXPECT_EQ(kernel.size(), 6u);
    EXPECT_EQ(rank_f2(kernel), 6u);
    for (const BitVec& v : kernel)
      for (const BitVec& r : h.rows()) EXPECT_EQ((v & r).count() % 2, 0u);
  }
}

TEST(CodeFormat, RoundTripAndErrors) {
  EXPECT_EQ(parse_code(format_code(kHamming)), kHamming);
  EXPECT_EQ(parse_code("# c\ncode 1 3\n111\n"), GeneratorMatrix::from_strings({"111"}));
  EXPECT_THROW(parse_code("code 2 3\n111\n"), ParseError);
  EXPECT_THROW(parse_code("code 1 3\n11\n"), ParseError);
  EXPECT_THROW(parse_code("code 1 3\n1a1\n"), ParseError);
  EXPECT_THROW(parse_code("111\n"), ParseError);
  EXPECT_THROW(read_code_file("/nonexistent.code"), ParseError);
}

TEST(Gv, Feasibility) {
  EXPECT_TRUE(gv_feasible(7, 4, 3));
  EXPECT_FALSE(gv_feasible(6, 4, 3));
  for (std::uint64_t s = 5; s < 40; ++s) EXPECT_TRUE(gv_feasible(s, 5, 1));
  EXPECT_THROW(gv_feasible(3, 4, 2), ValidationError);
}

TEST(Gv, MinLength) {
  EXPECT_EQ(gv_min_length(4, 3), 7u);
  for (std::uint64_t m = 1; m <= 20; ++m) EXPECT_EQ(gv_min_length(m, 1), m);
  const auto s = gv_min_length(50, 25);
  EXPECT_EQ(s, 136u);
  EXPECT_LE(s, 150u);
  EXPECT_EQ(gv_min_length(10, 5), 21u);
  EXPECT_EQ(gv_min_length(8, 4), 15u);
  EXPECT_EQ(gv_min_length(200, 100), 575u);
}

TEST(Gv, MonotoneAndMatchesFloatAwayFromThreshold) {
  for (std::uint64_t m = 1; m <= 40; m += 3)
    for (std::uint64_t d = 1; d <= 30; d += 4) {
      bool seen = false;
      for (std::uint64_t s = std::max(m, d); s < 4 * (m + d); ++s) {
        const bool f = gv_feasible(s, m, d);
        if (seen) EXPECT_TRUE(f) << s << " " << m << " " << d;
        seen = seen || f;
        EXPECT_EQ(f, gv_approx(s, m, d));
      }
    }
}

TEST(Gv, GreedyConstructionMeetsDistance) {
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    for (auto [m, d] : {std::pair<std::size_t, std::size_t>{4, 3}, {6, 3}, {8, 4}, {10, 5}, {5, 1}, {3, 2}}) {
      const auto g = gv_code(m, d, seed);
      EXPECT_EQ(g.dimension(), m);
      EXPECT_EQ(g.length(), gv_min_length(m, d));
      EXPECT_GE(min_distance(g), d);
    }
  const auto g = varshamov_code(8, 4, 14, 7);
  ASSERT_TRUE(g.has_value());
  EXPECT_GE(min_distance(*g), 4u);
}

TEST(Mrrw, BValues) {
  // frozen from an independent high-precision evaluation
  EXPECT_NEAR(mrrw_B({0.32, 0.2155}), 0.4276053, 1e-6);
  EXPECT_NEAR(mrrw_B({0.4, 0.28409}), 0.28260, 5e-4);
  for (double delta : {0.05, 0.1, 0.3, 0.45})
    EXPECT_NEAR(mrrw_B({0.0, delta}), 1.0 - binary_entropy((1.0 - std::sqrt(1.0 - 2 * delta)) / 2.0), 1e-12);
  EXPECT_THROW(MrrwQuery::make(0.5, 0.3), ValidationError);
  EXPECT_THROW(MrrwQuery::make(0.1, 0.5), ValidationError);
  EXPECT_THROW(MrrwQuery::make(-0.1, 0.2), ValidationError);
}

TEST(Mrrw, RateBound) {
  const auto a = mrrw_rate_bound(0.2155);
  EXPECT_NEAR(a.bound, 0.427604, 1e-5);
  EXPECT_LT(a.bound, 0.431);
  EXPECT_LE(a.bound, mrrw_B({0.32, 0.2155}));
  const auto b = mrrw_rate_bound(0.28409);
  EXPECT_LT(b.bound, 0.284);
  EXPECT_NEAR(b.bound, 0.282220, 1e-5);
  EXPECT_GT(mrrw_rate_bound(1e-6).bound, 0.9999);
  // refined minimum is no worse than any grid point
  for (double u = 0.0; u <= 1 - 2 * 0.2155; u += 0.01) EXPECT_LE(a.bound, mrrw_B({u, 0.2155}) + 1e-12);
}

TEST(Mrrw, MinLength) {
  EXPECT_EQ(mrrw_min_length(200, 100), 466u);
  EXPECT_GT(mrrw_min_length(200, 100), 464u);
  EXPECT_EQ(mrrw_min_length(200, 200), 706u);
  EXPECT_GT(mrrw_min_length(200, 200), 704u);
  for (std::uint64_t m = 1; m <= 30; ++m) EXPECT_EQ(mrrw_min_length(m, 1), m);
  EXPECT_EQ(mrrw_min_length(10, 5), 24u);
}

TEST(Mrrw, BelowGvInTheLargeRegime) {
  for (std::uint64_t m = 30; m <= 200; m += 10)
    for (std::uint64_t d : {m / 4, (m - 1) / 2, m / 2, m, 2 * m})
      EXPECT_LE(mrrw_min_length(m, d), gv_min_length(m, d)) << m << " " << d;
}

TEST(Counting, Values) {
  auto c = counting_lower_bound(12, 12);
  EXPECT_NEAR(c.value, std::sqrt(49152.0) - 30.0, 1e-9);
  EXPECT_NEAR(c.value, 191.7025033688163, 1e-9);
  EXPECT_FALSE(c.vacuous);
  c = counting_lower_bound(12, 1);
  EXPECT_DOUBLE_EQ(c.value, 39.5);
  c = counting_lower_bound(4, 1);
  EXPECT_LT(c.value, 0);
  EXPECT_TRUE(c.vacuous);
  EXPECT_THROW(counting_lower_bound(4, 17), ValidationError);
}

TEST(Rank, BoundAndMonteCarlo) {
  EXPECT_DOUBLE_EQ(rank_prob_bound(8, 8), 256.0);
  EXPECT_DOUBLE_EQ(rank_prob_bound(8, 4), std::exp2(-8.0));
  EXPECT_DOUBLE_EQ(rank_prob_bound(20, 10), std::exp2(-80.0));
  const auto s = monte_carlo_rank(20, 10, 100000, 0);
  EXPECT_EQ(s.hits, 0u);
  const auto full = monte_carlo_rank(4, 4, 1000, 1);
  EXPECT_EQ(full.hits, 1000u);
  EXPECT_EQ(monte_carlo_rank(8, 4, 5000, 3).hits, monte_carlo_rank(8, 4, 5000, 3).hits);
  // rank <= 0 only for the zero matrix
  const auto zero = monte_carlo_rank(2, 0, 160000, 5);
  EXPECT_NEAR(zero.frequency(), 1.0 / 16, 0.005);
}

TEST(NlMc, Maps) {
  EXPECT_EQ(nl_upper_from_mc(4, 2), 6);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(nl_upper_from_mc(n, 0), 0);
  EXPECT_EQ(mc_lower_from_nl(4, 6), 2);
  EXPECT_EQ(mc_lower_from_nl(4, 0), 0);
  EXPECT_EQ(mc_lower_from_nl(4, 5), 2);
  EXPECT_EQ(mc_lower_from_nl(4, 4), 1);
  for (int n = 1; n <= 20; ++n)
    for (int mc = 0; mc <= n - 1; ++mc) EXPECT_EQ(mc_lower_from_nl(n, nl_upper_from_mc(n, mc)), mc);
  // least M: nl fits under M but not under M - 1
  for (int n = 2; n <= 8; ++n)
    for (std::int64_t nl = 0; nl < (std::int64_t{1} << (n - 1)); ++nl) {
      const int mc = mc_lower_from_nl(n, nl);
      EXPECT_LE(nl, nl_upper_from_mc(n, mc));
      if (mc > 0) EXPECT_GT(nl, nl_upper_from_mc(n, mc - 1));
    }
  EXPECT_THROW(nl_upper_from_mc(4, 4), ValidationError);
  EXPECT_THROW(mc_lower_from_nl(4, 9), ValidationError);
  EXPECT_EQ(degree_mc_lower(0), 0);
  EXPECT_EQ(degree_mc_lower(1), 0);
  EXPECT_EQ(degree_mc_lower(4), 3);
}
