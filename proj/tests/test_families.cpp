#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nlmc/error.hpp"
#include "nlmc/families.hpp"

using namespace nlmc;

namespace {

// Schoolbook polynomial product and long division, bit by bit.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1u) prod ^= std::uint64_t{a} << i;
  for (int d = 63; d >= n; --d)
    if ((prod >> d) & 1u) prod ^= std::uint64_t{poly} << (d - n);
  return static_cast<std::uint32_t>(prod);
}

}  // namespace

TEST(Field, Examples) {
  EXPECT_EQ(gf2n_mul(1, 1, FieldSpec::standard(1)), 1u);
  const FieldSpec f4 = FieldSpec::make(2, 0b111);
  EXPECT_EQ(gf2n_mul(0b10, 0b10, f4), 0b11u);
  EXPECT_EQ(slow_mul(0b10, 0b10, 0b111, 2), 0b11u);
  const FieldSpec aes = FieldSpec::make(8, 0x11B);
  EXPECT_EQ(gf2n_mul(0x53, 0xCA, aes), 0x01u);
  EXPECT_EQ(slow_mul(0x53, 0xCA, 0x11B, 8), 0x01u);
  EXPECT_EQ(FieldSpec::standard(8).reduction, 0x11Bu);
}

TEST(Field, Validation) {
  EXPECT_THROW(FieldSpec::make(2, 0b101), ValidationError);  // (x+1)^2
  EXPECT_THROW(FieldSpec::make(3, 0b111), ValidationError);  // wrong degree
  EXPECT_THROW(FieldSpec::standard(17), ValidationError);
  EXPECT_THROW(gf2n_mul(4, 1, FieldSpec::make(2, 0b111)), ValidationError);
  EXPECT_EQ(FieldSpec::parse("gf2^8/0x11b"), FieldSpec::make(8, 0x11B));
  EXPECT_EQ(FieldSpec::parse(FieldSpec::standard(5).to_string()), FieldSpec::standard(5));
  EXPECT_THROW(FieldSpec::parse("gf2^8"), ValidationError);
}

TEST(Field, StandardPolynomialsAreIrreducible) {
  for (int n = 1; n <= 16; ++n) {
    const FieldSpec f = FieldSpec::standard(n);
    EXPECT_TRUE(is_irreducible(f.reduction)) << "n=" << n;
    EXPECT_EQ(f.reduction >> n, 1u);
  }
  EXPECT_EQ(smallest_irreducible(2), 0b111u);
  EXPECT_EQ(smallest_irreducible(3), 0b1011u);
  EXPECT_EQ(smallest_irreducible(4), 0b10011u);
}

TEST(Field, AxiomsExhaustiveSmall) {
  for (int n = 1; n <= 4; ++n) {
    const FieldSpec f = FieldSpec::standard(n);
    const std::uint32_t size = 1u << n;
    for (std::uint32_t a = 0; a < size; ++a) {
      if (a != 0) {
        // a has an inverse
        bool found = false;
        for (std::uint32_t b = 1; b < size; ++b) found |= gf2n_mul(a, b, f) == 1;
        EXPECT_TRUE(found);
      }
      for (std::uint32_t b = 0; b < size; ++b) {
        EXPECT_EQ(gf2n_mul(a, b, f), slow_mul(a, b, f.reduction, n));
        EXPECT_EQ(gf2n_mul(a, b, f), gf2n_mul(b, a, f));
        for (std::uint32_t c = 0; c < size; ++c) {
          EXPECT_EQ(gf2n_mul(a, b ^ c, f), gf2n_mul(a, b, f) ^ gf2n_mul(a, c, f));
          EXPECT_EQ(gf2n_mul(gf2n_mul(a, b, f), c, f), gf2n_mul(a, gf2n_mul(b, c, f), f));
        }
      }
    }
  }
}

TEST(Field, AxiomsRandomLarge) {
  std::mt19937_64 rng(3);
  for (int n = 5; n <= 16; ++n) {
    const FieldSpec f = FieldSpec::standard(n);
    const std::uint32_t mask = (1u << n) - 1;
    for (int t = 0; t < 200; ++t) {
      const auto a = static_cast<std::uint32_t>(rng()) & mask;
      const auto b = static_cast<std::uint32_t>(rng()) & mask;
      const auto c = static_cast<std::uint32_t>(rng()) & mask;
      EXPECT_EQ(gf2n_mul(a, b ^ c, f), gf2n_mul(a, b, f) ^ gf2n_mul(a, c, f));
      EXPECT_EQ(gf2n_mul(a, b, f), slow_mul(a, b, f.reduction, n));
      if (a != 0) EXPECT_EQ(gf2n_mul(a, gf2n_pow(a, mask - 1, f), f), 1u);  // a^(2^n - 1) = 1
    }
  }
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product_fn(1).table(0).to_string(), "0001");
  const auto ip2 = inner_product_fn(2);
  EXPECT_EQ(ip2.inputs(), 4);
  EXPECT_EQ(nonlinearity(ip2), 6);
  EXPECT_EQ(degree(inner_product_fn(3)), 2);
}

TEST(FieldMult, Examples) {
  EXPECT_EQ(field_mult_fn(1).table(0).to_string(), "0001");
  EXPECT_EQ(classify_nl(field_mult_fn(2)).kind, NlClass::bent);
  EXPECT_EQ(vector_nonlinearity(field_mult_fn(3)), 28);
  // x is the low n bits, y the high n bits
  const auto f = field_mult_fn(3);
  const FieldSpec spec = FieldSpec::standard(3);
  for (std::uint64_t v = 0; v < 64; ++v) {
    const auto expect = gf2n_mul(static_cast<std::uint32_t>(v & 7), static_cast<std::uint32_t>(v >> 3), spec);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(f.eval(i, v), ((expect >> i) & 1u) != 0);
  }
}

TEST(Gold, Examples) {
  const auto g = gold_fn(GoldSpec::make(3, 1));
  EXPECT_EQ(g.eval(1), BitVec::from_string("100"));  // G(1) = 1
  EXPECT_EQ(vector_nonlinearity(g), 2);
  EXPECT_EQ(vector_nonlinearity(gold_fn(GoldSpec::make(5, 2))), 12);
  EXPECT_THROW(GoldSpec::make(4, 1), ValidationError);
  EXPECT_THROW(GoldSpec::make(9, 3), ValidationError);  // gcd(3, 9) = 3
  EXPECT_THROW(GoldSpec::make(5, 3), ValidationError);
  EXPECT_EQ(GoldSpec::make(7).i, 1);
}

TEST(Gold, FactorsAsProduct) {
  for (int n = 3; n <= 7; n += 2) {
    const FieldSpec f = FieldSpec::standard(n);
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      if (std::gcd(i, n) != 1) continue;
      const auto g = gold_fn(GoldSpec::make(n, i), f);
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const std::uint32_t y = gf2n_mul(x, gf2n_pow(x, std::uint64_t{1} << i, f), f);
        for (int b = 0; b < n; ++b) EXPECT_EQ(g.eval(b, x), ((y >> b) & 1u) != 0);
      }
    }
  }
}

TEST(ExcludedProducts, Examples) {
  const auto f3 = excluded_products_fn(3);
  for (std::uint64_t x = 0; x < 8; ++x) {
    EXPECT_EQ(f3.eval(0, x), ((x >> 1) & (x >> 2) & 1u) != 0);
    EXPECT_EQ(f3.eval(1, x), (x & (x >> 2) & 1u) != 0);
    EXPECT_EQ(f3.eval(2, x), (x & (x >> 1) & 1u) != 0);
  }
  EXPECT_EQ(excluded_products_fn(4).eval(0b0111), BitVec::from_string("0001"));
  EXPECT_EQ(degree(excluded_products_fn(5)), 4);
  EXPECT_THROW(excluded_products_fn(2), ValidationError);
}

TEST(Indicator, Examples) {
  EXPECT_EQ(indicator_fn(3, 2).table(0).to_string(), "0001");
  EXPECT_EQ(anf_from_tt(indicator_fn(0, 3)).size(), 8u);
  for (std::uint64_t z = 0; z < 16; ++z) EXPECT_EQ(indicator_fn(z, 4).table(0).count(), 1u);
  EXPECT_THROW(indicator_fn(8, 3), ValidationError);
}

TEST(Indicator, BankIsLinearlyIndependent) {
  const auto bank = indicator_bank_fn(4);
  ASSERT_EQ(bank.outputs(), 16);
  // every XOR of a nonempty subset of outputs is nonzero: rows of a permutation-like matrix
  std::vector<BitVec> rows = bank.tables();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 16; ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].test(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  EXPECT_EQ(rank, 16u);
}
