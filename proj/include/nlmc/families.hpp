#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nlmc/boolfn.hpp"

namespace nlmc {

/// GF(2^n) given by an irreducible reduction polynomial. Bit k of `reduction`
/// is the coefficient of X^k, so bit n is always set.
struct FieldSpec {
  int n = 0;
  std::uint32_t reduction = 0;

  /// Validated construction: degree exactly n, irreducible over F2.
  static FieldSpec make(int n, std::uint32_t reduction);
  /// The default polynomial for degree n (1 <= n <= 16).
  static FieldSpec standard(int n);
  /// Parses `gf2^<n>/0x<hex>`.
  static FieldSpec parse(std::string_view text);

  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct GoldSpec {
  int n = 0;
  int i = 1;

  /// Validates n odd, 1 <= i <= (n-1)/2, gcd(i, n) = 1.
  static GoldSpec make(int n, int i = 1);
};

/// Carry-less product of two polynomials of degree < 32.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

/// Remainder of a modulo the nonzero polynomial `mod`.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod);

/// Irreducibility over F2 by trial division with every polynomial of
/// degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Smallest (numerically) irreducible polynomial of degree n.
std::uint32_t smallest_irreducible(int n);

std::uint32_t gf2n_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& field);
std::uint32_t gf2n_pow(std::uint32_t a, std::uint64_t e, const FieldSpec& field);

/// IP_2k(x, y) = <x, y> with x = inputs 1..k, y = inputs k+1..2k.
BooleanFunction inner_product_fn(int k);

/// (2n, n)-function (x, y) -> x * y in the field; x is the low n input bits.
BooleanFunction field_mult_fn(int n, const FieldSpec& field);
inline BooleanFunction field_mult_fn(int n) { return field_mult_fn(n, FieldSpec::standard(n)); }

/// x -> x^(2^i + 1) over the field; spec.n must equal field.n.
BooleanFunction gold_fn(const GoldSpec& spec, const FieldSpec& field);
inline BooleanFunction gold_fn(const GoldSpec& spec) {
  return gold_fn(spec, FieldSpec::standard(spec.n));
}

/// f_i = product of all x_j with j != i.
BooleanFunction excluded_products_fn(int n);

/// I_z: one exactly at input z.
BooleanFunction indicator_fn(std::uint64_t z, int n);

/// AI_n: all 2^n indicators, output z+1 being I_z.
BooleanFunction indicator_bank_fn(int n);

}  // namespace nlmc
