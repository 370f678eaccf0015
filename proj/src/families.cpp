#include "nlmc/families.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "nlmc/error.hpp"

namespace nlmc {
namespace {

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

}  // namespace

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  for (std::uint32_t bits = b; bits; bits >>= 1, shifted <<= 1)
    if (bits & 1u) acc ^= shifted;
  return acc;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod) {
  const int dm = poly_degree(mod);
  while (a && poly_degree(a) >= dm) a ^= mod << (poly_degree(a) - dm);
  return a;
}

bool is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const int d = poly_degree(poly);
  for (std::uint32_t g = 2; poly_degree(g) <= d / 2; ++g)
    if (poly_mod(poly, g) == 0) return false;
  return true;
}

std::uint32_t smallest_irreducible(int n) {
  if (n < 1 || n > 31) throw ValidationError("degree " + std::to_string(n) + " outside [1, 31]");
  const std::uint32_t top = std::uint32_t{1} << n;
  for (std::uint32_t low = 0; low < top; ++low)
    if (is_irreducible(top | low)) return top | low;
  throw ValidationError("no irreducible polynomial of degree " + std::to_string(n));
}

FieldSpec FieldSpec::make(int n, std::uint32_t reduction) {
  if (n < 1 || n > 16)
    throw ValidationError("field degree n=" + std::to_string(n) + " outside [1, 16]");
  if (reduction == 0 || poly_degree(reduction) != n)
    throw ValidationError("reduction polynomial does not have degree " + std::to_string(n));
  if (!is_irreducible(reduction))
    throw ValidationError("reduction polynomial is reducible over F2");
  return FieldSpec{n, reduction};
}

FieldSpec FieldSpec::standard(int n) {
  if (n < 1 || n > 16)
    throw ValidationError("field degree n=" + std::to_string(n) + " outside [1, 16]");
  // x^8 + x^4 + x^3 + x + 1 (AES); it is also the smallest degree-8 choice.
  if (n == 8) return FieldSpec{8, 0x11B};
  return FieldSpec{n, smallest_irreducible(n)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  constexpr std::string_view prefix = "gf2^";
  const auto slash = text.find("/0x");
  if (text.substr(0, prefix.size()) != prefix || slash == std::string_view::npos)
    throw ValidationError("field spec must look like gf2^<n>/0x<hex>");
  int n = 0;
  const auto deg = text.substr(prefix.size(), slash - prefix.size());
  auto r1 = std::from_chars(deg.data(), deg.data() + deg.size(), n);
  std::uint32_t red = 0;
  const auto hex = text.substr(slash + 3);
  auto r2 = std::from_chars(hex.data(), hex.data() + hex.size(), red, 16);
  if (r1.ec != std::errc{} || r1.ptr != deg.data() + deg.size() || r2.ec != std::errc{} ||
      r2.ptr != hex.data() + hex.size() || hex.empty())
    throw ValidationError("malformed field spec '" + std::string(text) + "'");
  return make(n, red);
}

std::string FieldSpec::to_string() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "gf2^%d/0x%x", n, reduction);
  return buf;
}

GoldSpec GoldSpec::make(int n, int i) {
  if (n < 3 || n % 2 == 0)
    throw ValidationError("Gold function needs odd n >= 3, got n=" + std::to_string(n));
  if (i < 1 || i > (n - 1) / 2)
    throw ValidationError("Gold exponent needs 1 <= i <= (n-1)/2, got i=" + std::to_string(i));
  if (std::gcd(i, n) != 1)
    throw ValidationError("Gold exponent needs gcd(i, n) = 1, got gcd(" + std::to_string(i) +
                          ", " + std::to_string(n) + ") = " + std::to_string(std::gcd(i, n)));
  return GoldSpec{n, i};
}

std::uint32_t gf2n_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& field) {
  const std::uint32_t limit = std::uint32_t{1} << field.n;
  if (a >= limit || b >= limit)
    throw ValidationError("field operand outside [0, 2^" + std::to_string(field.n) + ")");
  return static_cast<std::uint32_t>(poly_mod(clmul(a, b), field.reduction));
}

std::uint32_t gf2n_pow(std::uint32_t a, std::uint64_t e, const FieldSpec& field) {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (; e; e >>= 1) {
    if (e & 1u) result = gf2n_mul(result, base, field);
    base = gf2n_mul(base, base, field);
  }
  return result;
}

BooleanFunction inner_product_fn(int k) {
  if (k < 1 || 2 * k > kMaxInputs)
    throw ValidationError("inner product needs 1 <= k <= 12, got k=" + std::to_string(k));
  const std::uint64_t low = (std::uint64_t{1} << k) - 1;
  return BooleanFunction::tabulate(2 * k, 1, [&](std::uint64_t v) {
    return static_cast<std::uint64_t>(std::popcount((v & low) & (v >> k)) & 1);
  });
}

BooleanFunction field_mult_fn(int n, const FieldSpec& field) {
  if (n < 1 || n > 10)
    throw ValidationError("field multiplication needs 1 <= n <= 10, got n=" + std::to_string(n));
  if (field.n != n) throw ValidationError("field degree does not match n");
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  return BooleanFunction::tabulate(2 * n, n, [&](std::uint64_t v) {
    return std::uint64_t{gf2n_mul(static_cast<std::uint32_t>(v & low),
                                  static_cast<std::uint32_t>(v >> n), field)};
  });
}

BooleanFunction gold_fn(const GoldSpec& spec, const FieldSpec& field) {
  const GoldSpec checked = GoldSpec::make(spec.n, spec.i);
  if (field.n != checked.n) throw ValidationError("field degree does not match Gold n");
  const std::uint64_t exponent = (std::uint64_t{1} << checked.i) + 1;
  return BooleanFunction::tabulate(checked.n, checked.n, [&](std::uint64_t x) {
    return std::uint64_t{gf2n_pow(static_cast<std::uint32_t>(x), exponent, field)};
  });
}

BooleanFunction excluded_products_fn(int n) {
  if (n < 3 || n > 20)
    throw ValidationError("excluded products needs 3 <= n <= 20, got n=" + std::to_string(n));
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return BooleanFunction::tabulate(n, n, [&](std::uint64_t x) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t others = all & ~(std::uint64_t{1} << i);
      if ((x & others) == others) out |= std::uint64_t{1} << i;
    }
    return out;
  });
}

BooleanFunction indicator_fn(std::uint64_t z, int n) {
  BooleanFunction f(n, 1);
  if (z >= f.table_size())
    throw ValidationError("indicator point " + std::to_string(z) + " outside [0, 2^n)");
  f.table(0).set(z);
  return f;
}

BooleanFunction indicator_bank_fn(int n) {
  if (n < 1 || n > 14)
    throw ValidationError("indicator bank needs 1 <= n <= 14, got n=" + std::to_string(n));
  BooleanFunction f(n, 1 << n);
  for (int z = 0; z < f.outputs(); ++z) f.table(z).set(static_cast<std::size_t>(z));
  return f;
}

}  // namespace nlmc
