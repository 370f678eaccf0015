#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nlmc/boolfn.hpp"
#include "nlmc/circuit.hpp"
#include "nlmc/codes.hpp"

namespace nlmc {

/// Masks of all monomials of degree >= 2 in n variables, ordered by
/// (popcount, value). This is the output order of synth_monomial_bank.
std::vector<std::uint32_t> monomial_order(int n);

/// Every monomial of degree >= 2; exactly 2^n - n - 1 AND gates.
Circuit synth_monomial_bank(int n);

/// AI_n: output z+1 computes I_z using only the monomial bank's AND gates.
Circuit synth_indicators(int n);

/// f_i = prod_{j != i} x_j with 3n - 6 AND gates (3 for n = 3).
Circuit synth_excluded_products(int n);

struct UniversalPlan {
  int n = 0;
  int m = 0;
  int k = 0;  // split: x_1..x_k vs x_{k+1}..x_n
  std::uint64_t predicted_and_count = 0;

  /// (2^(n-k) - (n-k) - 1) + (2^k - k - 1) + m 2^k.
  static std::uint64_t and_count_for(int n, int m, int k);
};

/// k = (n - log m)/2 when m is a power of two and n + log m is even,
/// ceil((n - ceil(log m))/2) otherwise; clamped to [1, n-1].
int default_split(int n, int m);

UniversalPlan plan_universal(int n, int m, std::optional<int> k = std::nullopt);

struct UniversalCircuit {
  Circuit circuit;
  UniversalPlan plan;
};

/// Indicator-bank construction computing any (n,m)-function; 2 <= n <= 16.
UniversalCircuit synth_universal(const BooleanFunction& f, std::optional<int> k = std::nullopt);

/// Random bilinear circuit over a code: the left operand of AND gate j is a
/// random nonempty sum of x_1..x_{n/2}, the right one of x_{n/2+1}..x_n, and
/// output i is the XOR of the gates selected by row i of the generator.
struct BilinearPlan {
  int n = 0;
  GeneratorMatrix code;
  std::uint64_t seed = 0;

  /// Validates n even, code dimension n, full row rank.
  static BilinearPlan make(int n, GeneratorMatrix code, std::uint64_t seed);
};

Circuit synth_bilinear_from_code(const BilinearPlan& plan);

}  // namespace nlmc
