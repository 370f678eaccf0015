#include "nlmc/synth.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "nlmc/error.hpp"

namespace nlmc {
namespace {

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw ValidationError(std::string(what) + " needs " + std::to_string(lo) + " <= n <= " +
                          std::to_string(hi) + ", got n=" + std::to_string(n));
}

std::vector<std::uint32_t> sorted_masks(int n, int min_degree) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
    if (std::popcount(x) >= min_degree) masks.push_back(x);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

// Monomials over the given inputs, indexed by local mask. Mask 0 (the
// constant) has no wire; degree-d terms are x_i times a degree-(d-1) term,
// with x_i the lowest variable of the mask.
std::vector<std::optional<Wire>> emit_monomials(CircuitBuilder& b, const std::vector<std::uint32_t>& vars) {
  const int width = static_cast<int>(vars.size());
  std::vector<std::optional<Wire>> wire(std::size_t{1} << width);
  for (int j = 0; j < width; ++j) wire[std::size_t{1} << j] = b.input(vars[static_cast<std::size_t>(j)]);
  for (std::uint32_t mask : sorted_masks(width, 2)) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    wire[mask] = b.add_and(*wire[std::uint32_t{1} << low], *wire[rest]);
  }
  return wire;
}

// Indicators over the given inputs, indexed by local point z. The ANF of I_z
// is the sum of all monomials whose mask contains z.
std::vector<Wire> emit_indicators(CircuitBuilder& b, const std::vector<std::uint32_t>& vars) {
  const auto monomials = emit_monomials(b, vars);
  const std::uint32_t size = static_cast<std::uint32_t>(monomials.size());
  std::vector<Wire> out;
  out.reserve(size);
  for (std::uint32_t z = 0; z < size; ++z) {
    std::vector<Wire> terms;
    for (std::uint32_t mask = z; mask < size; mask = (mask + 1) | z)
      terms.push_back(mask == 0 ? b.one() : *monomials[mask]);
    out.push_back(b.sum(std::move(terms)));
  }
  return out;
}

std::vector<std::uint32_t> range_vars(int from, int to) {
  std::vector<std::uint32_t> v;
  for (int i = from; i < to; ++i) v.push_back(static_cast<std::uint32_t>(i));
  return v;
}

}  // namespace

std::vector<std::uint32_t> monomial_order(int n) {
  check_range(n, 2, 16, "monomial order");
  return sorted_masks(n, 2);
}

Circuit synth_monomial_bank(int n) {
  check_range(n, 2, 16, "monomial bank");
  CircuitBuilder b(n);
  const auto wires = emit_monomials(b, range_vars(0, n));
  std::vector<Wire> outputs;
  for (std::uint32_t mask : sorted_masks(n, 2)) outputs.push_back(*wires[mask]);
  return std::move(b).build(std::move(outputs));
}

Circuit synth_indicators(int n) {
  check_range(n, 2, 12, "indicator bank");
  CircuitBuilder b(n);
  auto outputs = emit_indicators(b, range_vars(0, n));
  return std::move(b).build(std::move(outputs));
}

Circuit synth_excluded_products(int n) {
  check_range(n, 3, 64, "excluded products");
  CircuitBuilder b(n);
  auto x = [&](int j) { return b.input(static_cast<std::uint32_t>(j - 1)); };  // 1-based
  if (n == 3) {
    const Wire f1 = b.add_and(x(2), x(3));
    const Wire f2 = b.add_and(x(1), x(3));
    const Wire f3 = b.add_and(x(1), x(2));
    return std::move(b).build({f1, f2, f3});
  }
  // prefix[j] = x_1 ... x_{j+1}, j = 1..n-2
  std::vector<Wire> prefix(static_cast<std::size_t>(n - 1));
  prefix[1] = b.add_and(x(1), x(2));
  for (int j = 2; j <= n - 2; ++j) prefix[static_cast<std::size_t>(j)] = b.add_and(prefix[static_cast<std::size_t>(j - 1)], x(j + 1));
  // suffix[j] = x_{j+1} ... x_n, j = 1..n-2, built from the end
  std::vector<Wire> suffix(static_cast<std::size_t>(n - 1));
  suffix[static_cast<std::size_t>(n - 2)] = b.add_and(x(n - 1), x(n));
  for (int j = n - 3; j >= 1; --j) suffix[static_cast<std::size_t>(j)] = b.add_and(x(j + 1), suffix[static_cast<std::size_t>(j + 1)]);

  std::vector<Wire> out(static_cast<std::size_t>(n));
  out[0] = suffix[1];
  out[static_cast<std::size_t>(n - 1)] = prefix[static_cast<std::size_t>(n - 2)];
  for (int i = 3; i <= n - 2; ++i)
    out[static_cast<std::size_t>(i - 1)] = b.add_and(prefix[static_cast<std::size_t>(i - 2)], suffix[static_cast<std::size_t>(i)]);
  out[1] = b.add_and(x(1), suffix[2]);
  out[static_cast<std::size_t>(n - 2)] = b.add_and(prefix[static_cast<std::size_t>(n - 3)], x(n));
  return std::move(b).build(std::move(out));
}

std::uint64_t UniversalPlan::and_count_for(int n, int m, int k) {
  const auto bank = [](int v) { return (std::uint64_t{1} << v) - static_cast<std::uint64_t>(v) - 1; };
  return bank(n - k) + bank(k) + static_cast<std::uint64_t>(m) * (std::uint64_t{1} << k);
}

int default_split(int n, int m) {
  if (m < 1) throw ValidationError("output count must be positive");
  const auto um = static_cast<std::uint64_t>(m);
  const int ceil_log = std::bit_width(um - 1);
  int k;
  if (std::has_single_bit(um) && (n + ceil_log) % 2 == 0)
    k = (n - ceil_log) / 2;
  else
    k = (n - ceil_log + 1) / 2;  // ceil for n - ceil_log >= 0
  if (n - ceil_log < 0) k = 1;
  return std::clamp(k, 1, n - 1);
}

UniversalPlan plan_universal(int n, int m, std::optional<int> k) {
  check_range(n, 2, 16, "universal construction");
  if (m < 1) throw ValidationError("output count must be positive");
  const int split = k ? *k : default_split(n, m);
  if (split < 1 || split > n - 1)
    throw ValidationError("split k=" + std::to_string(split) + " outside [1, n-1]");
  return UniversalPlan{n, m, split, UniversalPlan::and_count_for(n, m, split)};
}

UniversalCircuit synth_universal(const BooleanFunction& f, std::optional<int> k) {
  const int n = f.inputs();
  const int m = f.outputs();
  const UniversalPlan plan = plan_universal(n, m, k);
  const int split = plan.k;
  CircuitBuilder b(n);

  const std::vector<Wire> low_ind = emit_indicators(b, range_vars(split, n));
  // restricted[i][a] = f_i(a, .) as a sum of indicators on x_{k+1}..x_n
  std::vector<std::vector<std::optional<Wire>>> restricted(static_cast<std::size_t>(m));
  const std::uint64_t a_count = std::uint64_t{1} << split;
  const std::uint64_t y_count = std::uint64_t{1} << (n - split);
  for (int i = 0; i < m; ++i) {
    auto& row = restricted[static_cast<std::size_t>(i)];
    row.resize(a_count);
    for (std::uint64_t a = 0; a < a_count; ++a) {
      std::vector<Wire> terms;
      for (std::uint64_t y = 0; y < y_count; ++y)
        if (f.eval(i, a | (y << split))) terms.push_back(low_ind[y]);
      if (!terms.empty()) row[a] = b.sum(std::move(terms));
    }
  }
  const std::vector<Wire> high_ind = emit_indicators(b, range_vars(0, split));

  std::vector<Wire> outputs;
  for (int i = 0; i < m; ++i) {
    std::vector<Wire> terms;
    for (std::uint64_t a = 0; a < a_count; ++a) {
      const auto& part = restricted[static_cast<std::size_t>(i)][a];
      if (part) {
        terms.push_back(b.add_and(high_ind[a], *part));
      } else {
        // f_i(a, .) = 0: I_a * 1 + I_a keeps the gate count exact.
        terms.push_back(b.add_and(high_ind[a], b.one()));
        terms.push_back(high_ind[a]);
      }
    }
    outputs.push_back(b.sum(std::move(terms)));
  }
  return UniversalCircuit{std::move(b).build(std::move(outputs)), plan};
}

BilinearPlan BilinearPlan::make(int n, GeneratorMatrix code, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0 || n > 64)
    throw ValidationError("bilinear construction needs even n in [2, 64], got n=" + std::to_string(n));
  if (code.dimension() != static_cast<std::size_t>(n))
    throw ValidationError("code dimension " + std::to_string(code.dimension()) + " does not match n=" +
                          std::to_string(n));
  if (rank_f2(code.rows()) != code.dimension())
    throw ValidationError("generator matrix is rank-deficient");
  return BilinearPlan{n, std::move(code), seed};
}

Circuit synth_bilinear_from_code(const BilinearPlan& plan_in) {
  const BilinearPlan plan = BilinearPlan::make(plan_in.n, plan_in.code, plan_in.seed);
  const int n = plan.n;
  const int half = n / 2;
  const std::size_t s = plan.code.length();
  CircuitBuilder b(n);
  std::mt19937_64 rng(plan.seed);
  const std::uint64_t side_max = half == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << half) - 1;
  std::uniform_int_distribution<std::uint64_t> pick(1, side_max);

  auto linear_sum = [&](std::uint64_t mask, int offset) {
    std::vector<Wire> terms;
    for (int j = 0; j < half; ++j)
      if ((mask >> j) & 1u) terms.push_back(b.input(static_cast<std::uint32_t>(offset + j)));
    return b.sum(std::move(terms));
  };

  std::vector<Wire> products;
  products.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    const std::uint64_t left = pick(rng);
    const std::uint64_t right = pick(rng);
    const Wire l = linear_sum(left, 0);
    const Wire r = linear_sum(right, half);
    products.push_back(b.add_and(l, r));
  }
  std::vector<Wire> outputs;
  for (const BitVec& row : plan.code.rows()) {
    std::vector<Wire> terms;
    for (std::size_t j = 0; j < s; ++j)
      if (row.test(j)) terms.push_back(products[j]);
    outputs.push_back(b.sum(std::move(terms)));
  }
  InputPartition partition{range_vars(0, half), range_vars(half, n)};
  return std::move(b).build(std::move(outputs), std::move(partition));
}

}  // namespace nlmc
