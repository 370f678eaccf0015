#include "nlmc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "nlmc/error.hpp"

namespace nlmc {

std::int64_t brute_nl(const BooleanFunction& f) {
  if (f.outputs() != 1) throw ValidationError("brute_nl needs a single-output function");
  const int n = f.inputs();
  if (n > 12) throw ValidationError("brute_nl needs n <= 12, got n=" + std::to_string(n));
  const std::uint64_t size = f.table_size();

  std::vector<BitVec> var(static_cast<std::size_t>(n), BitVec(size));
  for (int j = 0; j < n; ++j)
    for (std::uint64_t x = 0; x < size; ++x)
      if ((x >> j) & 1u) var[static_cast<std::size_t>(j)].set(x);

  const auto total = static_cast<std::int64_t>(size);
  std::int64_t best = total;
  for (std::uint64_t a = 0; a < size; ++a) {
    BitVec linear(size);
    for (int j = 0; j < n; ++j)
      if ((a >> j) & 1u) linear ^= var[static_cast<std::size_t>(j)];
    const auto dist = static_cast<std::int64_t>((f.table(0) ^ linear).count());
    best = std::min({best, dist, total - dist});
  }
  return best;
}

std::string_view to_string(McStatus s) {
  switch (s) {
    case McStatus::found: return "found";
    case McStatus::exceeds_k_max: return "exceeds_k_max";
    case McStatus::node_cap_exhausted: return "node_cap_exhausted";
  }
  return "?";
}

namespace {

// Span of truth tables (<= 16 bits) kept in reduced echelon form with
// distinct leading bits, sorted descending; equal spans compare equal.
struct Span {
  std::vector<std::uint64_t> rows;

  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t r : rows)
      if (v & std::bit_floor(r)) v ^= r;
    return v;
  }
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }

  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    const std::uint64_t lead = std::bit_floor(v);
    for (std::uint64_t& r : rows)
      if (r & lead) r ^= v;
    rows.push_back(v);
    std::sort(rows.rbegin(), rows.rend());
    return true;
  }

  std::vector<std::uint64_t> elements() const {
    std::vector<std::uint64_t> out{0};
    for (std::uint64_t r : rows) {
      const std::size_t half = out.size();
      for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ r);
    }
    return out;
  }
};

std::uint64_t pairs(std::uint64_t count) { return count * (count - 1) / 2; }

}  // namespace

std::uint64_t brute_mc_worst_case(int n, int k_max) {
  std::uint64_t total = 0;
  std::uint64_t paths = 1;
  for (int j = 0; j < k_max; ++j) {
    const std::uint64_t nonconstant = (std::uint64_t{1} << (n + 1 + j)) - 2;
    paths *= pairs(nonconstant);
    total += paths;
  }
  return total;
}

McResult brute_mc(const BooleanFunction& f, const McSearchBudget& budget) {
  if (f.outputs() != 1) throw ValidationError("brute_mc needs a single-output function");
  const int n = f.inputs();
  const int k = budget.k_max;
  if (k < 0) throw ValidationError("k_max must be nonnegative");
  if (!((n <= 4 && k <= 2) || (n <= 3 && k <= 3)))
    throw ValidationError("brute_mc accepts n <= 4 with k_max <= 2 or n <= 3 with k_max <= 3, got n=" +
                          std::to_string(n) + ", k_max=" + std::to_string(k));
  const std::uint64_t worst = brute_mc_worst_case(n, k);
  if (worst > budget.node_cap)
    throw BudgetError("worst-case candidate count " + std::to_string(worst) + " exceeds node_cap=" +
                      std::to_string(budget.node_cap));

  McResult result;
  if (degree(f) <= 1) {
    result.status = McStatus::found;
    result.mc = 0;
    return result;
  }

  const std::uint64_t size = f.table_size();
  const std::uint64_t ones = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  const std::uint64_t target = f.table(0).words()[0];

  Span affine;
  affine.insert(ones);
  for (int j = 0; j < n; ++j) {
    std::uint64_t v = 0;
    for (std::uint64_t x = 0; x < size; ++x)
      if ((x >> j) & 1u) v |= std::uint64_t{1} << x;
    affine.insert(v);
  }

  std::set<std::vector<std::uint64_t>> level{affine.rows};
  for (int depth = 1; depth <= k; ++depth) {
    std::set<std::vector<std::uint64_t>> next;
    for (const auto& rows : level) {
      const Span span{rows};
      std::vector<std::uint64_t> operands;
      for (std::uint64_t e : span.elements())
        if (e != 0 && e != ones) operands.push_back(e);
      std::sort(operands.begin(), operands.end());
      for (std::size_t a = 0; a < operands.size(); ++a) {
        for (std::size_t b = a + 1; b < operands.size(); ++b) {
          const std::uint64_t p = operands[a];
          const std::uint64_t q = operands[b];
          if ((p ^ q) == ones) continue;
          if (++result.nodes > budget.node_cap) {
            result.status = McStatus::node_cap_exhausted;
            return result;
          }
          Span grown = span;
          if (!grown.insert(p & q)) continue;
          if (grown.contains(target)) {
            result.status = McStatus::found;
            result.mc = depth;
            return result;
          }
          if (depth < k) next.insert(grown.rows);
        }
      }
    }
    level = std::move(next);
  }
  result.status = McStatus::exceeds_k_max;
  return result;
}

}  // namespace nlmc
