#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>

#include "nlmc/boolfn.hpp"

namespace nlmc::fixtures {

inline BooleanFunction random_function(int n, int m, std::mt19937_64& rng) {
  std::vector<BitVec> tables;
  for (int i = 0; i < m; ++i) {
    BitVec t(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < t.size(); ++x)
      if (rng() & 1u) t.set(x);
    tables.push_back(std::move(t));
  }
  return BooleanFunction(n, std::move(tables));
}

/// Random function of degree <= 2 with a random affine part.
inline BooleanFunction random_quadratic(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1u) pairs.emplace_back(i, j);
  const std::uint64_t linear = rng() & ((std::uint64_t{1} << n) - 1);
  const std::uint64_t constant = rng() & 1u;
  return BooleanFunction::tabulate(n, 1, [&](std::uint64_t x) {
    std::uint64_t v = constant ^ (static_cast<std::uint64_t>(std::popcount(x & linear)) & 1u);
    for (auto [i, j] : pairs) v ^= (x >> i) & (x >> j) & 1u;
    return v;
  });
}

/// Independent nonlinearity: distance to every affine function, bit by bit.
inline std::int64_t naive_nl(const BooleanFunction& f) {
  const std::uint64_t size = f.table_size();
  std::int64_t best = static_cast<std::int64_t>(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    std::int64_t d = 0;
    for (std::uint64_t x = 0; x < size; ++x)
      d += f.eval(0, x) != static_cast<bool>(std::popcount(a & x) & 1);
    best = std::min({best, d, static_cast<std::int64_t>(size) - d});
  }
  return best;
}

}  // namespace nlmc::fixtures
