#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nlmc/boolfn.hpp"

namespace nlmc {

/// Minimum Hamming distance to all 2^(n+1) affine functions, by direct
/// comparison. Single output, n <= 12.
std::int64_t brute_nl(const BooleanFunction& f);

struct McSearchBudget {
  int k_max = 2;
  std::uint64_t node_cap = std::uint64_t{1} << 28;
};

enum class McStatus { found, exceeds_k_max, node_cap_exhausted };
std::string_view to_string(McStatus s);

struct McResult {
  McStatus status = McStatus::exceeds_k_max;
  std::optional<int> mc;       // set when status == found
  std::uint64_t nodes = 0;     // candidate AND gates examined
};

/// Exact multiplicative complexity of a single-output function by
/// exhaustive search over XOR-AND circuits with at most k_max AND gates.
/// Accepted sizes: n <= 4 with k_max <= 2, or n <= 3 with k_max <= 3.
/// Throws BudgetError when the worst-case candidate count exceeds node_cap.
McResult brute_mc(const BooleanFunction& f, const McSearchBudget& budget = {});

/// Worst-case number of candidate gates for the search at (n, k_max).
std::uint64_t brute_mc_worst_case(int n, int k_max);

}  // namespace nlmc
