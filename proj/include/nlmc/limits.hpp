#pragma once

#include <cstdint>

namespace nlmc {

/// Resource limits shared by the exponential-time operations. These are
/// configuration: the CLI overrides them from flags or NLMC_* variables.
struct Limits {
  int max_scalar_n = 20;            // Walsh/ANF on a single output
  int max_vector_n = 20;            // vector nonlinearity
  int max_vector_m = 16;
  std::uint64_t vector_cost_cap = std::uint64_t{1} << 32;  // (2^m - 1) * n * 2^n
  int max_truth_table_n = 20;       // circuit truth tables
  int max_code_dimension = 26;      // brute-force minimum distance
  std::uint64_t node_cap = std::uint64_t{1} << 28;  // brute-force MC search
};

}  // namespace nlmc
