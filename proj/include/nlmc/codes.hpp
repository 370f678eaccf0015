#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlmc/bitvec.hpp"
#include "nlmc/limits.hpp"

namespace nlmc {

/// m x s generator matrix over F2; row i is a codeword of length s.
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  /// Throws ValidationError if a row's length differs from `length`.
  GeneratorMatrix(std::size_t length, std::vector<BitVec> rows);

  static GeneratorMatrix identity(std::size_t m);
  static GeneratorMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t dimension() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<BitVec> rows_;
};

// ---- linear algebra over F2 ----

std::size_t rank_f2(std::span<const BitVec> rows);

/// Reduced row echelon basis of the row space; canonical, so two row spaces
/// are equal iff their bases compare equal.
std::vector<BitVec> row_space_basis(std::span<const BitVec> rows);

bool same_row_space(std::span<const BitVec> a, std::span<const BitVec> b);

/// Basis of { v : H v = 0 } where H's rows have length s.
std::vector<BitVec> null_space(std::span<const BitVec> parity_rows, std::size_t s);

/// Minimum weight over the nonzero codewords; requires full row rank.
std::size_t min_distance(const GeneratorMatrix& g, const Limits& limits = {});

/// Minimum weight over the nonzero vectors of the row span (any rank).
/// Zero when the span is {0}.
std::size_t span_min_distance(std::span<const BitVec> rows, const Limits& limits = {});

// Generator-matrix text format:
//   code <m> <s>
//   <s characters over {0,1}>   (m lines)
GeneratorMatrix parse_code(std::string_view text);
std::string format_code(const GeneratorMatrix& g);
GeneratorMatrix read_code_file(const std::filesystem::path& path);

// ---- Gilbert-Varshamov ----

/// sum_{i=0}^{d-2} C(s-1, i) < 2^(s-m), in exact integer arithmetic.
bool gv_feasible(std::uint64_t s, std::uint64_t m, std::uint64_t d);

/// Least s >= max(m, d) with gv_feasible(s, m, d).
std::uint64_t gv_min_length(std::uint64_t m, std::uint64_t d);

/// Greedy parity-check construction of an [s, m, >= d] code: columns are
/// added, in seeded random order, outside the set of sums of d-2 earlier
/// columns. Always succeeds when gv_feasible(s, m, d). Requires s - m <= 24.
std::optional<GeneratorMatrix> varshamov_code(std::size_t m, std::size_t d, std::size_t s,
                                              std::uint64_t seed);

/// varshamov_code at the length gv_min_length(m, d).
GeneratorMatrix gv_code(std::size_t m, std::size_t d, std::uint64_t seed);

// ---- McEliece-Rodemich-Rumsey-Welch ----

struct MrrwQuery {
  double u = 0;
  double delta = 0;

  /// Validates 0 < delta < 1/2 and 0 <= u <= 1 - 2 delta.
  static MrrwQuery make(double u, double delta);
};

double binary_entropy(double x);

/// B(u, delta) = 1 + h(u^2) - h(u^2 + 2 delta u + 2 delta),
/// h(x) = H2((1 - sqrt(1 - x)) / 2).
double mrrw_B(const MrrwQuery& q);

struct RateBound {
  double bound = 0;
  double u = 0;  // minimizer
};

/// min over u in [0, 1 - 2 delta] of B(u, delta): grid step 1e-4, then
/// golden-section refinement to 1e-6.
RateBound mrrw_rate_bound(double delta);

/// Least s >= max(m, d) not excluded by m/s <= mrrw_rate_bound(d/s). This
/// applies an asymptotic theorem at finite sizes (an extrapolation, not a
/// proven bound). Relative distances >= 1/2 count as rate bound 0; d <= 1
/// returns m.
std::uint64_t mrrw_min_length(std::uint64_t m, std::uint64_t d);

// ---- counting and rank bounds ----

struct CountingBound {
  double value = 0;
  bool vacuous = false;  // value <= 0 carries no information
};

/// sqrt(m 2^n) - 2n - m/2 for 1 <= m <= 2^n.
CountingBound counting_lower_bound(int n, std::uint64_t m);

/// 2^(k - (k-d)^2).
double rank_prob_bound(int k, int d);

struct RankSample {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;  // samples with rank <= d
  double frequency() const { return trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0; }
};

/// Empirical P[rank(M) <= d] over uniform k x k matrices (k <= 64).
RankSample monte_carlo_rank(int k, int d, std::uint64_t trials, std::uint64_t seed);

// ---- nonlinearity vs. multiplicative complexity ----

/// 2^(n-1) - 2^(n-M-1), for 0 <= M <= n-1.
std::int64_t nl_upper_from_mc(int n, int mc);

/// Least M with nl <= nl_upper_from_mc(n, M); n when nl = 2^(n-1).
int mc_lower_from_nl(int n, std::int64_t nl);

/// max(d - 1, 0).
int degree_mc_lower(int d);

}  // namespace nlmc
