#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlmc/bitvec.hpp"
#include "nlmc/limits.hpp"

namespace nlmc {

inline constexpr int kMaxInputs = 24;

/// An (n,m)-function stored as m truth tables of 2^n bits each.
///
/// Index convention: bit v of table i is f_i(x) where x_j is bit (j-1) of v,
/// so x1 is the least-significant bit of the table index.
class BooleanFunction {
 public:
  /// The all-zero (n,m)-function.
  BooleanFunction(int n, int m);
  BooleanFunction(int n, std::vector<BitVec> tables);

  /// Builds a function from a callable mapping an input index to its output
  /// bits (bit i of the result is f_{i+1}). Requires m <= 64.
  template <typename F>
  static BooleanFunction tabulate(int n, int m, F&& f) {
    BooleanFunction g(n, m);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < size; ++x) {
      const std::uint64_t y = f(x);
      for (int i = 0; i < m; ++i)
        if ((y >> i) & 1u) g.tables_[static_cast<std::size_t>(i)].set(x);
    }
    return g;
  }

  int inputs() const { return n_; }
  int outputs() const { return static_cast<int>(tables_.size()); }
  std::uint64_t table_size() const { return std::uint64_t{1} << n_; }

  const BitVec& table(int i) const { return tables_[static_cast<std::size_t>(i)]; }
  BitVec& table(int i) { return tables_[static_cast<std::size_t>(i)]; }
  const std::vector<BitVec>& tables() const { return tables_; }

  bool eval(int output, std::uint64_t x) const { return table(output).test(x); }
  /// All m output bits at input x.
  BitVec eval(std::uint64_t x) const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<BitVec> tables_;
};

/// Algebraic normal form: per output, the sorted set of monomial masks X with
/// coefficient 1. Mask bit j-1 selects x_j; mask 0 is the constant term.
struct Anf {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> monomials;

  int outputs() const { return static_cast<int>(monomials.size()); }
  std::size_t size() const;
  friend bool operator==(const Anf&, const Anf&) = default;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;  // values[a] = sum_x (-1)^(f(x) + <a,x>)

  std::int32_t max_abs() const;
};

/// In-place Moebius (Zhegalkin) transform of a 2^n-bit table; an involution.
void moebius_transform(BitVec& table, int n);

Anf anf_from_tt(const BooleanFunction& f);
BooleanFunction tt_from_anf(const Anf& a);

int degree(const Anf& a);
int degree(const BooleanFunction& f);

/// f_T: XOR of the selected outputs (0-based indices, no repeats, nonempty).
BooleanFunction component(const BooleanFunction& f, std::span<const int> outputs);

WalshSpectrum walsh_spectrum(const BitVec& table, int n);
WalshSpectrum walsh_spectrum(const BooleanFunction& f, const Limits& limits = {});

/// Distance to the nearest affine function, for m = 1.
std::int64_t nonlinearity(const BooleanFunction& f, const Limits& limits = {});

/// Minimum nonlinearity over all nonempty output combinations f_T.
std::int64_t vector_nonlinearity(const BooleanFunction& f, const Limits& limits = {});

/// Throws BudgetError if vector_nonlinearity(f) would exceed the limits.
void check_vector_budget(int n, int m, const Limits& limits);

enum class NlClass { bent, almost_bent, neither };
std::string_view to_string(NlClass c);

struct NlClassification {
  NlClass kind = NlClass::neither;
  std::int64_t nl = 0;
};

NlClassification classify_nl(const BooleanFunction& f, const Limits& limits = {});

/// floor(2^(n-1) - 2^(n/2-1)); exact for even n, the real bound rounded down
/// for odd n.
std::int64_t bent_bound(int n);
/// 2^(n-1) - 2^((n-1)/2) for odd n.
std::int64_t almost_bent_bound(int n);

// Truth-table text format:
//   tt <n> <m>
//   <2^n characters over {0,1}>   (m lines; character v is f_i(v))
// Lines starting with '#' are ignored.
BooleanFunction parse_tt(std::string_view text);
std::string format_tt(const BooleanFunction& f);
BooleanFunction read_tt_file(const std::filesystem::path& path);

}  // namespace nlmc
