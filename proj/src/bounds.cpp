#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "nlmc/codes.hpp"
#include "nlmc/error.hpp"

namespace nlmc {

using boost::multiprecision::cpp_int;

bool gv_feasible(std::uint64_t s, std::uint64_t m, std::uint64_t d) {
  if (m < 1 || d < 1 || s < m)
    throw ValidationError("gv_feasible needs s >= m >= 1 and d >= 1");
  cpp_int term = 1;  // C(s-1, i)
  cpp_int sum = 0;
  for (std::uint64_t i = 0; i + 2 <= d; ++i) {
    sum += term;
    term = term * (s - 1 - i) / (i + 1);
  }
  return sum < (cpp_int(1) << static_cast<unsigned>(s - m));
}

std::uint64_t gv_min_length(std::uint64_t m, std::uint64_t d) {
  if (m < 1 || d < 1) throw ValidationError("gv_min_length needs m, d >= 1");
  std::uint64_t s = std::max(m, d);
  while (!gv_feasible(s, m, d)) ++s;
  return s;
}

MrrwQuery MrrwQuery::make(double u, double delta) {
  if (!(delta > 0.0 && delta < 0.5))
    throw ValidationError("MRRW needs 0 < delta < 1/2, got delta=" + std::to_string(delta));
  if (!(u >= 0.0 && u <= 1.0 - 2.0 * delta))
    throw ValidationError("MRRW needs 0 <= u <= 1 - 2 delta, got u=" + std::to_string(u));
  return MrrwQuery{u, delta};
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

namespace {

double h(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return binary_entropy((1.0 - std::sqrt(1.0 - x)) / 2.0);
}

double B(double u, double delta) {
  const double u2 = u * u;
  return 1.0 + h(u2) - h(u2 + 2.0 * delta * u + 2.0 * delta);
}

}  // namespace

double mrrw_B(const MrrwQuery& q) {
  const MrrwQuery c = MrrwQuery::make(q.u, q.delta);
  return B(c.u, c.delta);
}

RateBound mrrw_rate_bound(double delta) {
  MrrwQuery::make(0.0, delta);
  constexpr double kGrid = 1e-4;
  constexpr double kTol = 1e-6;
  const double umax = 1.0 - 2.0 * delta;
  const auto steps = static_cast<long>(std::floor(umax / kGrid));

  RateBound best{B(umax, delta), umax};
  for (long i = 0; i <= steps; ++i) {
    const double u = static_cast<double>(i) * kGrid;
    const double v = B(u, delta);
    if (v < best.bound) best = {v, u};
  }

  // Golden-section search on the grid cell around the best point.
  constexpr double kInvPhi = 0.6180339887498949;
  double a = std::max(0.0, best.u - kGrid);
  double b = std::min(umax, best.u + kGrid);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = B(c, delta);
  double fd = B(d, delta);
  while (b - a > kTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = B(c, delta);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = B(d, delta);
    }
  }
  const double u = (a + b) / 2.0;
  const double v = B(u, delta);
  if (v < best.bound) best = {v, u};
  return best;
}

std::uint64_t mrrw_min_length(std::uint64_t m, std::uint64_t d) {
  if (m < 1 || d < 1) throw ValidationError("mrrw_min_length needs m, d >= 1");
  if (d <= 1) return m;
  for (std::uint64_t s = std::max(m, d);; ++s) {
    const double delta = static_cast<double>(d) / static_cast<double>(s);
    const double bound = delta >= 0.5 ? 0.0 : mrrw_rate_bound(delta).bound;
    if (static_cast<double>(m) / static_cast<double>(s) <= bound) return s;
  }
}

CountingBound counting_lower_bound(int n, std::uint64_t m) {
  if (n < 1 || n > 62) throw ValidationError("counting bound needs 1 <= n <= 62");
  if (m < 1 || m > (std::uint64_t{1} << n))
    throw ValidationError("counting bound needs 1 <= m <= 2^n");
  const double md = static_cast<double>(m);
  const double value = std::sqrt(md * std::ldexp(1.0, n)) - 2.0 * n - md / 2.0;
  return CountingBound{value, value <= 0.0};
}

double rank_prob_bound(int k, int d) {
  if (k < 0 || d < 0 || d > k) throw ValidationError("rank bound needs 0 <= d <= k");
  const double gap = static_cast<double>(k - d);
  return std::exp2(static_cast<double>(k) - gap * gap);
}

RankSample monte_carlo_rank(int k, int d, std::uint64_t trials, std::uint64_t seed) {
  if (k < 1 || k > 64 || d < 0 || d > k) throw ValidationError("monte_carlo_rank needs 0 <= d <= k <= 64");
  if (trials < 1) throw ValidationError("monte_carlo_rank needs at least one trial");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  RankSample out;
  out.trials = trials;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k));
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& r : rows) r = rng() & mask;
    int rank = 0;
    for (int col = 0; col < k; ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      int pivot = rank;
      while (pivot < k && !(rows[static_cast<std::size_t>(pivot)] & bit)) ++pivot;
      if (pivot == k) continue;
      std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
      for (int r = rank + 1; r < k; ++r)
        if (rows[static_cast<std::size_t>(r)] & bit) rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
      ++rank;
    }
    if (rank <= d) ++out.hits;
  }
  return out;
}

std::int64_t nl_upper_from_mc(int n, int mc) {
  if (n < 1 || n > 62) throw ValidationError("n outside [1, 62]");
  if (mc < 0 || mc > n - 1)
    throw ValidationError("multiplicative complexity M=" + std::to_string(mc) + " outside [0, n-1]");
  return (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << (n - mc - 1));
}

int mc_lower_from_nl(int n, std::int64_t nl) {
  if (n < 1 || n > 62) throw ValidationError("n outside [1, 62]");
  const std::int64_t half = std::int64_t{1} << (n - 1);
  if (nl < 0 || nl > half)
    throw ValidationError("nonlinearity " + std::to_string(nl) + " outside [0, 2^(n-1)]");
  if (nl == half) return n;
  // nl <= 2^(n-1) - 2^(n-M-1)  <=>  2^(n-M-1) <= 2^(n-1) - nl
  const int log_gap = 63 - std::countl_zero(static_cast<std::uint64_t>(half - nl));
  return n - 1 - log_gap;
}

int degree_mc_lower(int d) {
  if (d < 0) throw ValidationError("degree must be nonnegative");
  return d > 0 ? d - 1 : 0;
}

}  // namespace nlmc
