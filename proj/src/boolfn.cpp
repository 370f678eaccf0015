#include "nlmc/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nlmc/error.hpp"

namespace nlmc {
namespace {

using Word = BitVec::Word;

constexpr Word kLowHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

void check_inputs(int n) {
  if (n < 1 || n > kMaxInputs)
    throw ValidationError("input count n=" + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxInputs) + "]");
}

void require_single_output(const BooleanFunction& f, const char* op) {
  if (f.outputs() != 1)
    throw ValidationError(std::string(op) + " requires a single-output function, got m=" +
                          std::to_string(f.outputs()));
}

void check_scalar_budget(int n, const Limits& limits) {
  if (n > limits.max_scalar_n)
    throw BudgetError("n=" + std::to_string(n) + " exceeds the scalar limit max_scalar_n=" +
                      std::to_string(limits.max_scalar_n));
}

// Fast Walsh-Hadamard transform in place.
void fwht(std::vector<std::int32_t>& v) {
  const std::size_t size = v.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t a = v[j];
        const std::int32_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

std::int32_t max_abs_walsh(const BitVec& table, std::vector<std::int32_t>& scratch) {
  const std::size_t size = table.size();
  scratch.resize(size);
  for (std::size_t x = 0; x < size; ++x) scratch[x] = table.test(x) ? -1 : 1;
  fwht(scratch);
  std::int32_t best = 0;
  for (std::int32_t w : scratch) best = std::max(best, std::abs(w));
  return best;
}

std::int64_t nl_from_max_walsh(int n, std::int32_t max_abs) {
  return (std::int64_t{1} << (n - 1)) - max_abs / 2;
}

}  // namespace

BooleanFunction::BooleanFunction(int n, int m) : n_(n) {
  check_inputs(n);
  if (m < 1 || static_cast<std::uint64_t>(m) > (std::uint64_t{1} << n))
    throw ValidationError("output count m=" + std::to_string(m) + " outside [1, 2^n]");
  tables_.assign(static_cast<std::size_t>(m), BitVec(std::size_t{1} << n));
}

BooleanFunction::BooleanFunction(int n, std::vector<BitVec> tables) : n_(n), tables_(std::move(tables)) {
  check_inputs(n);
  if (tables_.empty() || tables_.size() > (std::size_t{1} << n))
    throw ValidationError("output count m=" + std::to_string(tables_.size()) + " outside [1, 2^n]");
  for (const BitVec& t : tables_)
    if (t.size() != (std::size_t{1} << n))
      throw ValidationError("truth table has " + std::to_string(t.size()) + " bits, expected 2^" +
                            std::to_string(n));
}

BitVec BooleanFunction::eval(std::uint64_t x) const {
  BitVec out(tables_.size());
  for (std::size_t i = 0; i < tables_.size(); ++i)
    if (tables_[i].test(x)) out.set(i);
  return out;
}

std::size_t Anf::size() const {
  std::size_t total = 0;
  for (const auto& out : monomials) total += out.size();
  return total;
}

std::int32_t WalshSpectrum::max_abs() const {
  std::int32_t best = 0;
  for (std::int32_t v : values) best = std::max(best, std::abs(v));
  return best;
}

void moebius_transform(BitVec& table, int n) {
  auto words = table.words();
  const int in_word = std::min(n, 6);
  for (Word& w : words)
    for (int i = 0; i < in_word; ++i) w ^= (w & kLowHalf[i]) << (1u << i);
  for (int i = 6; i < n; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < words.size(); ++j)
      if (!(j & step)) words[j | step] ^= words[j];
  }
}

Anf anf_from_tt(const BooleanFunction& f) {
  Anf a;
  a.n = f.inputs();
  a.monomials.resize(static_cast<std::size_t>(f.outputs()));
  for (int i = 0; i < f.outputs(); ++i) {
    BitVec coeffs = f.table(i);
    moebius_transform(coeffs, f.inputs());
    auto& out = a.monomials[static_cast<std::size_t>(i)];
    for (std::size_t x = 0; x < coeffs.size(); ++x)
      if (coeffs.test(x)) out.push_back(static_cast<std::uint32_t>(x));
  }
  return a;
}

BooleanFunction tt_from_anf(const Anf& a) {
  BooleanFunction f(a.n, a.outputs());
  for (int i = 0; i < a.outputs(); ++i) {
    BitVec& t = f.table(i);
    for (std::uint32_t mask : a.monomials[static_cast<std::size_t>(i)]) {
      if (mask >= t.size()) throw ValidationError("monomial mask references a variable beyond n");
      t.flip(mask);
    }
    moebius_transform(t, a.n);
  }
  return f;
}

int degree(const Anf& a) {
  int d = 0;
  for (const auto& out : a.monomials)
    for (std::uint32_t mask : out) d = std::max(d, std::popcount(mask));
  return d;
}

int degree(const BooleanFunction& f) { return degree(anf_from_tt(f)); }

BooleanFunction component(const BooleanFunction& f, std::span<const int> outputs) {
  if (outputs.empty()) throw ValidationError("component requires a nonempty output subset");
  BitVec seen(static_cast<std::size_t>(f.outputs()));
  BitVec acc(f.table_size());
  for (int i : outputs) {
    if (i < 0 || i >= f.outputs())
      throw ValidationError("output index " + std::to_string(i) + " out of range");
    if (seen.test(static_cast<std::size_t>(i)))
      throw ValidationError("output index " + std::to_string(i) + " repeated in subset");
    seen.set(static_cast<std::size_t>(i));
    acc ^= f.table(i);
  }
  return BooleanFunction(f.inputs(), std::vector<BitVec>{std::move(acc)});
}

WalshSpectrum walsh_spectrum(const BitVec& table, int n) {
  WalshSpectrum s;
  s.n = n;
  s.values.resize(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) s.values[x] = table.test(x) ? -1 : 1;
  fwht(s.values);
  return s;
}

WalshSpectrum walsh_spectrum(const BooleanFunction& f, const Limits& limits) {
  require_single_output(f, "walsh_spectrum");
  check_scalar_budget(f.inputs(), limits);
  return walsh_spectrum(f.table(0), f.inputs());
}

std::int64_t nonlinearity(const BooleanFunction& f, const Limits& limits) {
  require_single_output(f, "nonlinearity");
  check_scalar_budget(f.inputs(), limits);
  std::vector<std::int32_t> scratch;
  return nl_from_max_walsh(f.inputs(), max_abs_walsh(f.table(0), scratch));
}

void check_vector_budget(int n, int m, const Limits& limits) {
  if (n > limits.max_vector_n)
    throw BudgetError("n=" + std::to_string(n) + " exceeds max_vector_n=" +
                      std::to_string(limits.max_vector_n));
  if (m > limits.max_vector_m)
    throw BudgetError("m=" + std::to_string(m) + " exceeds max_vector_m=" +
                      std::to_string(limits.max_vector_m));
  // (2^m - 1) * n * 2^n, computed in floating point to avoid overflow.
  const long double cost = (std::ldexp(1.0L, m) - 1.0L) * n * std::ldexp(1.0L, n);
  if (cost > static_cast<long double>(limits.vector_cost_cap))
    throw BudgetError("vector nonlinearity cost (2^m-1)*n*2^n exceeds vector_cost_cap=" +
                      std::to_string(limits.vector_cost_cap));
}

std::int64_t vector_nonlinearity(const BooleanFunction& f, const Limits& limits) {
  const int n = f.inputs();
  const int m = f.outputs();
  check_vector_budget(n, m, limits);
  std::vector<std::int32_t> scratch;
  BitVec comp(f.table_size());
  std::int32_t worst = 0;
  // Gray-code walk: each step toggles exactly one output into the combination.
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t t = 1; t < count; ++t) {
    comp ^= f.table(std::countr_zero(t));
    worst = std::max(worst, max_abs_walsh(comp, scratch));
  }
  return nl_from_max_walsh(n, worst);
}

std::string_view to_string(NlClass c) {
  switch (c) {
    case NlClass::bent: return "bent";
    case NlClass::almost_bent: return "almost_bent";
    case NlClass::neither: return "neither";
  }
  return "neither";
}

std::int64_t bent_bound(int n) {
  if (n % 2 == 0) return (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << (n / 2 - 1));
  return static_cast<std::int64_t>(
      std::floor(std::ldexp(1.0L, n - 1) - std::pow(2.0L, static_cast<long double>(n) / 2 - 1)));
}

std::int64_t almost_bent_bound(int n) {
  return (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << ((n - 1) / 2));
}

NlClassification classify_nl(const BooleanFunction& f, const Limits& limits) {
  NlClassification c;
  c.nl = vector_nonlinearity(f, limits);
  const int n = f.inputs();
  if (n % 2 == 0 && c.nl == bent_bound(n))
    c.kind = NlClass::bent;
  else if (n % 2 == 1 && f.outputs() == n && c.nl == almost_bent_bound(n))
    c.kind = NlClass::almost_bent;
  return c;
}

BooleanFunction parse_tt(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<BitVec> tables;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n >> m) || tag != "tt") fail("expected header 'tt <n> <m>'");
      std::string extra;
      if (fields >> extra) fail("unexpected token '" + extra + "' after header");
      if (n < 1 || n > kMaxInputs) fail("n=" + std::to_string(n) + " outside [1, 24]");
      if (m < 1 || static_cast<std::uint64_t>(m) > (std::uint64_t{1} << n))
        fail("m=" + std::to_string(m) + " outside [1, 2^n]");
      continue;
    }
    std::string bits;
    fields >> bits;
    std::string extra;
    if (fields >> extra) fail("unexpected token after table row");
    if (static_cast<int>(tables.size()) == m) fail("more than m table rows");
    if (bits.size() != (std::size_t{1} << n))
      fail("table row has " + std::to_string(bits.size()) + " characters, expected " +
           std::to_string(std::size_t{1} << n));
    try {
      tables.push_back(BitVec::from_string(bits));
    } catch (const std::invalid_argument&) {
      fail("table row contains a character other than 0/1");
    }
  }
  if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": missing 'tt' header");
  if (static_cast<int>(tables.size()) != m)
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                     " table rows, found " + std::to_string(tables.size()));
  return BooleanFunction(n, std::move(tables));
}

std::string format_tt(const BooleanFunction& f) {
  std::string out = "tt " + std::to_string(f.inputs()) + " " + std::to_string(f.outputs()) + "\n";
  for (const BitVec& t : f.tables()) {
    out += t.to_string();
    out += '\n';
  }
  return out;
}

BooleanFunction read_tt_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open truth-table file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tt(buf.str());
}

}  // namespace nlmc
