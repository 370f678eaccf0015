#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>

#include "nlmc/codes.hpp"
#include "nlmc/error.hpp"

namespace nlmc {

GeneratorMatrix::GeneratorMatrix(std::size_t length, std::vector<BitVec> rows)
    : length_(length), rows_(std::move(rows)) {
  for (const BitVec& r : rows_)
    if (r.size() != length_)
      throw ValidationError("generator row has length " + std::to_string(r.size()) + ", expected " +
                            std::to_string(length_));
}

GeneratorMatrix GeneratorMatrix::identity(std::size_t m) {
  std::vector<BitVec> rows(m, BitVec(m));
  for (std::size_t i = 0; i < m; ++i) rows[i].set(i);
  return GeneratorMatrix(m, std::move(rows));
}

GeneratorMatrix GeneratorMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> bits;
  for (const std::string& r : rows) bits.push_back(BitVec::from_string(r));
  const std::size_t s = bits.empty() ? 0 : bits.front().size();
  return GeneratorMatrix(s, std::move(bits));
}

std::vector<BitVec> row_space_basis(std::span<const BitVec> rows) {
  std::vector<BitVec> basis(rows.begin(), rows.end());
  if (basis.empty()) return basis;
  const std::size_t width = basis.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < basis.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < basis.size() && !basis[pivot].test(col)) ++pivot;
    if (pivot == basis.size()) continue;
    std::swap(basis[rank], basis[pivot]);
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (r != rank && basis[r].test(col)) basis[r] ^= basis[rank];
    ++rank;
  }
  basis.resize(rank);
  return basis;
}

std::size_t rank_f2(std::span<const BitVec> rows) { return row_space_basis(rows).size(); }

bool same_row_space(std::span<const BitVec> a, std::span<const BitVec> b) {
  return row_space_basis(a) == row_space_basis(b);
}

std::vector<BitVec> null_space(std::span<const BitVec> parity_rows, std::size_t s) {
  const std::vector<BitVec> rref = row_space_basis(parity_rows);
  std::vector<std::size_t> pivot_col;
  for (const BitVec& r : rref) pivot_col.push_back(r.find_first());
  std::vector<bool> is_pivot(s, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < s; ++free) {
    if (is_pivot[free]) continue;
    BitVec v(s);
    v.set(free);
    for (std::size_t r = 0; r < rref.size(); ++r)
      if (rref[r].test(free)) v.set(pivot_col[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::size_t enumerate_min_weight(const std::vector<BitVec>& basis) {
  if (basis.empty()) return 0;
  BitVec word(basis.front().size());
  std::size_t best = word.size() + 1;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t t = 1; t < count; ++t) {
    word ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
    best = std::min(best, word.count());
  }
  return best;
}

void check_dimension_budget(std::size_t dim, const Limits& limits) {
  if (dim > static_cast<std::size_t>(limits.max_code_dimension))
    throw BudgetError("code dimension " + std::to_string(dim) + " exceeds max_code_dimension=" +
                      std::to_string(limits.max_code_dimension));
}

}  // namespace

std::size_t min_distance(const GeneratorMatrix& g, const Limits& limits) {
  if (rank_f2(g.rows()) != g.dimension())
    throw ValidationError("generator matrix is rank-deficient");
  check_dimension_budget(g.dimension(), limits);
  return enumerate_min_weight(g.rows());
}

std::size_t span_min_distance(std::span<const BitVec> rows, const Limits& limits) {
  const std::vector<BitVec> basis = row_space_basis(rows);
  check_dimension_budget(basis.size(), limits);
  return enumerate_min_weight(basis);
}

GeneratorMatrix parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long m = -1;
  long s = -1;
  std::vector<BitVec> rows;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (m < 0) {
      std::string tag;
      if (!(fields >> tag >> m >> s) || tag != "code" || m < 0 || s < 0)
        fail("expected header 'code <m> <s>'");
      continue;
    }
    std::string bits;
    fields >> bits;
    if (static_cast<long>(rows.size()) == m) fail("more than m rows");
    if (static_cast<long>(bits.size()) != s)
      fail("row has " + std::to_string(bits.size()) + " characters, expected " + std::to_string(s));
    try {
      rows.push_back(BitVec::from_string(bits));
    } catch (const std::invalid_argument&) {
      fail("row contains a character other than 0/1");
    }
  }
  ++line_no;
  if (m < 0) fail("missing 'code' header");
  if (static_cast<long>(rows.size()) != m)
    fail("expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
  return GeneratorMatrix(static_cast<std::size_t>(s), std::move(rows));
}

std::string format_code(const GeneratorMatrix& g) {
  std::string out = "code " + std::to_string(g.dimension()) + " " + std::to_string(g.length()) + "\n";
  for (const BitVec& r : g.rows()) out += r.to_string() + "\n";
  return out;
}

GeneratorMatrix read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

std::optional<GeneratorMatrix> varshamov_code(std::size_t m, std::size_t d, std::size_t s,
                                              std::uint64_t seed) {
  if (m < 1 || d < 1 || s < m || s < d)
    throw ValidationError("varshamov_code needs 1 <= m <= s, 1 <= d <= s");
  const std::size_t r = s - m;
  if (r > 24) throw BudgetError("redundancy s - m = " + std::to_string(r) + " exceeds 24");
  const std::size_t space = std::size_t{1} << r;

  // reach[w]: syndromes expressible as a sum of at most w chosen columns.
  const std::size_t depth = d >= 2 ? d - 2 : 0;
  std::vector<BitVec> reach(depth + 1, BitVec(space));
  for (BitVec& layer : reach) layer.set(0);

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> columns;
  std::vector<std::uint32_t> candidates;
  for (std::size_t j = 0; j < s; ++j) {
    candidates.clear();
    for (std::size_t c = 0; c < space; ++c)
      if (d < 2 || !reach[depth].test(c)) candidates.push_back(static_cast<std::uint32_t>(c));
    if (candidates.empty()) return std::nullopt;
    const std::uint32_t col = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    columns.push_back(col);
    for (std::size_t w = depth; w >= 1; --w) {
      const BitVec& prev = reach[w - 1];
      for (std::size_t x = 0; x < space; ++x)
        if (prev.test(x)) reach[w].set(x ^ col);
    }
  }

  std::vector<BitVec> parity(r, BitVec(s));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < r; ++i)
      if ((columns[j] >> i) & 1u) parity[i].set(j);
  std::vector<BitVec> kernel = null_space(parity, s);
  kernel.resize(m);
  return GeneratorMatrix(s, std::move(kernel));
}

GeneratorMatrix gv_code(std::size_t m, std::size_t d, std::uint64_t seed) {
  const auto s = static_cast<std::size_t>(gv_min_length(m, d));
  auto code = varshamov_code(m, d, s, seed);
  if (!code) throw ValidationError("greedy construction failed at a GV-feasible length");
  return *std::move(code);
}

}  // namespace nlmc
