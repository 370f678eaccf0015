#include "nlmc/analysis.hpp"

#include <bit>
#include <stdexcept>

#include "nlmc/error.hpp"

namespace nlmc {
namespace {

std::vector<std::size_t> and_positions(const Circuit& c) {
  std::vector<std::size_t> pos(c.gates().size(), SIZE_MAX);
  std::size_t j = 0;
  for (std::size_t k = 0; k < c.gates().size(); ++k)
    if (c.gates()[k].op == GateOp::And) pos[k] = j++;
  return pos;
}

// Per gate, a vector over the AND gates, propagated in topological order.
// `parity` selects XOR accumulation (coefficients) instead of OR (paths).
std::vector<BitVec> output_vectors(const Circuit& c, bool parity) {
  const auto pos = and_positions(c);
  const std::size_t s = c.and_gates().size();
  std::vector<BitVec> at(c.gates().size(), BitVec(s));
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    if (g.op == GateOp::And && parity) {
      at[k].set(pos[k]);
      continue;
    }
    for (const Wire& w : g.operands) {
      if (!w.is_gate()) continue;
      if (parity)
        at[k] ^= at[w.index];
      else
        at[k] |= at[w.index];
    }
    if (g.op == GateOp::And) at[k].set(pos[k]);
  }
  std::vector<BitVec> out;
  for (const Wire& w : c.outputs()) out.push_back(w.is_gate() ? at[w.index] : BitVec(s));
  return out;
}

}  // namespace

std::vector<BitVec> reachability_vectors(const Circuit& c) { return output_vectors(c, false); }

std::vector<BitVec> coefficient_vectors(const Circuit& c) {
  const CircuitClassification cls = classify_circuit(c);
  if (!cls.is_quadratic)
    throw ValidationError("AND gate g" + std::to_string(*cls.offending_gate + 1) +
                          " has another AND gate in its operand cone");
  return output_vectors(c, true);
}

ExtractedCode extract_code(const Circuit& c) {
  const CircuitClassification cls = classify_circuit(c);
  if (!cls.is_sigma_pi_sigma)
    throw ValidationError("circuit is not sigma-pi-sigma: AND gate g" +
                          std::to_string(*cls.offending_gate + 1) +
                          " has another AND gate in its operand cone");
  std::vector<BitVec> rows = coefficient_vectors(c);
  ExtractedCode out;
  out.cancellation = rows != reachability_vectors(c);
  out.rank = rank_f2(rows);
  out.degenerate = out.rank < rows.size();
  const std::size_t s = c.and_gates().size();
  out.code = GeneratorMatrix(s, std::move(rows));
  return out;
}

CertReport certify(const Circuit& c, const Limits& limits) {
  ExtractedCode extracted = extract_code(c);
  const BooleanFunction f = truth_table(c, limits);
  CertReport r;
  r.n = c.inputs();
  r.m = c.outputs_count();
  r.s = c.and_gates().size();
  r.measured_nl = vector_nonlinearity(f, limits);
  r.M = mc_lower_from_nl(r.n, r.measured_nl);
  r.code_rank = extracted.rank;
  r.code_distance = span_min_distance(extracted.code.rows(), limits);
  r.code = std::move(extracted.code);
  r.theorem_holds = r.code_distance >= static_cast<std::size_t>(r.M);
  if (r.M == 0) r.notes.push_back("M = 0: the distance condition holds vacuously");
  if (extracted.degenerate)
    r.notes.push_back("extracted code is degenerate: rank " + std::to_string(r.code_rank) + " < m = " +
                      std::to_string(r.m));
  if (extracted.cancellation)
    r.notes.push_back("XOR cancellation: code rows use AND-gate coefficients, not raw path reachability");
  if (!r.theorem_holds)
    r.notes.push_back("distance below M: this contradicts the theorem and indicates an implementation bug");
  return r;
}

std::int64_t quadratic_nl_rank(const BooleanFunction& f, const Limits& limits) {
  if (f.outputs() != 1) throw ValidationError("quadratic_nl_rank needs a single-output function");
  if (f.inputs() > limits.max_scalar_n)
    throw BudgetError("n=" + std::to_string(f.inputs()) + " exceeds max_scalar_n=" +
                      std::to_string(limits.max_scalar_n));
  const Anf anf = anf_from_tt(f);
  if (degree(anf) > 2) throw ValidationError("quadratic_nl_rank needs degree <= 2, got " + std::to_string(degree(anf)));
  const int n = f.inputs();
  std::vector<BitVec> adjacency(static_cast<std::size_t>(n), BitVec(static_cast<std::size_t>(n)));
  for (std::uint32_t mask : anf.monomials[0]) {
    if (std::popcount(mask) != 2) continue;
    const int i = std::countr_zero(mask);
    const int j = std::countr_zero(mask & (mask - 1));
    adjacency[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    adjacency[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
  }
  const std::size_t rank = rank_f2(adjacency);
  if (rank % 2 != 0) throw std::logic_error("symplectic form has odd rank");
  const int u = static_cast<int>(rank / 2);
  return (std::int64_t{1} << (n - 1)) - (std::int64_t{1} << (n - u - 1));
}

}  // namespace nlmc
