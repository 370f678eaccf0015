#include "nlmc/circuit.hpp"

#include <algorithm>

#include "nlmc/error.hpp"

namespace nlmc {
namespace {

constexpr int kMaxCircuitInputs = 64;

void check_wire(const Wire& w, int n, std::size_t gate_limit, const std::string& where) {
  if (w.is_input()) {
    if (w.index >= static_cast<std::uint32_t>(n))
      throw ValidationError(where + " references input x" + std::to_string(w.index + 1) +
                            " but the circuit has " + std::to_string(n) + " inputs");
  } else if (w.index >= gate_limit) {
    throw ValidationError(where + " references " + w.name() + " which is not defined before it");
  }
}

}  // namespace

std::string Wire::name() const {
  return (is_input() ? "x" : "g") + std::to_string(index + 1);
}

Circuit::Circuit(int n, std::vector<Gate> gates, std::vector<Wire> outputs,
                 std::optional<InputPartition> partition)
    : n_(n), gates_(std::move(gates)), outputs_(std::move(outputs)), partition_(std::move(partition)) {
  if (n_ < 1 || n_ > kMaxCircuitInputs)
    throw ValidationError("circuit input count " + std::to_string(n_) + " outside [1, 64]");
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const Gate& g = gates_[k];
    const std::string where = "gate g" + std::to_string(k + 1);
    switch (g.op) {
      case GateOp::And:
        if (g.operands.size() != 2) throw ValidationError(where + ": AND needs exactly 2 operands");
        break;
      case GateOp::Xor:
        if (g.operands.empty()) throw ValidationError(where + ": XOR needs at least 1 operand");
        break;
      case GateOp::One:
        if (!g.operands.empty()) throw ValidationError(where + ": ONE takes no operands");
        break;
    }
    for (const Wire& w : g.operands) check_wire(w, n_, k, where);
  }
  if (outputs_.empty()) throw ValidationError("circuit needs at least one output");
  for (const Wire& w : outputs_) check_wire(w, n_, gates_.size(), "output");
  if (partition_) {
    std::vector<int> side(static_cast<std::size_t>(n_), 0);
    auto mark = [&](const std::vector<std::uint32_t>& ids, int tag) {
      for (std::uint32_t i : ids) {
        if (i >= static_cast<std::uint32_t>(n_))
          throw ValidationError("partition references input " + std::to_string(i + 1) +
                                " outside [1, n]");
        if (side[i] != 0)
          throw ValidationError("partition lists input " + std::to_string(i + 1) + " twice");
        side[i] = tag;
      }
    };
    mark(partition_->left, 1);
    mark(partition_->right, 2);
    for (int i = 0; i < n_; ++i)
      if (side[static_cast<std::size_t>(i)] == 0)
        throw ValidationError("partition does not cover input " + std::to_string(i + 1));
  }
}

std::vector<std::size_t> Circuit::and_gates() const {
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < gates_.size(); ++k)
    if (gates_[k].op == GateOp::And) ids.push_back(k);
  return ids;
}

CircuitBuilder::CircuitBuilder(int n) : n_(n) {
  if (n < 1 || n > kMaxCircuitInputs)
    throw ValidationError("circuit input count " + std::to_string(n) + " outside [1, 64]");
}

Wire CircuitBuilder::input(std::uint32_t i) const {
  if (i >= static_cast<std::uint32_t>(n_)) throw ValidationError("input index out of range");
  return Wire::input(i);
}

Wire CircuitBuilder::push(Gate g) {
  gates_.push_back(std::move(g));
  return Wire::gate(static_cast<std::uint32_t>(gates_.size() - 1));
}

Wire CircuitBuilder::add_and(Wire a, Wire b) {
  ++and_count_;
  return push(Gate{GateOp::And, {a, b}});
}

Wire CircuitBuilder::add_xor(std::vector<Wire> operands) {
  if (operands.empty()) throw ValidationError("XOR needs at least 1 operand");
  return push(Gate{GateOp::Xor, std::move(operands)});
}

Wire CircuitBuilder::sum(std::vector<Wire> operands) {
  if (operands.size() == 1) return operands.front();
  return add_xor(std::move(operands));
}

Wire CircuitBuilder::one() {
  if (!one_) one_ = push(Gate{GateOp::One, {}});
  return *one_;
}

Circuit CircuitBuilder::build(std::vector<Wire> outputs, std::optional<InputPartition> partition) && {
  return Circuit(n_, std::move(gates_), std::move(outputs), std::move(partition));
}

BitVec evaluate(const Circuit& c, std::uint64_t x) {
  const int n = c.inputs();
  if (n < 64 && (x >> n) != 0)
    throw ValidationError("assignment has bits beyond the " + std::to_string(n) + " inputs");
  std::vector<std::uint8_t> value(c.gates().size(), 0);
  auto read = [&](const Wire& w) -> std::uint8_t {
    return w.is_input() ? static_cast<std::uint8_t>((x >> w.index) & 1u) : value[w.index];
  };
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    switch (g.op) {
      case GateOp::And: value[k] = read(g.operands[0]) & read(g.operands[1]); break;
      case GateOp::One: value[k] = 1; break;
      case GateOp::Xor: {
        std::uint8_t acc = 0;
        for (const Wire& w : g.operands) acc ^= read(w);
        value[k] = acc;
        break;
      }
    }
  }
  BitVec out(c.outputs().size());
  for (std::size_t i = 0; i < c.outputs().size(); ++i)
    if (read(c.outputs()[i])) out.set(i);
  return out;
}

BooleanFunction truth_table(const Circuit& c, const Limits& limits) {
  const int n = c.inputs();
  if (n > limits.max_truth_table_n || n > kMaxInputs)
    throw BudgetError("truth table of a circuit with n=" + std::to_string(n) +
                      " exceeds max_truth_table_n=" + std::to_string(limits.max_truth_table_n));
  if (static_cast<std::uint64_t>(c.outputs_count()) > (std::uint64_t{1} << n))
    throw ValidationError("circuit has more than 2^n outputs");
  const std::size_t size = std::size_t{1} << n;

  std::vector<BitVec> input_tables(static_cast<std::size_t>(n), BitVec(size));
  for (std::size_t x = 0; x < size; ++x)
    for (int j = 0; j < n; ++j)
      if ((x >> j) & 1u) input_tables[static_cast<std::size_t>(j)].set(x);

  std::vector<BitVec> value(c.gates().size());
  auto read = [&](const Wire& w) -> const BitVec& {
    return w.is_input() ? input_tables[w.index] : value[w.index];
  };
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    switch (g.op) {
      case GateOp::And: value[k] = read(g.operands[0]) & read(g.operands[1]); break;
      case GateOp::One:
        value[k] = BitVec(size);
        value[k].fill();
        break;
      case GateOp::Xor:
        value[k] = read(g.operands[0]);
        for (std::size_t i = 1; i < g.operands.size(); ++i) value[k] ^= read(g.operands[i]);
        break;
    }
  }
  std::vector<BitVec> tables;
  tables.reserve(c.outputs().size());
  for (const Wire& w : c.outputs()) tables.push_back(read(w));
  return BooleanFunction(n, std::move(tables));
}

AndMetrics and_metrics(const Circuit& c) {
  AndMetrics m;
  std::vector<std::size_t> depth(c.gates().size(), 0);
  auto read = [&](const Wire& w) { return w.is_input() ? std::size_t{0} : depth[w.index]; };
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    std::size_t d = 0;
    for (const Wire& w : g.operands) d = std::max(d, read(w));
    if (g.op == GateOp::And) {
      ++d;
      ++m.and_count;
    }
    depth[k] = d;
  }
  for (const Wire& w : c.outputs()) m.and_depth = std::max(m.and_depth, read(w));
  return m;
}

std::vector<std::optional<BitVec>> affine_forms(const Circuit& c) {
  const auto n = static_cast<std::size_t>(c.inputs());
  std::vector<std::optional<BitVec>> forms(c.gates().size());
  auto form_of = [&](const Wire& w) -> std::optional<BitVec> {
    if (w.is_gate()) return forms[w.index];
    BitVec v(n + 1);
    v.set(w.index);
    return v;
  };
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    if (g.op == GateOp::One) {
      BitVec v(n + 1);
      v.set(n);
      forms[k] = std::move(v);
    } else if (g.op == GateOp::Xor) {
      BitVec acc(n + 1);
      bool affine = true;
      for (const Wire& w : g.operands) {
        auto f = form_of(w);
        if (!f) {
          affine = false;
          break;
        }
        acc ^= *f;
      }
      if (affine) forms[k] = std::move(acc);
    }
  }
  return forms;
}

CircuitClassification classify_circuit(const Circuit& c) {
  CircuitClassification out;
  const AndMetrics metrics = and_metrics(c);
  out.and_count = metrics.and_count;
  out.and_depth = metrics.and_depth;

  std::vector<bool> has_and(c.gates().size(), false);
  auto cone_has_and = [&](const Wire& w) { return w.is_gate() && has_and[w.index]; };
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    bool any = g.op == GateOp::And;
    for (const Wire& w : g.operands) {
      if (cone_has_and(w)) {
        any = true;
        if (g.op == GateOp::And && !out.offending_gate) out.offending_gate = k;
      }
    }
    has_and[k] = any;
  }
  // In this IR a circuit whose AND operands are all affine is layered as
  // XOR -> AND -> XOR, so the two classes coincide.
  out.is_quadratic = !out.offending_gate.has_value();
  out.is_sigma_pi_sigma = out.is_quadratic;

  if (out.is_quadratic && c.partition()) {
    const auto n = static_cast<std::size_t>(c.inputs());
    BitVec left(n + 1);
    BitVec right(n + 1);
    for (std::uint32_t i : c.partition()->left) left.set(i);
    for (std::uint32_t i : c.partition()->right) right.set(i);
    const auto forms = affine_forms(c);
    auto form_of = [&](const Wire& w) {
      if (w.is_gate()) return *forms[w.index];
      BitVec v(n + 1);
      v.set(w.index);
      return v;
    };
    out.is_bilinear = true;
    for (std::size_t k : c.and_gates()) {
      const BitVec a = form_of(c.gates()[k].operands[0]);
      const BitVec b = form_of(c.gates()[k].operands[1]);
      const bool linear = !a.test(n) && !b.test(n);
      const bool split = (a.is_subset_of(left) && b.is_subset_of(right)) ||
                         (a.is_subset_of(right) && b.is_subset_of(left));
      if (!linear || !split) {
        out.is_bilinear = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace nlmc
