#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlmc/bitvec.hpp"
#include "nlmc/boolfn.hpp"
#include "nlmc/limits.hpp"

namespace nlmc {

/// A circuit wire: either input x_{index+1} or the output of gate g_{index+1}.
struct Wire {
  enum class Kind : std::uint8_t { input, gate };

  Kind kind = Kind::input;
  std::uint32_t index = 0;

  static constexpr Wire input(std::uint32_t i) { return Wire{Kind::input, i}; }
  static constexpr Wire gate(std::uint32_t k) { return Wire{Kind::gate, k}; }

  bool is_input() const { return kind == Kind::input; }
  bool is_gate() const { return kind == Kind::gate; }

  /// Text form, 1-based: x3, g12.
  std::string name() const;

  friend auto operator<=>(const Wire&, const Wire&) = default;
};

enum class GateOp : std::uint8_t { And, Xor, One };

struct Gate {
  GateOp op = GateOp::One;
  std::vector<Wire> operands;  // AND: exactly 2; XOR: at least 1; ONE: none

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Two disjoint input sets (0-based) covering all inputs.
struct InputPartition {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;

  friend bool operator==(const InputPartition&, const InputPartition&) = default;
};

/// XOR-AND circuit: gates in topological order, AND fanin 2, XOR unbounded
/// fanin, constant ONE. Immutable once constructed.
class Circuit {
 public:
  /// Throws ValidationError on arity violations, forward or dangling
  /// references, or an invalid partition.
  Circuit(int n, std::vector<Gate> gates, std::vector<Wire> outputs,
          std::optional<InputPartition> partition = std::nullopt);

  int inputs() const { return n_; }
  int outputs_count() const { return static_cast<int>(outputs_.size()); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Wire>& outputs() const { return outputs_; }
  const std::optional<InputPartition>& partition() const { return partition_; }

  /// Gate indices of the AND gates, in circuit order (A_1, ..., A_s).
  std::vector<std::size_t> and_gates() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<Gate> gates_;
  std::vector<Wire> outputs_;
  std::optional<InputPartition> partition_;
};

/// Incremental construction used by the synthesizers.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int n);

  int inputs() const { return n_; }
  Wire input(std::uint32_t i) const;
  Wire add_and(Wire a, Wire b);
  Wire add_xor(std::vector<Wire> operands);
  /// XOR of the operands, or the operand itself when there is exactly one.
  Wire sum(std::vector<Wire> operands);
  /// The shared constant-one gate, created on first use.
  Wire one();

  std::size_t and_count() const { return and_count_; }
  std::size_t gate_count() const { return gates_.size(); }

  Circuit build(std::vector<Wire> outputs, std::optional<InputPartition> partition = std::nullopt) &&;

 private:
  Wire push(Gate g);

  int n_;
  std::vector<Gate> gates_;
  std::optional<Wire> one_;
  std::size_t and_count_ = 0;
};

/// Output bits at input x (x_j = bit j-1 of x).
BitVec evaluate(const Circuit& c, std::uint64_t x);

/// Bit-parallel evaluation on all 2^n inputs.
BooleanFunction truth_table(const Circuit& c, const Limits& limits = {});

struct AndMetrics {
  std::size_t and_count = 0;
  std::size_t and_depth = 0;  // max ANDs on any input-to-output path
};

AndMetrics and_metrics(const Circuit& c);

struct CircuitClassification {
  bool is_sigma_pi_sigma = false;
  bool is_quadratic = false;
  bool is_bilinear = false;
  std::size_t and_count = 0;
  std::size_t and_depth = 0;
  /// First AND gate whose operand cone contains another AND gate.
  std::optional<std::size_t> offending_gate;
};

CircuitClassification classify_circuit(const Circuit& c);

/// Exact affine form of a wire whose cone has no AND gate: bits 0..n-1 are
/// the input coefficients, bit n the constant. Empty when the cone has an AND.
std::vector<std::optional<BitVec>> affine_forms(const Circuit& c);

// Text format:
//   circuit <n>
//   g<k> = AND <w> <w> | g<k> = XOR <w> [<w>...] | g<k> = ONE   (k = 1, 2, ...)
//   partition <i,...> | <i,...>                                  (optional)
//   outputs <w> [<w>...]
// Wires are x<i> (1-based input) or g<k>. '#' starts a comment.
Circuit parse_circuit(std::string_view text);
std::string serialize(const Circuit& c);
Circuit read_circuit_file(const std::filesystem::path& path);

}  // namespace nlmc
