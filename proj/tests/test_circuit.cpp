#include <gtest/gtest.h>

#include <random>

#include "nlmc/circuit.hpp"
#include "nlmc/error.hpp"
#include "nlmc/families.hpp"
#include "nlmc/synth.hpp"

using namespace nlmc;

namespace {

Circuit single_and() {
  CircuitBuilder b(2);
  const Wire g = b.add_and(b.input(0), b.input(1));
  return std::move(b).build({g}, InputPartition{{0}, {1}});
}

Circuit and_cascade() {
  CircuitBuilder b(3);
  const Wire g1 = b.add_and(b.input(0), b.input(1));
  const Wire g2 = b.add_and(g1, b.input(2));
  return std::move(b).build({g2});
}

}  // namespace

TEST(Circuit, Evaluate) {
  EXPECT_EQ(evaluate(single_and(), 0b11), BitVec::from_string("1"));
  EXPECT_EQ(evaluate(single_and(), 0b01), BitVec::from_string("0"));
  CircuitBuilder b(3);
  const Wire one = b.one();
  const Circuit c = std::move(b).build({one});
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(evaluate(c, x), BitVec::from_string("1"));
  EXPECT_THROW(evaluate(c, 8), ValidationError);
}

TEST(Circuit, TruthTable) {
  EXPECT_EQ(truth_table(single_and()).table(0).to_string(), "0001");
  const Circuit ex = synth_excluded_products(4);
  EXPECT_EQ(truth_table(ex), excluded_products_fn(4));
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(evaluate(ex, x), excluded_products_fn(4).eval(x));
  Limits tight;
  tight.max_truth_table_n = 3;
  EXPECT_THROW(truth_table(ex, tight), BudgetError);
}

TEST(Circuit, TruthTableComposesWithXor) {
  std::mt19937_64 rng(4);
  const Circuit ex = synth_excluded_products(5);
  std::vector<Gate> gates = ex.gates();
  std::vector<Wire> outs = ex.outputs();
  gates.push_back(Gate{GateOp::Xor, {outs[0], outs[2], outs[4]}});
  outs.push_back(Wire::gate(static_cast<std::uint32_t>(gates.size() - 1)));
  const Circuit extended(5, gates, outs);
  const auto base = truth_table(ex);
  EXPECT_EQ(truth_table(extended).table(5), base.table(0) ^ base.table(2) ^ base.table(4));
}

TEST(Circuit, Metrics) {
  CircuitBuilder b(2);
  const Wire x = b.add_xor({b.input(0), b.input(1)});
  const Circuit linear = std::move(b).build({x});
  EXPECT_EQ(and_metrics(linear).and_count, 0u);
  EXPECT_EQ(and_metrics(linear).and_depth, 0u);
  EXPECT_EQ(and_metrics(and_cascade()).and_count, 2u);
  EXPECT_EQ(and_metrics(and_cascade()).and_depth, 2u);
  EXPECT_EQ(and_metrics(synth_monomial_bank(4)).and_count, 11u);
}

TEST(Circuit, Classification) {
  auto c = classify_circuit(single_and());
  EXPECT_TRUE(c.is_quadratic);
  EXPECT_TRUE(c.is_sigma_pi_sigma);
  EXPECT_TRUE(c.is_bilinear);

  c = classify_circuit(and_cascade());
  EXPECT_FALSE(c.is_quadratic);
  EXPECT_FALSE(c.is_sigma_pi_sigma);
  EXPECT_FALSE(c.is_bilinear);
  ASSERT_TRUE(c.offending_gate.has_value());
  EXPECT_EQ(*c.offending_gate, 1u);

  // same AND without a partition is not bilinear
  CircuitBuilder b(2);
  const Wire g = b.add_and(b.input(0), b.input(1));
  EXPECT_FALSE(classify_circuit(std::move(b).build({g})).is_bilinear);

  // both operands on the same side
  CircuitBuilder b2(4);
  const Wire h = b2.add_and(b2.input(0), b2.input(1));
  EXPECT_FALSE(classify_circuit(std::move(b2).build({h}, InputPartition{{0, 1}, {2, 3}})).is_bilinear);

  // an operand with a constant term is affine, not linear
  CircuitBuilder b3(2);
  const Wire l = b3.add_xor({b3.input(0), b3.one()});
  const Wire k = b3.add_and(l, b3.input(1));
  EXPECT_FALSE(classify_circuit(std::move(b3).build({k}, InputPartition{{0}, {1}})).is_bilinear);
}

TEST(Circuit, StructuralNotSemantic) {
  // x1 x2 computed as (x1 x2) x1: degree 2 but not layered
  CircuitBuilder b(2);
  const Wire g1 = b.add_and(b.input(0), b.input(1));
  const Wire g2 = b.add_and(g1, b.input(0));
  const Circuit c = std::move(b).build({g2});
  EXPECT_EQ(degree(truth_table(c)), 2);
  EXPECT_FALSE(classify_circuit(c).is_sigma_pi_sigma);
}

TEST(Circuit, HierarchyAndDegreeOnRandomCircuits) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    CircuitBuilder b(n);
    std::vector<Wire> wires;
    for (int i = 0; i < n; ++i) wires.push_back(b.input(static_cast<std::uint32_t>(i)));
    const int gates = 1 + static_cast<int>(rng() % 8);
    for (int g = 0; g < gates; ++g) {
      auto pick = [&] { return wires[rng() % wires.size()]; };
      if (rng() % 2)
        wires.push_back(b.add_and(pick(), pick()));
      else
        wires.push_back(b.add_xor({pick(), pick(), pick()}));
    }
    std::vector<std::uint32_t> left, right;
    for (int i = 0; i < n; ++i) (i < n / 2 ? left : right).push_back(static_cast<std::uint32_t>(i));
    const Circuit c = std::move(b).build({wires.back(), wires[wires.size() / 2]}, InputPartition{left, right});
    const auto cls = classify_circuit(c);
    if (cls.is_bilinear) EXPECT_TRUE(cls.is_quadratic);
    if (cls.is_quadratic) {
      EXPECT_TRUE(cls.is_sigma_pi_sigma);
      EXPECT_LE(degree(truth_table(c)), 2);
    }
    EXPECT_LE(cls.and_depth, cls.and_count);
  }
}

TEST(Circuit, ConstructorValidation) {
  EXPECT_THROW(Circuit(2, {Gate{GateOp::And, {Wire::input(0)}}}, {Wire::gate(0)}), ValidationError);
  EXPECT_THROW(Circuit(2, {Gate{GateOp::Xor, {}}}, {Wire::gate(0)}), ValidationError);
  EXPECT_THROW(Circuit(2, {Gate{GateOp::One, {Wire::input(0)}}}, {Wire::gate(0)}), ValidationError);
  EXPECT_THROW(Circuit(2, {Gate{GateOp::Xor, {Wire::gate(0)}}}, {Wire::gate(0)}), ValidationError);
  EXPECT_THROW(Circuit(2, {Gate{GateOp::Xor, {Wire::input(2)}}}, {Wire::gate(0)}), ValidationError);
  EXPECT_THROW(Circuit(2, {}, {Wire::gate(0)}), ValidationError);
  EXPECT_THROW(Circuit(2, {}, {}), ValidationError);
  EXPECT_THROW(Circuit(2, {}, {Wire::input(0)}, InputPartition{{0}, {0}}), ValidationError);
  EXPECT_THROW(Circuit(3, {}, {Wire::input(0)}, InputPartition{{0}, {1}}), ValidationError);
}

TEST(CircuitText, ParsesMinimal) {
  const Circuit c = parse_circuit("circuit 2\ng1 = AND x1 x2\noutputs g1\n");
  EXPECT_EQ(c, [] {
    CircuitBuilder b(2);
    const Wire g = b.add_and(b.input(0), b.input(1));
    return std::move(b).build({g});
  }());
  const Circuit d = parse_circuit("# header\ncircuit 2  # two inputs\ng1 = ONE\ng2 = XOR x1 g1\npartition 1 | 2\noutputs g2 x2\n");
  EXPECT_EQ(d.outputs_count(), 2);
  ASSERT_TRUE(d.partition().has_value());
  EXPECT_EQ(d.partition()->left, std::vector<std::uint32_t>{0});
}

TEST(CircuitText, RoundTrip) {
  const std::vector<Circuit> corpus = {single_and(), and_cascade(), synth_monomial_bank(4), synth_indicators(3),
                                       synth_excluded_products(6),
                                       synth_universal(inner_product_fn(2)).circuit};
  for (const Circuit& c : corpus) {
    const std::string text = serialize(c);
    EXPECT_EQ(parse_circuit(text), c);
    EXPECT_EQ(serialize(parse_circuit(text)), text);
  }
}

TEST(CircuitText, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(line_of("circuit 2\ng1 = AND x1 g2\ng2 = ONE\noutputs g1\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("circuit 2\ng1 = NAND x1 x2\noutputs g1\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("circuit 2\ng2 = ONE\noutputs g2\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("circuit 2\ng1 = AND x1 x3\noutputs g1\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("circuit 2\ng1 = ONE\n").find("line"), std::string::npos);
  EXPECT_NE(line_of("circuit 2\noutputs x1\ng1 = ONE\n").find("line 3"), std::string::npos);
  EXPECT_NE(line_of("circ 2\n").find("line 1"), std::string::npos);
  EXPECT_THROW(read_circuit_file("/nonexistent.circ"), ParseError);
}
