#include <charconv>
#include <fstream>
#include <sstream>

#include "nlmc/circuit.hpp"
#include "nlmc/error.hpp"

namespace nlmc {
namespace {

struct LineParser {
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  }

  std::uint32_t number(std::string_view digits, std::string_view what) const {
    std::uint32_t v = 0;
    auto r = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || r.ec != std::errc{} || r.ptr != digits.data() + digits.size())
      fail("malformed " + std::string(what) + " '" + std::string(digits) + "'");
    return v;
  }

  Wire wire(std::string_view tok, int n, std::size_t defined_gates) const {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'g')) fail("unknown wire '" + std::string(tok) + "'");
    const std::uint32_t idx = number(tok.substr(1), "wire");
    if (idx == 0) fail("wire indices start at 1: '" + std::string(tok) + "'");
    if (tok[0] == 'x') {
      if (idx > static_cast<std::uint32_t>(n))
        fail("unknown wire '" + std::string(tok) + "' (circuit has " + std::to_string(n) + " inputs)");
      return Wire::input(idx - 1);
    }
    if (idx > defined_gates)
      fail("'" + std::string(tok) + "' is not defined before this line");
    return Wire::gate(idx - 1);
  }
};

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::vector<std::uint32_t> parse_side(const LineParser& p, std::string side, int n) {
  for (char& ch : side)
    if (ch == ',') ch = ' ';
  std::vector<std::uint32_t> ids;
  for (const std::string& tok : tokenize(side)) {
    const std::uint32_t i = p.number(tok, "partition index");
    if (i == 0 || i > static_cast<std::uint32_t>(n))
      p.fail("partition index " + tok + " outside [1, " + std::to_string(n) + "]");
    ids.push_back(i - 1);
  }
  return ids;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  LineParser p;
  int n = -1;
  std::vector<Gate> gates;
  std::optional<InputPartition> partition;
  std::optional<std::vector<Wire>> outputs;

  while (std::getline(in, raw)) {
    ++p.line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (outputs) p.fail("content after the 'outputs' line");

    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "circuit") p.fail("expected header 'circuit <n>'");
      n = static_cast<int>(p.number(toks[1], "input count"));
      if (n < 1 || n > 64) p.fail("input count " + toks[1] + " outside [1, 64]");
      continue;
    }
    if (toks[0] == "outputs") {
      if (toks.size() < 2) p.fail("'outputs' needs at least one wire");
      std::vector<Wire> outs;
      for (std::size_t i = 1; i < toks.size(); ++i) outs.push_back(p.wire(toks[i], n, gates.size()));
      outputs = std::move(outs);
      continue;
    }
    if (toks[0] == "partition") {
      if (partition) p.fail("duplicate 'partition' line");
      const auto body = line.substr(line.find("partition") + 9);
      const auto bar = body.find('|');
      if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
        p.fail("partition must be '<i,...> | <i,...>'");
      partition = InputPartition{parse_side(p, body.substr(0, bar), n), parse_side(p, body.substr(bar + 1), n)};
      continue;
    }
    if (toks.size() < 3 || toks[1] != "=" || toks[0].size() < 2 || toks[0][0] != 'g')
      p.fail("expected 'g<k> = AND|XOR|ONE ...', got '" + toks[0] + "'");
    const std::uint32_t k = p.number(std::string_view(toks[0]).substr(1), "gate name");
    if (k != gates.size() + 1)
      p.fail("gate " + toks[0] + " out of order, expected g" + std::to_string(gates.size() + 1));
    Gate g;
    const std::string& op = toks[2];
    if (op == "AND") {
      g.op = GateOp::And;
      if (toks.size() != 5) p.fail("AND takes exactly 2 operands, got " + std::to_string(toks.size() - 3));
    } else if (op == "XOR") {
      g.op = GateOp::Xor;
      if (toks.size() < 4) p.fail("XOR needs at least 1 operand");
    } else if (op == "ONE") {
      g.op = GateOp::One;
      if (toks.size() != 3) p.fail("ONE takes no operands");
    } else {
      p.fail("unknown gate type '" + op + "'");
    }
    for (std::size_t i = 3; i < toks.size(); ++i) g.operands.push_back(p.wire(toks[i], n, gates.size()));
    gates.push_back(std::move(g));
  }
  ++p.line_no;
  if (n < 0) p.fail("missing 'circuit <n>' header");
  if (!outputs) p.fail("missing 'outputs' line");
  try {
    return Circuit(n, std::move(gates), std::move(*outputs), std::move(partition));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "circuit " << c.inputs() << '\n';
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    out << 'g' << k + 1 << " = ";
    switch (g.op) {
      case GateOp::And: out << "AND"; break;
      case GateOp::Xor: out << "XOR"; break;
      case GateOp::One: out << "ONE"; break;
    }
    for (const Wire& w : g.operands) out << ' ' << w.name();
    out << '\n';
  }
  if (c.partition()) {
    auto side = [&](const std::vector<std::uint32_t>& ids) {
      std::string s;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ids[i] + 1);
      }
      return s;
    };
    out << "partition " << side(c.partition()->left) << " | " << side(c.partition()->right) << '\n';
  }
  out << "outputs";
  for (const Wire& w : c.outputs()) out << ' ' << w.name();
  out << '\n';
  return out.str();
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

}  // namespace nlmc
