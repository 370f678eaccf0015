#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlmc/analysis.hpp"
#include "nlmc/boolfn.hpp"
#include "nlmc/circuit.hpp"
#include "nlmc/codes.hpp"
#include "nlmc/error.hpp"
#include "nlmc/families.hpp"
#include "nlmc/oracle.hpp"
#include "nlmc/synth.hpp"

namespace nlmc::cli {
namespace {

using json = nlohmann::ordered_json;

std::uint64_t parse_u64(std::string_view text, int base, const std::string& what) {
  if (base == 16 && (text.starts_with("0x") || text.starts_with("0X"))) text.remove_prefix(2);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ValidationError("invalid " + what + ": '" + std::string(text) + "'");
  return v;
}

int parse_int(std::string_view text, const std::string& what) {
  const std::uint64_t v = parse_u64(text, 10, what);
  if (v > 1'000'000) throw ValidationError(what + " too large: " + std::string(text));
  return static_cast<int>(v);
}

Limits limits_from_env() {
  Limits l;
  auto read = [](const char* name, auto& field) {
    if (const char* v = std::getenv(name)) {
      const std::uint64_t parsed = parse_u64(v, 10, std::string("value of ") + name);
      field = static_cast<std::remove_reference_t<decltype(field)>>(parsed);
    }
  };
  read("NLMC_MAX_SCALAR_N", l.max_scalar_n);
  read("NLMC_MAX_VECTOR_N", l.max_vector_n);
  read("NLMC_MAX_VECTOR_M", l.max_vector_m);
  read("NLMC_VECTOR_COST_CAP", l.vector_cost_cap);
  read("NLMC_MAX_TT_N", l.max_truth_table_n);
  read("NLMC_MAX_CODE_DIM", l.max_code_dimension);
  read("NLMC_NODE_CAP", l.node_cap);
  return l;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

// Builtin family ("ip:2", "gold:5:1", ...) or a truth-table file.
BooleanFunction load_function(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts.empty() ? spec : parts[0];
  auto arg = [&](std::size_t i) { return parse_int(parts.at(i), kind + " argument"); };
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) throw ValidationError("malformed builtin '" + spec + "'");
  };
  if (kind == "ip") {
    arity(2, 2);
    return inner_product_fn(arg(1));
  }
  if (kind == "gold") {
    arity(3, 3);
    return gold_fn(GoldSpec::make(arg(1), arg(2)));
  }
  if (kind == "fieldmult") {
    arity(2, 3);
    const int n = arg(1);
    return parts.size() == 3 ? field_mult_fn(n, FieldSpec::parse(parts[2])) : field_mult_fn(n);
  }
  if (kind == "exprod") {
    arity(2, 2);
    return excluded_products_fn(arg(1));
  }
  if (kind == "indicator") {
    arity(3, 3);
    return indicator_fn(parse_u64(parts[2], 10, "indicator point"), arg(1));
  }
  return read_tt_file(spec);
}

json code_rows(const GeneratorMatrix& g) {
  json rows = json::array();
  for (const BitVec& r : g.rows()) rows.push_back(r.to_string());
  return rows;
}

class Runner {
 public:
  Runner(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

  void emit(const json& j) {
    if (json_) {
      out_ << j.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : j.items()) {
      out_ << key << ": ";
      if (value.is_string())
        out_ << value.get<std::string>();
      else if (value.is_array()) {
        bool first = true;
        for (const auto& v : value) {
          out_ << (first ? "" : "; ") << (v.is_string() ? v.get<std::string>() : v.dump());
          first = false;
        }
      } else
        out_ << value.dump();
      out_ << '\n';
    }
  }

  void emit_circuit(const json& plan, const Circuit& c) {
    const AndMetrics metrics = and_metrics(c);
    if (json_) {
      json j;
      j["plan"] = plan;
      j["and_count"] = metrics.and_count;
      j["and_depth"] = metrics.and_depth;
      j["circuit"] = serialize(c);
      out_ << j.dump(2) << '\n';
      return;
    }
    std::istringstream header(plan.dump(2));
    for (std::string line; std::getline(header, line);) out_ << "# " << line << '\n';
    out_ << serialize(c);
  }

  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool json_;
};

json fn_report(const BooleanFunction& f, const Limits& limits) {
  json j;
  j["n"] = f.inputs();
  j["m"] = f.outputs();
  if (f.outputs() == 1) j["nl"] = nonlinearity(f, limits);
  const NlClassification cls = classify_nl(f, limits);
  j["vector_nl"] = cls.nl;
  j["degree"] = degree(f);
  j["anf_size"] = anf_from_tt(f).size();
  j["classification"] = std::string(to_string(cls.kind));
  return j;
}

json classification_report(const Circuit& c) {
  const CircuitClassification cls = classify_circuit(c);
  json j;
  j["n"] = c.inputs();
  j["m"] = c.outputs_count();
  j["gates"] = c.gates().size();
  j["and_count"] = cls.and_count;
  j["and_depth"] = cls.and_depth;
  j["sigma_pi_sigma"] = cls.is_sigma_pi_sigma;
  j["quadratic"] = cls.is_quadratic;
  j["bilinear"] = cls.is_bilinear;
  j["offending_gate"] = cls.offending_gate ? json("g" + std::to_string(*cls.offending_gate + 1)) : json(nullptr);
  return j;
}

json cert_report(const CertReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["s"] = r.s;
  j["measured_nl"] = r.measured_nl;
  j["M"] = r.M;
  j["code_rank"] = r.code_rank;
  j["code_distance"] = r.code_distance;
  j["theorem_holds"] = r.theorem_holds;
  j["notes"] = r.notes;
  return j;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Nonlinearity and multiplicative complexity toolkit", "nlmc"};
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Random seed");
  app.fallthrough();

  std::function<void(Runner&, const Limits&)> action;
  std::vector<std::string> pos;
  auto positional = [&](CLI::App* cmd, const char* name, const char* help) {
    cmd->add_option(name, pos, help)->required();
  };

  // fn
  auto* fn = app.add_subcommand("fn", "Boolean function analysis")->require_subcommand(1);
  auto* fn_analyze = fn->add_subcommand("analyze", "NL, vector NL, degree, ANF size, classification");
  positional(fn_analyze, "function", "Truth-table file or builtin (ip:k, gold:n:i, fieldmult:n, exprod:n, indicator:n:z)");
  fn_analyze->callback([&] {
    action = [&](Runner& r, const Limits& l) { r.emit(fn_report(load_function(pos.at(0)), l)); };
  });

  // synth
  auto* synth = app.add_subcommand("synth", "Circuit constructions")->require_subcommand(1);
  auto* s_mono = synth->add_subcommand("monomials", "All monomials of degree >= 2");
  positional(s_mono, "n", "Number of inputs");
  s_mono->callback([&] {
    action = [&](Runner& r, const Limits&) {
      const int n = parse_int(pos.at(0), "n");
      r.emit_circuit(json{{"construction", "monomials"}, {"n", n}}, synth_monomial_bank(n));
    };
  });
  auto* s_ind = synth->add_subcommand("indicators", "All 2^n indicator functions");
  positional(s_ind, "n", "Number of inputs");
  s_ind->callback([&] {
    action = [&](Runner& r, const Limits&) {
      const int n = parse_int(pos.at(0), "n");
      r.emit_circuit(json{{"construction", "indicators"}, {"n", n}}, synth_indicators(n));
    };
  });
  std::optional<int> split_k;
  auto* s_uni = synth->add_subcommand("universal", "Indicator-bank circuit for any function");
  positional(s_uni, "function", "Truth-table file or builtin");
  s_uni->add_option("-k,--split", split_k, "Split parameter k");
  s_uni->callback([&] {
    action = [&](Runner& r, const Limits&) {
      const UniversalCircuit u = synth_universal(load_function(pos.at(0)), split_k);
      json plan{{"construction", "universal"},
                {"n", u.plan.n},
                {"m", u.plan.m},
                {"k", u.plan.k},
                {"predicted_and_count", u.plan.predicted_and_count}};
      r.emit_circuit(plan, u.circuit);
    };
  });
  auto* s_ex = synth->add_subcommand("exprod", "Excluded products with 3n-6 AND gates");
  positional(s_ex, "n", "Number of inputs");
  s_ex->callback([&] {
    action = [&](Runner& r, const Limits&) {
      const int n = parse_int(pos.at(0), "n");
      r.emit_circuit(json{{"construction", "exprod"}, {"n", n}}, synth_excluded_products(n));
    };
  });
  std::string code_file;
  std::optional<int> code_distance;
  auto* s_bil = synth->add_subcommand("bilinear", "Random bilinear circuit over a linear code");
  positional(s_bil, "n", "Number of inputs (even)");
  auto* code_opt = s_bil->add_option("--code", code_file, "Generator matrix file (dimension n)");
  s_bil->add_option("--distance", code_distance, "Build a greedy GV code of this distance")->excludes(code_opt);
  s_bil->callback([&] {
    action = [&](Runner& r, const Limits&) {
      const int n = parse_int(pos.at(0), "n");
      GeneratorMatrix g;
      if (!code_file.empty())
        g = read_code_file(code_file);
      else if (code_distance)
        g = gv_code(static_cast<std::size_t>(n), static_cast<std::size_t>(*code_distance), seed);
      else
        throw ValidationError("synth bilinear needs --code or --distance");
      const Circuit c = synth_bilinear_from_code(BilinearPlan::make(n, g, seed));
      json plan{{"construction", "bilinear"}, {"n", n}, {"s", g.length()}, {"seed", seed}};
      plan["code"] = code_rows(g);
      r.emit_circuit(plan, c);
    };
  });

  // circuit
  auto* circ = app.add_subcommand("circuit", "Circuit analysis")->require_subcommand(1);
  auto* c_an = circ->add_subcommand("analyze", "Classification and AND metrics");
  positional(c_an, "file", "Circuit file");
  c_an->callback([&] {
    action = [&](Runner& r, const Limits&) { r.emit(classification_report(read_circuit_file(pos.at(0)))); };
  });
  auto* c_eval = circ->add_subcommand("eval", "Evaluate at one input");
  positional(c_eval, "args", "Circuit file and hex input (x1 = least significant bit)");
  c_eval->callback([&] {
    action = [&](Runner& r, const Limits&) {
      if (pos.size() != 2) throw ValidationError("circuit eval needs <file> <hex input>");
      const Circuit c = read_circuit_file(pos[0]);
      const BitVec y = evaluate(c, parse_u64(pos[1], 16, "hex input"));
      r.emit(json{{"input", pos[1]}, {"outputs", y.to_string()}});
    };
  });
  auto* c_tt = circ->add_subcommand("tt", "Truth table of the circuit");
  positional(c_tt, "file", "Circuit file");
  c_tt->callback([&] {
    action = [&](Runner& r, const Limits& l) {
      const BooleanFunction f = truth_table(read_circuit_file(pos.at(0)), l);
      r.raw() << format_tt(f);
    };
  });
  auto* c_cert = circ->add_subcommand("certify", "Nonlinearity-to-code certificate");
  positional(c_cert, "file", "Circuit file");
  c_cert->callback([&] {
    action = [&](Runner& r, const Limits& l) { r.emit(cert_report(certify(read_circuit_file(pos.at(0)), l))); };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Coding and complexity bounds")->require_subcommand(1);
  auto* b_gv = bounds->add_subcommand("gv", "Least length meeting the Gilbert-Varshamov condition");
  positional(b_gv, "args", "Dimension m and distance d");
  b_gv->callback([&] {
    action = [&](Runner& r, const Limits&) {
      if (pos.size() != 2) throw ValidationError("bounds gv needs <m> <d>");
      const auto m = parse_u64(pos[0], 10, "m");
      const auto d = parse_u64(pos[1], 10, "d");
      r.emit(json{{"m", m}, {"d", d}, {"min_length", gv_min_length(m, d)}});
    };
  });
  auto* b_mrrw = bounds->add_subcommand("mrrw", "Least length allowed by the MRRW rate bound");
  positional(b_mrrw, "args", "Dimension m and distance d");
  b_mrrw->callback([&] {
    action = [&](Runner& r, const Limits&) {
      if (pos.size() != 2) throw ValidationError("bounds mrrw needs <m> <d>");
      const auto m = parse_u64(pos[0], 10, "m");
      const auto d = parse_u64(pos[1], 10, "d");
      r.emit(json{{"m", m},
                  {"d", d},
                  {"min_length", mrrw_min_length(m, d)},
                  {"note", "asymptotic-bound extrapolation"}});
    };
  });
  double mrrw_u = 0;
  double mrrw_delta = 0;
  auto* b_B = bounds->add_subcommand("mrrw-B", "B(u, delta)");
  b_B->add_option("u", mrrw_u, "u")->required();
  b_B->add_option("delta", mrrw_delta, "Relative distance")->required();
  b_B->callback([&] {
    action = [&](Runner& r, const Limits&) {
      r.emit(json{{"u", mrrw_u}, {"delta", mrrw_delta}, {"B", mrrw_B(MrrwQuery::make(mrrw_u, mrrw_delta))}});
    };
  });
  auto* b_count = bounds->add_subcommand("counting", "sqrt(m 2^n) - 2n - m/2");
  positional(b_count, "args", "Inputs n and outputs m");
  b_count->callback([&] {
    action = [&](Runner& r, const Limits&) {
      if (pos.size() != 2) throw ValidationError("bounds counting needs <n> <m>");
      const int n = parse_int(pos[0], "n");
      const auto m = parse_u64(pos[1], 10, "m");
      const CountingBound b = counting_lower_bound(n, m);
      r.emit(json{{"n", n}, {"m", m}, {"bound", b.value}, {"vacuous", b.vacuous}});
    };
  });
  std::optional<std::int64_t> nl_value;
  auto* b_nlmc = bounds->add_subcommand("nl-mc", "Nonlinearity vs multiplicative complexity");
  b_nlmc->add_option("args", pos, "n [M]")->required();
  b_nlmc->add_option("--nl", nl_value, "Nonlinearity; prints the implied MC lower bound");
  b_nlmc->callback([&] {
    action = [&](Runner& r, const Limits&) {
      const int n = parse_int(pos.at(0), "n");
      if (nl_value) {
        if (pos.size() != 1) throw ValidationError("give either M or --nl, not both");
        r.emit(json{{"n", n}, {"nl", *nl_value}, {"mc_lower", mc_lower_from_nl(n, *nl_value)}});
        return;
      }
      if (pos.size() != 2) throw ValidationError("bounds nl-mc needs <n> <M> or <n> --nl <nl>");
      const int mc = parse_int(pos[1], "M");
      r.emit(json{{"n", n}, {"M", mc}, {"nl_upper", nl_upper_from_mc(n, mc)}});
    };
  });
  std::optional<std::uint64_t> trials;
  auto* b_rank = bounds->add_subcommand("rankprob", "P[rank <= d] bound for random k x k matrices");
  positional(b_rank, "args", "Matrix size k and rank d");
  b_rank->add_option("--trials", trials, "Monte Carlo trials");
  b_rank->callback([&] {
    action = [&](Runner& r, const Limits&) {
      if (pos.size() != 2) throw ValidationError("bounds rankprob needs <k> <d>");
      const int k = parse_int(pos[0], "k");
      const int d = parse_int(pos[1], "d");
      json j{{"k", k}, {"d", d}, {"bound", rank_prob_bound(k, d)}};
      if (trials) {
        const RankSample s = monte_carlo_rank(k, d, *trials, seed);
        j["trials"] = s.trials;
        j["hits"] = s.hits;
        j["frequency"] = s.frequency();
        j["seed"] = seed;
      }
      r.emit(j);
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth")->require_subcommand(1);
  auto* o_nl = oracle->add_subcommand("nl", "Nonlinearity by comparison with every affine function");
  positional(o_nl, "function", "Truth-table file or builtin");
  o_nl->callback([&] {
    action = [&](Runner& r, const Limits&) { r.emit(json{{"nl", brute_nl(load_function(pos.at(0)))}}); };
  });
  int k_max = 2;
  auto* o_mc = oracle->add_subcommand("mc", "Exact multiplicative complexity by search");
  positional(o_mc, "function", "Truth-table file or builtin");
  o_mc->add_option("--kmax", k_max, "Maximum AND gates");
  o_mc->callback([&] {
    action = [&](Runner& r, const Limits& l) {
      const McResult res = brute_mc(load_function(pos.at(0)), McSearchBudget{k_max, l.node_cap});
      r.emit(json{{"status", std::string(to_string(res.status))},
                  {"mc", res.mc ? json(*res.mc) : json(nullptr)},
                  {"k_max", k_max},
                  {"nodes", res.nodes}});
    };
  });

  // code
  auto* code = app.add_subcommand("code", "Linear codes")->require_subcommand(1);
  auto* k_dist = code->add_subcommand("distance", "Rank and minimum distance of a generator matrix");
  positional(k_dist, "file", "Generator matrix file");
  k_dist->callback([&] {
    action = [&](Runner& r, const Limits& l) {
      const GeneratorMatrix g = read_code_file(pos.at(0));
      r.emit(json{{"m", g.dimension()},
                  {"s", g.length()},
                  {"rank", rank_f2(g.rows())},
                  {"distance", span_min_distance(g.rows(), l)}});
    };
  });
  auto* k_gv = code->add_subcommand("gv", "Greedy code at the Gilbert-Varshamov length");
  positional(k_gv, "args", "Dimension m and distance d");
  k_gv->callback([&] {
    action = [&](Runner& r, const Limits&) {
      if (pos.size() != 2) throw ValidationError("code gv needs <m> <d>");
      const GeneratorMatrix g =
          gv_code(parse_u64(pos[0], 10, "m"), parse_u64(pos[1], 10, "d"), seed);
      r.raw() << format_code(g);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }
  Runner runner(out, format == "json");
  action(runner, limits_from_env());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const ParseError& e) {
    err << "error[parse]: " << e.what() << '\n';
    return 4;
  } catch (const BudgetError& e) {
    err << "error[budget]: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error[validation]: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error[validation]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nlmc::cli
