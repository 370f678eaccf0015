#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nlmc/bitvec.hpp"
#include "nlmc/boolfn.hpp"
#include "nlmc/circuit.hpp"
#include "nlmc/codes.hpp"
#include "nlmc/limits.hpp"

namespace nlmc {

/// Vector i marks the AND gates (in circuit order) with a directed path to
/// output i. Defined for every circuit.
std::vector<BitVec> reachability_vectors(const Circuit& c);

/// Vector i holds the coefficients of the AND gates in output i written as
/// an XOR of AND gates plus an affine part. Requires a circuit in which no
/// AND gate feeds another (otherwise throws ValidationError). Equal to the
/// reachability vectors unless XOR gates cancel a path.
std::vector<BitVec> coefficient_vectors(const Circuit& c);

struct ExtractedCode {
  GeneratorMatrix code;      // m x s, rows are the per-output vectors
  std::size_t rank = 0;
  bool degenerate = false;   // rank < m
  bool cancellation = false; // coefficient and reachability vectors differ
};

/// The linear code spanned by the outputs' AND-gate vectors. Rejects
/// circuits that are not sigma-pi-sigma, naming the offending gate.
ExtractedCode extract_code(const Circuit& c);

struct CertReport {
  int n = 0;
  int m = 0;
  std::size_t s = 0;
  std::int64_t measured_nl = 0;
  int M = 0;
  GeneratorMatrix code;
  std::size_t code_rank = 0;
  std::size_t code_distance = 0;
  bool theorem_holds = false;
  std::vector<std::string> notes;
};

/// Truth table, vector nonlinearity, M = mc_lower_from_nl, extracted code
/// and its distance; theorem_holds = (distance >= M).
CertReport certify(const Circuit& c, const Limits& limits = {});

/// Nonlinearity of a single-output function of degree <= 2 via the rank 2u
/// of its quadratic form: 2^(n-1) - 2^(n-u-1).
std::int64_t quadratic_nl_rank(const BooleanFunction& f, const Limits& limits = {});

}  // namespace nlmc
