#pragma once

#include <vector>

#include "k3/lattice.hpp"

namespace k3::nikulin {

/// H^2 of a K3 surface as U+U+U+E8(-1)+E8(-1) (coordinates in that block
/// order) with the involution swapping the two E8(-1) blocks.
struct K3CohomologyModel {
  lattice::Lattice lattice;
  lattice::Isometry swap;
};

K3CohomologyModel build_model();

/// Result of certifying the invariant and anti-invariant sublattices by
/// explicit witness matrices.
struct InvariantLatticeReport {
  bool fixed_ok = false;
  bool antifixed_ok = false;
  std::size_t fixed_rank = 0;
  std::size_t antifixed_rank = 0;
  /// Witness M with M^T gram(computed fixed part) M = gram(U^3 + E8(-2)).
  IntMatrix fixed_witness;
  /// Witness with M^T gram(computed antifixed part) M = gram(E8(-2)).
  IntMatrix antifixed_witness;
};

InvariantLatticeReport verify_invariant_lattices(const K3CohomologyModel& model);

/// Topological fixed-point balance e_X + t + 2 + 2k = 2 e_Y.
struct EulerBalance {
  long e_x = 0;
  long t = 0;
  long k = 0;
  long e_y = 0;
  bool holds() const { return e_x + t + 2 + 2 * k == 2 * e_y; }
};

/// Solves for e_Y. NonIntegralBalance when the left side is odd.
long euler_balance_solve(long e_x, long t, long k);

struct NsTraceDecomposition {
  long r = 0;
  long ns_trace = 0;
  long tr_trace = 0;
  long total = 0;
};

/// Splits the trace 6 between NS(X) and the transcendental part for
/// 9 <= rho <= 20; RankOutOfRange otherwise.
NsTraceDecomposition ns_trace_decomposition(long rho);

enum class EvenSetBranch { Trivial, NikulinQuotientK3, KummerOfAbelian };

/// ForbiddenEvenSet unless k is 0, 8 or 16.
EvenSetBranch even_set_branch(long k);
const char* to_string(EvenSetBranch b);

}  // namespace k3::nikulin
