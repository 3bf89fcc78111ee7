#include "k3/nikulin.hpp"

#include "k3/error.hpp"
#include "k3/linalg.hpp"

namespace k3::nikulin {

using lattice::Isometry;
using lattice::Lattice;
using lattice::StandardName;
using lattice::Sublattice;

namespace {

constexpr std::size_t kRank = 22;
constexpr std::size_t kFirstE8 = 6;
constexpr std::size_t kSecondE8 = 14;

Lattice k3_lattice() {
  Lattice u = lattice::standard_lattice(StandardName::U);
  Lattice e8m1 = lattice::standard_lattice(StandardName::E8Minus1);
  Lattice l = lattice::direct_sum(lattice::direct_sum(u, u), u);
  return lattice::direct_sum(lattice::direct_sum(l, e8m1), e8m1);
}

IntMatrix swap_matrix() {
  IntMatrix m(kRank, kRank);
  for (std::size_t i = 0; i < kFirstE8; ++i) m(i, i) = 1;
  for (std::size_t i = 0; i < 8; ++i) {
    m(kFirstE8 + i, kSecondE8 + i) = 1;
    m(kSecondE8 + i, kFirstE8 + i) = 1;
  }
  return m;
}

// Certifies that `computed` and `explicit_basis` span the same lattice and
// returns the witness C^T, where explicit_basis = C * computed.basis().
std::optional<IntMatrix> witness(const Sublattice& computed, const IntMatrix& explicit_basis, const Lattice& target) {
  if (computed.rank() != explicit_basis.rows()) return std::nullopt;
  auto coeffs = linalg::express_in_basis(to_rational(explicit_basis), to_rational(computed.basis()));
  if (!coeffs) return std::nullopt;
  auto c = to_integer(*coeffs);
  if (!c) return std::nullopt;
  IntMatrix m = c->transpose();
  if (!lattice::verify_isometry(m, target, computed.induced_lattice())) return std::nullopt;
  return m;
}

}  // namespace

K3CohomologyModel build_model() {
  Lattice l = k3_lattice();
  Isometry swap(swap_matrix(), l);
  return {std::move(l), std::move(swap)};
}

InvariantLatticeReport verify_invariant_lattices(const K3CohomologyModel& model) {
  auto [fixed, anti] = lattice::fixed_and_antifixed(model.lattice, model.swap);
  InvariantLatticeReport report;
  report.fixed_rank = fixed.rank();
  report.antifixed_rank = anti.rank();

  Lattice u = lattice::standard_lattice(StandardName::U);
  Lattice e8m2 = lattice::twist(lattice::standard_lattice(StandardName::E8), -2);
  Lattice fixed_target = lattice::direct_sum(lattice::direct_sum(lattice::direct_sum(u, u), u), e8m2);

  // U^3 coordinates plus the diagonal {(x, x)} in root-basis order.
  IntMatrix diagonal(14, kRank);
  for (std::size_t i = 0; i < kFirstE8; ++i) diagonal(i, i) = 1;
  for (std::size_t i = 0; i < 8; ++i) {
    diagonal(kFirstE8 + i, kFirstE8 + i) = 1;
    diagonal(kFirstE8 + i, kSecondE8 + i) = 1;
  }
  IntMatrix antidiagonal(8, kRank);
  for (std::size_t i = 0; i < 8; ++i) {
    antidiagonal(i, kFirstE8 + i) = 1;
    antidiagonal(i, kSecondE8 + i) = -1;
  }

  if (auto m = witness(fixed, diagonal, fixed_target)) {
    report.fixed_ok = fixed.saturated();
    report.fixed_witness = std::move(*m);
  }
  if (auto m = witness(anti, antidiagonal, e8m2)) {
    report.antifixed_ok = anti.saturated();
    report.antifixed_witness = std::move(*m);
  }
  return report;
}

long euler_balance_solve(long e_x, long t, long k) {
  if (k < 0) throw Error(ErrorCode::BadInput, "fixed point count must be nonnegative");
  const long total = e_x + t + 2 + 2 * k;
  if (total % 2 != 0)
    throw Error(ErrorCode::NonIntegralBalance, "e_X + t + 2 + 2k = " + std::to_string(total) + " is odd");
  return total / 2;
}

NsTraceDecomposition ns_trace_decomposition(long rho) {
  if (rho < 9 || rho > 20)
    throw Error(ErrorCode::RankOutOfRange, "rho = " + std::to_string(rho) + " outside [9, 20]");
  NsTraceDecomposition d;
  d.r = rho - 8;
  d.ns_trace = rho - 16;
  d.tr_trace = 22 - rho;
  d.total = d.ns_trace + d.tr_trace;
  return d;
}

EvenSetBranch even_set_branch(long k) {
  switch (k) {
    case 0: return EvenSetBranch::Trivial;
    case 8: return EvenSetBranch::NikulinQuotientK3;
    case 16: return EvenSetBranch::KummerOfAbelian;
    default:
      throw Error(ErrorCode::ForbiddenEvenSet, "an even set has 0, 8 or 16 curves, not " + std::to_string(k));
  }
}

const char* to_string(EvenSetBranch b) {
  switch (b) {
    case EvenSetBranch::Trivial: return "Trivial";
    case EvenSetBranch::NikulinQuotientK3: return "NikulinQuotientK3";
    case EvenSetBranch::KummerOfAbelian: return "KummerOfAbelian";
  }
  return "?";
}

}  // namespace k3::nikulin
