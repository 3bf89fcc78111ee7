#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "k3/poly.hpp"

namespace k3::elliptic {

/// y^2 = x(x^2 + a(t) x + b(t)).
struct WeierstrassModel {
  RatPoly a;
  RatPoly b;
  bool operator==(const WeierstrassModel&) const = default;
};

struct PolyCore {
  RatPoly gcd;
  RatPoly squarefree_part;  // of p
  RatPoly derivative;       // of p
  Rational resultant;
};
PolyCore poly_core(const RatPoly& p, const RatPoly& q);

/// a^2 - 4b, the I1 locus.
RatPoly i1_locus(const WeierstrassModel& w);
/// 16 b^2 (a^2 - 4b).
RatPoly discriminant(const WeierstrassModel& w);

enum class GenericityFailure {
  None,
  DegreeA,
  DegreeB,
  DegreeI1,
  SharedRoots,
  BNotSquarefree,
  I1NotSquarefree,
  ZeroConstant,
};

struct GenericityResult {
  GenericityFailure failure = GenericityFailure::None;
  std::string reason;
  bool ok() const noexcept { return failure == GenericityFailure::None; }
};

/// Conditions in order: deg a <= 4, deg b = 8, deg(a^2-4b) = 8,
/// gcd(b, a^2-4b) = 1, b squarefree, a^2-4b squarefree, nonzero constant
/// terms. Reports the first failure.
GenericityResult genericity_check(const WeierstrassModel& w);
/// Throws NonGeneric with the failure reason.
void require_generic(const WeierstrassModel& w);

enum class Kodaira { I1, I2 };
inline long components(Kodaira k) { return k == Kodaira::I1 ? 1 : 2; }
inline long euler_number(Kodaira k) { return components(k); }
const char* to_string(Kodaira k);

struct FiberEntry {
  RatPoly factor;  // monic irreducible over Q
  Kodaira kodaira;
  std::size_t root_count;
};

struct ShiodaTate {
  long rho = 0;
  long dim_t = 0;
};
/// rho = 2 + sum (m_v - 1) * root_count + mw_rank, dim T = 22 - rho.
ShiodaTate shioda_tate(const std::vector<FiberEntry>& entries, long mw_rank);

struct FiberTable {
  std::vector<FiberEntry> entries;
  long euler_sum = 0;
  long rho = 0;
  long dim_t = 0;
  std::size_t root_count(Kodaira k) const;
  std::vector<RatPoly> factors(Kodaira k) const;
};
/// I2 fibers over the factors of b, I1 over the factors of a^2 - 4b.
FiberTable fiber_table(const WeierstrassModel& w, long mw_rank = 0);

/// 2-isogeny quotient by (0,0): a' = -2a, b' = a^2 - 4b. No genericity check.
WeierstrassModel quotient_coefficients(const WeierstrassModel& w);
/// quotient_coefficients on a model that must pass genericity_check.
WeierstrassModel quotient_model(const WeierstrassModel& w);

/// Model obtained by substituting (x, y) -> (u^2 x, u^3 y): a / u^2, b / u^4.
WeierstrassModel rescale(const WeierstrassModel& w, const Rational& u);

/// Same multiset of polynomials up to nonzero scalars.
bool same_factor_sets(std::vector<RatPoly> lhs, std::vector<RatPoly> rhs);

/// Draws small-integer models until one passes genericity_check.
WeierstrassModel random_generic_model(std::mt19937_64& rng, long coeff_bound = 5);

}  // namespace k3::elliptic
