#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3/matrix.hpp"

namespace k3 {

/// Univariate polynomial over Q, coefficients ascending by degree, with no
/// trailing zeros. The zero polynomial has no coefficients and no degree.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, std::size_t degree);
  static RatPoly from_integers(const std::vector<Integer>& coeffs);
  /// Parses "c0,c1,...", each entry an integer or p/q.
  static RatPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator*(const Rational& s) const;
  bool operator==(const RatPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Quotient and remainder; DivisionByZeroPoly when the divisor is zero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  RatPoly operator/(const RatPoly& divisor) const { return divmod(divisor).first; }
  RatPoly operator%(const RatPoly& divisor) const { return divmod(divisor).second; }

  RatPoly derivative() const;
  RatPoly monic() const;
  Rational evaluate(const Rational& x) const;
  /// Scales to a primitive integer polynomial with positive leading coefficient.
  std::vector<Integer> primitive_integer() const;

  std::string to_string(char var = 't') const;
  /// Comma-separated ascending coefficients, the CLI input format.
  std::string to_csv() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

inline RatPoly operator*(const Rational& s, const RatPoly& p) { return p * s; }

namespace poly {

/// Monic gcd; gcd(0, 0) raises DivisionByZeroPoly.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// p / gcd(p, p'), made monic.
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);
/// Yun decomposition: p = c * prod f_i^i, returned as (f_i, i) with f_i monic
/// and nonconstant.
std::vector<std::pair<RatPoly, std::size_t>> squarefree_decomposition(const RatPoly& p);
/// Determinant of the Sylvester matrix.
Rational resultant(const RatPoly& p, const RatPoly& q);
bool are_associates(const RatPoly& p, const RatPoly& q);

/// Real-root counts (with multiplicity) on either side of zero, via Sturm
/// sequences of each squarefree factor. Requires p(0) != 0 and p != 0.
struct SignedRootCount {
  std::size_t positive = 0;
  std::size_t negative = 0;
};
SignedRootCount count_signed_real_roots(const RatPoly& p);

/// Number of distinct real roots of a squarefree p in (lo, hi].
std::size_t sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace poly
}  // namespace k3
