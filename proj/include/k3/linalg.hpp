#pragma once

#include <optional>
#include <vector>

#include "k3/matrix.hpp"

namespace k3::linalg {

/// Fraction-free (Bareiss) determinant. Every intermediate entry is a minor
/// of the input, so growth is bounded by Hadamard's inequality.
Integer determinant(const IntMatrix& m);

/// Bareiss elimination over the rationals; used for Sylvester matrices.
Rational determinant(const RatMatrix& m);

std::size_t rank(const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix left;   // U
  IntMatrix right;  // V
  std::vector<Integer> diagonal;  // min(rows, cols) entries, zeros last
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (as rows) of {x in Z^n : A x = 0}. The result is always saturated.
IntMatrix integer_kernel(const IntMatrix& a);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Coefficients C (rows) with targets = C * basis, or nullopt if some target
/// row is outside the rational span of the basis rows.
std::optional<RatMatrix> express_in_basis(const RatMatrix& targets, const RatMatrix& basis);

/// Characteristic polynomial det(xI - A), ascending coefficients, leading 1.
std::vector<Integer> characteristic_polynomial(const IntMatrix& a);

}  // namespace k3::linalg
