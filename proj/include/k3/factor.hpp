#pragma once

#include <vector>

#include "k3/poly.hpp"

namespace k3::poly {

/// Monic irreducible factors over Q of a squarefree polynomial of positive
/// degree, sorted by (degree, coefficients). Uses modular factorization with
/// a single prime exceeding twice the Mignotte bound, then exact
/// recombination, so no Hensel lifting is needed.
std::vector<RatPoly> factor_squarefree(const RatPoly& p);

}  // namespace k3::poly
