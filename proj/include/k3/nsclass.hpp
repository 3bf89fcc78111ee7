#pragma once

#include <optional>
#include <vector>

#include "k3/lattice.hpp"

namespace k3::nsclass {

/// Z L + E8(-2) with L^2 = 2d; coordinate 0 is L, 1..8 the E8(-2) root basis.
/// BadPolarization unless d >= 1.
lattice::Lattice lambda_2d(long d);

/// All x in Z^8 (E8 root-basis coordinates) with x^T C x == norm, where C is
/// the E8 Cartan matrix, in lexicographic order. Exhaustive ellipsoid
/// enumeration over an exact rational LDL^T of C.
std::vector<std::vector<Integer>> e8_vectors_of_norm(long norm);

/// Gram over Q of the basis {(L+v)/2, r_1..r_8} for a glue vector v given in
/// root-basis coordinates.
RatMatrix glue_gram(long d, const std::vector<Integer>& glue);

struct GlueExtension {
  std::vector<Integer> glue;     // root-basis coordinates of v
  Integer glue_square;           // v^2 in E8(-2), i.e. -2 * (E8 norm)
  lattice::Lattice overlattice;  // Gram on {(L+v)/2, r_1..r_8}
  /// Rows of the overlattice basis in Lambda_2d coordinates.
  RatMatrix basis_in_lambda;
  /// Lambda_2d basis written in overlattice coordinates (integral).
  IntMatrix lambda_in_overlattice;
  Integer index;                 // [overlattice : Lambda_2d]
};

/// Picks v with v^2 = -2d (mod 8), minimal |v^2|, not in 2 E8(-2), first in
/// lexicographic order, searching |v^2| <= 2d. d must be even and positive
/// (BadPolarization); GlueNotFound if the search is exhausted.
GlueExtension find_glue_and_extend(long d);

/// The E8(-2) root span inside the overlattice coordinates.
lattice::Sublattice e8_in_overlattice(const GlueExtension& ext);

struct NSCandidateSet {
  long d = 0;
  std::vector<lattice::Lattice> candidates;
  std::optional<std::vector<Integer>> glue_vector;
};

/// One candidate when 2d = 2 (mod 4), two when 2d = 0 (mod 4).
NSCandidateSet ns_candidates(long d);

/// True iff sub is saturated in over. BadSublattice if sub lives elsewhere.
bool verify_primitive(const lattice::Sublattice& sub, const lattice::Lattice& over);

}  // namespace k3::nsclass
