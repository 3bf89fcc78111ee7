#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "k3/matrix.hpp"

namespace k3::lattice {

/// Nondegenerate integral symmetric bilinear form on Z^rank.
class Lattice {
 public:
  /// Throws BadGram for a non-square or non-symmetric matrix and
  /// DegenerateForm when the determinant vanishes.
  explicit Lattice(IntMatrix gram);

  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  Integer pair(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  bool operator==(const Lattice& other) const { return gram_ == other.gram_; }

 private:
  IntMatrix gram_;
};

enum class StandardName { U, E8, E8Minus1, Rank1 };

/// `two_d` is only read for Rank1 and must be a nonzero even integer.
Lattice standard_lattice(StandardName name, long two_d = 0);
/// Accepts "U", "E8", "E8_MINUS_1", "RANK1(<2d>)"; anything else is UnknownLattice.
Lattice standard_lattice(std::string_view name);

Lattice twist(const Lattice& l, const Integer& m);
Lattice direct_sum(const Lattice& a, const Lattice& b);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool operator==(const Signature&) const = default;
};

struct Invariants {
  Integer det;
  std::size_t rank = 0;
  Signature signature;
  bool even = false;
  bool unimodular = false;
};

/// det by Bareiss elimination; signature by Sturm counting on the
/// characteristic polynomial (every root is real since the Gram is symmetric).
Invariants invariants(const Lattice& l);

/// Invariant factors > 1 of the Smith form of the Gram; product is |det|.
struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;
  Integer order() const;
};

DiscriminantGroup discriminant_group(const Lattice& l);

/// Row span of an integer basis inside an ambient lattice. Rows are ambient
/// coordinates and must be linearly independent.
class Sublattice {
 public:
  Sublattice(Lattice ambient, IntMatrix basis);

  const Lattice& ambient() const noexcept { return ambient_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool saturated() const noexcept { return saturated_; }

  /// B G B^T, computed on demand.
  IntMatrix induced_gram() const;
  /// Throws DegenerateForm when the restricted form is degenerate.
  Lattice induced_lattice() const;

  /// Same ambient and the same row span (rank equal, mutual containment).
  bool same_span(const Sublattice& other) const;
  bool contains(const std::vector<Integer>& ambient_vector) const;

 private:
  Lattice ambient_;
  IntMatrix basis_;
  bool saturated_ = false;
};

/// Form-preserving automorphism: M^T G M = G and det M = +-1. The matrix acts
/// on column vectors.
class Isometry {
 public:
  /// NotIsometry when either condition fails; RankMismatch on size mismatch.
  Isometry(IntMatrix matrix, Lattice domain);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const Lattice& domain() const noexcept { return domain_; }
  Integer trace() const { return matrix_.trace(); }

 private:
  IntMatrix matrix_;
  Lattice domain_;
};

/// Integer kernel of the pairing with S. BadSublattice if S lives elsewhere.
Sublattice orthogonal_complement(const Lattice& l, const Sublattice& s);

/// Smallest saturated sublattice containing S.
Sublattice saturate(const Sublattice& s);
/// [saturate(S) : S], the product of the basis invariant factors.
Integer saturation_index(const Sublattice& s);

/// Kernels of (iota - 1) and (iota + 1). NotInvolution unless iota^2 = 1.
std::pair<Sublattice, Sublattice> fixed_and_antifixed(const Lattice& l, const Isometry& iota);

/// M^T gram(L2) M == gram(L1) and |det M| == 1. RankMismatch on size mismatch.
bool verify_isometry(const IntMatrix& m, const Lattice& l1, const Lattice& l2);

/// Lattice literal: {"rank": n, "gram": [[...], ...]}.
nlohmann::json to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);

}  // namespace k3::lattice
