#include "k3/nsclass.hpp"

#include <algorithm>
#include <functional>

#include "k3/error.hpp"
#include "k3/linalg.hpp"

namespace k3::nsclass {

using lattice::Lattice;
using lattice::StandardName;

namespace {

const Lattice& e8() {
  static const Lattice l = lattice::standard_lattice(StandardName::E8);
  return l;
}

// q(x) = sum_i diag[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2
struct Ldl {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> mu;
};

Ldl ldl(const IntMatrix& g) {
  const std::size_t n = g.rows();
  RatMatrix a = to_rational(g);
  Ldl out{std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    out.diag[i] = a(i, i);
    if (out.diag[i] <= 0) throw std::logic_error("enumeration needs a positive definite form");
    for (std::size_t j = i + 1; j < n; ++j) out.mu[i][j] = a(i, j) / a(i, i);
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= a(i, j) * a(i, k) / a(i, i);
  }
  return out;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

void check_polarization(long d) {
  if (d < 1) throw Error(ErrorCode::BadPolarization, "need L^2 = 2d > 0, got d = " + std::to_string(d));
}

}  // namespace

Lattice lambda_2d(long d) {
  check_polarization(d);
  return lattice::direct_sum(lattice::standard_lattice(StandardName::Rank1, 2 * d), lattice::twist(e8(), -2));
}

std::vector<std::vector<Integer>> e8_vectors_of_norm(long norm) {
  std::vector<std::vector<Integer>> out;
  if (norm < 0) return out;
  const Ldl form = ldl(e8().gram());
  const std::size_t n = form.diag.size();
  std::vector<Integer> x(n);
  const Rational target(norm);

  // Fill coordinates from the last to the first; `used` is the partial sum of
  // the completed squares for indices > i.
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t i, const Rational& used) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= form.mu[i][j] * x[j];
    const Rational room = target - used;
    auto contribution = [&](const Integer& v) -> Rational {
      Rational off = Rational(v) - center;
      return form.diag[i] * off * off;
    };
    auto visit = [&](const Integer& v) {
      Rational total = used + contribution(v);
      x[i] = v;
      if (i == 0) {
        if (total == target) out.push_back(x);
      } else {
        descend(i - 1, total);
      }
    };
    const Integer start = floor_of(center);
    for (Integer v = start; contribution(v) <= room; --v) visit(v);
    for (Integer v = start + 1; contribution(v) <= room; ++v) visit(v);
  };
  descend(n - 1, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

RatMatrix glue_gram(long d, const std::vector<Integer>& glue) {
  if (glue.size() != 8) throw Error(ErrorCode::RankMismatch, "glue vector needs 8 root coordinates");
  const Lattice lam = lambda_2d(d);
  RatMatrix basis(9, 9);
  basis(0, 0) = Rational(1, 2);
  for (std::size_t i = 0; i < 8; ++i) {
    basis(0, 1 + i) = Rational(glue[i]) / 2;
    basis(1 + i, 1 + i) = 1;
  }
  return basis * to_rational(lam.gram()) * basis.transpose();
}

GlueExtension find_glue_and_extend(long d) {
  check_polarization(d);
  if (d % 2 != 0) throw Error(ErrorCode::BadPolarization, "index-2 overlattices need d even, got d = " + std::to_string(d));

  // v^2 = -2 * norm with norm the E8 norm; v^2 = -2d (mod 8) <=> norm = d (mod 4).
  for (long norm = 2; norm <= d; norm += 2) {
    if ((norm - d) % 4 != 0) continue;
    for (auto& x : e8_vectors_of_norm(norm)) {
      const bool in_twice =
          std::all_of(x.begin(), x.end(), [](const Integer& c) { return mpz_even_p(c.get_mpz_t()) != 0; });
      if (in_twice) continue;

      RatMatrix gram = glue_gram(d, x);
      auto integral = to_integer(gram);
      if (!integral) throw std::logic_error("glue congruence holds but the Gram is not integral");

      const Lattice lam = lambda_2d(d);
      RatMatrix basis(9, 9);
      basis(0, 0) = Rational(1, 2);
      for (std::size_t i = 0; i < 8; ++i) {
        basis(0, 1 + i) = Rational(x[i]) / 2;
        basis(1 + i, 1 + i) = 1;
      }
      auto coords = linalg::express_in_basis(to_rational(IntMatrix::identity(9)), basis);
      auto lam_in_over = coords ? to_integer(*coords) : std::nullopt;
      if (!lam_in_over) throw std::logic_error("Lambda_2d is not contained in the overlattice");

      Lattice over(std::move(*integral));
      Integer det_lam = linalg::determinant(lam.gram());
      Integer det_over = linalg::determinant(over.gram());
      Integer ratio = det_lam / det_over;
      Integer index;
      mpz_sqrt(index.get_mpz_t(), ratio.get_mpz_t());
      return GlueExtension{std::move(x), Integer(-2 * norm), std::move(over), std::move(basis),
                           std::move(*lam_in_over), index};
    }
  }
  throw Error(ErrorCode::GlueNotFound, "no glue vector with |v^2| <= " + std::to_string(2 * d));
}

lattice::Sublattice e8_in_overlattice(const GlueExtension& ext) {
  IntMatrix rows(8, 9);
  for (std::size_t i = 0; i < 8; ++i) rows(i, 1 + i) = 1;
  return lattice::Sublattice(ext.overlattice, std::move(rows));
}

NSCandidateSet ns_candidates(long d) {
  NSCandidateSet set;
  set.d = d;
  set.candidates.push_back(lambda_2d(d));
  if (d % 2 == 0) {
    auto ext = find_glue_and_extend(d);
    set.candidates.push_back(ext.overlattice);
    set.glue_vector = ext.glue;
  }
  return set;
}

bool verify_primitive(const lattice::Sublattice& sub, const Lattice& over) {
  if (!(sub.ambient() == over)) throw Error(ErrorCode::BadSublattice, "sublattice is not inside the given lattice");
  return lattice::saturate(sub).same_span(sub);
}

}  // namespace k3::nsclass
