#include <set>

#include "doctest.h"
#include "k3/error.hpp"
#include "k3/linalg.hpp"
#include "k3/nsclass.hpp"

using namespace k3;
using namespace k3::nsclass;

namespace {

long e8_norm(const std::vector<Integer>& x) {
  // Cartan form written out: 2 sum x_i^2 - 2 sum_{edges} x_a x_b.
  static const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  long q = 0;
  for (const auto& c : x) q += 2 * c.get_si() * c.get_si();
  for (const auto& e : edges) q -= 2 * x[e[0]].get_si() * x[e[1]].get_si();
  return q;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("Lambda_2d invariants") {
  auto l1 = lattice::invariants(lambda_2d(1));
  CHECK(abs(l1.det) == 512);
  CHECK(l1.even);
  CHECK(l1.rank == 9);
  auto l3 = lattice::invariants(lambda_2d(3));
  CHECK(abs(l3.det) == 1536);
  CHECK(l3.signature == lattice::Signature{1, 8});
  CHECK(code_of([] { lambda_2d(0); }) == ErrorCode::BadPolarization);
  CHECK(code_of([] { lambda_2d(-2); }) == ErrorCode::BadPolarization);
}

TEST_CASE("E8 shells match the theta series 1 + 240q + 2160q^2 + 6720q^3") {
  for (auto [norm, count] : {std::pair{2L, 240UL}, {4L, 2160UL}, {6L, 6720UL}}) {
    auto vs = e8_vectors_of_norm(norm);
    CHECK(vs.size() == count);
    std::set<std::vector<Integer>> unique(vs.begin(), vs.end());
    CHECK(unique.size() == vs.size());
    for (const auto& v : vs) CHECK(e8_norm(v) == norm);
    CHECK(std::is_sorted(vs.begin(), vs.end()));
  }
  CHECK(e8_vectors_of_norm(0).size() == 1);
}

TEST_CASE("candidate counts follow the congruence of 2d mod 4") {
  CHECK(ns_candidates(1).candidates.size() == 1);
  CHECK(ns_candidates(2).candidates.size() == 2);
  CHECK(ns_candidates(3).candidates.size() == 1);
  CHECK_FALSE(ns_candidates(3).glue_vector.has_value());
  CHECK(ns_candidates(4).glue_vector.has_value());
}

TEST_CASE("glue for d = 2 has v^2 = -4 and an isotropic (L+v)/2") {
  auto ext = find_glue_and_extend(2);
  CHECK(ext.glue_square == -4);
  CHECK(ext.overlattice.gram()(0, 0) == 0);
  CHECK(e8_norm(ext.glue) == 2);
}

TEST_CASE("glue for d = 4 has v^2 = -8 and an isotropic (L+v)/2") {
  auto ext = find_glue_and_extend(4);
  CHECK(ext.glue_square == -8);
  CHECK(ext.overlattice.gram()(0, 0) == 0);
}

TEST_CASE("odd or nonpositive d is rejected for glue search") {
  CHECK(code_of([] { find_glue_and_extend(3); }) == ErrorCode::BadPolarization);
  CHECK(code_of([] { find_glue_and_extend(0); }) == ErrorCode::BadPolarization);
}

TEST_CASE("sweep of even d: glue bound, evenness, index, determinant, primitivity") {
  for (long d = 2; d <= 24; d += 2) {
    CAPTURE(d);
    auto ext = find_glue_and_extend(d);
    CHECK(abs(ext.glue_square) <= 2 * d);
    CHECK(((ext.glue_square + 2 * d) % 8) == 0);
    auto inv = lattice::invariants(ext.overlattice);
    CHECK(inv.even);
    CHECK(abs(inv.det) * 4 == abs(linalg::determinant(lambda_2d(d).gram())));
    CHECK(abs(inv.det) == 128 * d);
    CHECK(ext.index == 2);
    CHECK(abs(linalg::determinant(ext.basis_in_lambda)) == Rational(1, 2));
    // Lambda_2d sits integrally inside: L = 2 E_1 - v.
    CHECK(ext.lambda_in_overlattice(0, 0) == 2);
    // E_1 pairs integrally with every E8(-2) root.
    for (std::size_t i = 1; i < 9; ++i) CHECK(ext.overlattice.gram()(0, i) == ext.overlattice.gram()(i, 0));
    CHECK(verify_primitive(e8_in_overlattice(ext), ext.overlattice));
  }
}

TEST_CASE("evenness of the glued Gram is equivalent to the mod-8 congruence") {
  auto roots = e8_vectors_of_norm(2);
  auto norm4 = e8_vectors_of_norm(4);
  for (long d = 1; d <= 12; ++d) {
    for (const auto* shell : {&roots, &norm4}) {
      const auto& v = shell->front();
      const long vsq = -2 * e8_norm(v);
      RatMatrix g = glue_gram(d, v);
      auto gi = to_integer(g);
      const bool congruent = ((vsq + 2 * d) % 8) == 0;
      bool even = gi.has_value();
      if (gi)
        for (std::size_t i = 0; i < 9; ++i) even = even && mpz_even_p((*gi)(i, i).get_mpz_t());
      CHECK(even == congruent);
      // Off-diagonal pairings with the roots are always integral.
      for (std::size_t i = 1; i < 9; ++i) CHECK(g(0, i).get_den() == 1);
    }
  }
}

TEST_CASE("verify_primitive") {
  lattice::Lattice e8m2 = lattice::twist(lattice::standard_lattice(lattice::StandardName::E8), -2);
  CHECK_FALSE(verify_primitive(lattice::Sublattice(e8m2, IntMatrix::identity(8).scaled(Integer(2))), e8m2));
  CHECK(verify_primitive(lattice::Sublattice(e8m2, IntMatrix::identity(8)), e8m2));
  auto ext = find_glue_and_extend(2);
  CHECK(code_of([&] { verify_primitive(lattice::Sublattice(e8m2, IntMatrix::identity(8)), ext.overlattice); }) ==
        ErrorCode::BadSublattice);
}
