#include <random>

#include "doctest.h"
#include "k3/error.hpp"
#include "k3/lattice.hpp"
#include "k3/linalg.hpp"
#include "oracles.hpp"

using namespace k3;
using namespace k3::lattice;

namespace {

Lattice U() { return standard_lattice(StandardName::U); }
Lattice E8() { return standard_lattice(StandardName::E8); }
Lattice E8m1() { return standard_lattice(StandardName::E8Minus1); }

Lattice k3_lattice() {
  Lattice l = direct_sum(direct_sum(U(), U()), U());
  return direct_sum(direct_sum(l, E8m1()), E8m1());
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

TEST_CASE("standard lattices") {
  CHECK(U().gram() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(standard_lattice("RANK1(6)").gram() == IntMatrix{{6}});
  CHECK(standard_lattice("E8_MINUS_1") == twist(E8(), -1));
  CHECK(code_of([] { standard_lattice("D4"); }) == ErrorCode::UnknownLattice);
  CHECK(code_of([] { standard_lattice(StandardName::Rank1, 0); }) == ErrorCode::DegenerateForm);

  // Bourbaki chain 1..7 with node 8 on node 5.
  const IntMatrix c = E8().gram();
  CHECK(c(4, 7) == -1);
  CHECK(c(6, 7) == 0);
  CHECK(c(0, 1) == -1);
}

TEST_CASE("E8 is even, unimodular, positive definite of rank 8") {
  auto inv = invariants(E8());
  CHECK(inv.det == 1);
  CHECK(inv.det == oracle::laplace_determinant(E8().gram()));
  CHECK(inv.rank == 8);
  CHECK(inv.signature == Signature{8, 0});
  CHECK(inv.even);
  CHECK(inv.unimodular);
}

TEST_CASE("U invariants") {
  auto inv = invariants(U());
  CHECK(inv.det == -1);
  CHECK(inv.signature == Signature{1, 1});
  CHECK(inv.even);
  CHECK(inv.unimodular);
}

TEST_CASE("twist scales the form") {
  CHECK(twist(U(), 2).gram() == IntMatrix{{0, 2}, {2, 0}});
  CHECK(twist(E8(), 1) == E8());
  CHECK(invariants(twist(E8(), -2)).det == 256);
  CHECK(code_of([] { twist(U(), 0); }) == ErrorCode::DegenerateForm);
}

TEST_CASE("E8(-2) invariants and discriminant group") {
  Lattice l = twist(E8(), -2);
  auto inv = invariants(l);
  CHECK(inv.det == 256);
  CHECK(inv.signature == Signature{0, 8});
  CHECK(inv.even);
  CHECK_FALSE(inv.unimodular);
  CHECK(discriminant_group(l).invariant_factors == std::vector<Integer>(8, Integer(2)));
  CHECK(discriminant_group(E8m1()).invariant_factors.empty());
  CHECK(discriminant_group(twist(U(), 2)).invariant_factors == std::vector<Integer>{2, 2});
}

TEST_CASE("direct sums") {
  auto uu = invariants(direct_sum(U(), U()));
  CHECK(uu.rank == 4);
  CHECK(uu.det == 1);
  auto k3 = invariants(k3_lattice());
  CHECK(k3.rank == 22);
  CHECK(k3.det == -1);
  CHECK(k3.signature == Signature{3, 19});
  CHECK(k3.even);
  CHECK(k3.unimodular);
  CHECK(direct_sum(standard_lattice("RANK1(2)"), twist(E8(), -2)).rank() == 9);
}

TEST_CASE("nondegeneracy and symmetry are enforced") {
  CHECK(code_of([] { Lattice(IntMatrix{{1, 2}, {2, 4}}); }) == ErrorCode::DegenerateForm);
  CHECK(code_of([] { Lattice(IntMatrix{{1, 2}, {3, 4}}); }) == ErrorCode::BadGram);
}

TEST_CASE("property: twist determinant law, direct-sum additivity, discriminant product") {
  std::mt19937_64 rng(21);
  std::vector<Lattice> pool{U(), E8(), E8m1(), twist(U(), 3), standard_lattice("RANK1(-4)")};
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix g = oracle::random_symmetric(rng, 1 + trial % 4, -3, 3);
    if (linalg::determinant(g) != 0) pool.emplace_back(g);
  }
  for (const auto& l : pool) {
    auto inv = invariants(l);
    auto sig = oracle::congruence_signature(l.gram());
    CHECK(sig.zero == 0);
    CHECK(inv.signature == Signature{sig.positive, sig.negative});
    CHECK(discriminant_group(l).order() == abs(inv.det));
    for (long m : {-3, -1, 2, 5}) {
      Integer expected = inv.det;
      for (std::size_t i = 0; i < l.rank(); ++i) expected *= m;
      CHECK(invariants(twist(l, m)).det == expected);
    }
  }
  for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
    const auto& a = pool[i];
    const auto& b = pool[i + 1];
    auto ia = invariants(a), ib = invariants(b), is = invariants(direct_sum(a, b));
    CHECK(is.rank == ia.rank + ib.rank);
    CHECK(is.det == ia.det * ib.det);
    CHECK(is.signature.positive == ia.signature.positive + ib.signature.positive);
    CHECK(is.signature.negative == ia.signature.negative + ib.signature.negative);
    CHECK(is.even == (ia.even && ib.even));
  }
}

TEST_CASE("orthogonal complements") {
  Lattice l = direct_sum(U(), E8m1());
  IntMatrix first_u(2, 10);
  first_u(0, 0) = 1;
  first_u(1, 1) = 1;
  Sublattice comp = orthogonal_complement(l, Sublattice(l, first_u));
  CHECK(comp.rank() == 8);
  CHECK(comp.saturated());
  // Canonical projection: the complement is exactly the E8(-1) coordinates.
  IntMatrix e8_block(8, 10);
  for (std::size_t i = 0; i < 8; ++i) e8_block(i, 2 + i) = 1;
  Sublattice expected(l, e8_block);
  CHECK(comp.same_span(expected));
  CHECK(expected.induced_gram() == E8m1().gram());

  Sublattice other(U(), IntMatrix{{1, 0}});
  CHECK(code_of([&] { orthogonal_complement(l, other); }) == ErrorCode::BadSublattice);
}

TEST_CASE("complement of L in Lambda_2d is E8(-2)") {
  Lattice lam = direct_sum(standard_lattice("RANK1(6)"), twist(E8(), -2));
  IntMatrix span_l(1, 9);
  span_l(0, 0) = 1;
  Sublattice comp = orthogonal_complement(lam, Sublattice(lam, span_l));
  IntMatrix block(8, 9);
  for (std::size_t i = 0; i < 8; ++i) block(i, 1 + i) = 1;
  CHECK(comp.same_span(Sublattice(lam, block)));
  CHECK(invariants(comp.induced_lattice()).det == 256);
}

TEST_CASE("saturation") {
  Sublattice s(U(), IntMatrix{{2, 0}});
  CHECK_FALSE(s.saturated());
  Sublattice sat = saturate(s);
  CHECK(sat.saturated());
  CHECK(sat.same_span(Sublattice(U(), IntMatrix{{1, 0}})));
  CHECK(saturation_index(s) == 2);

  Sublattice already(U(), IntMatrix{{1, 1}});
  CHECK(saturate(already).basis() == already.basis());

  Lattice k3 = k3_lattice();
  IntMatrix b(2, 22);
  b(0, 0) = 2;
  b(1, 1) = 2;
  Sublattice twice(k3, b);
  CHECK(saturation_index(twice) == 4);
  CHECK(saturate(twice).saturated());
}

TEST_CASE("property: saturate is idempotent and contains its input with the SNF index") {
  std::mt19937_64 rng(22);
  Lattice amb = direct_sum(direct_sum(U(), U()), standard_lattice("RANK1(2)"));
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix b = oracle::random_matrix(rng, 1 + trial % 3, 5, -4, 4);
    if (linalg::rank(b) != b.rows()) continue;
    Sublattice s(amb, b);
    Sublattice sat = saturate(s);
    CHECK(sat.saturated());
    CHECK(saturate(sat).basis() == sat.basis());
    for (std::size_t r = 0; r < b.rows(); ++r) CHECK(sat.contains(b.row(r)));
    // Index via Gram determinants of the two bases: det(B G B^T) = idx^2 det(S G S^T).
    Integer idx = saturation_index(s);
    IntMatrix bb = b * b.transpose();
    IntMatrix ss = sat.basis() * sat.basis().transpose();
    CHECK(linalg::determinant(bb) == idx * idx * linalg::determinant(ss));
  }
}

TEST_CASE("fixed and antifixed sublattices") {
  Lattice l = k3_lattice();
  Isometry id(IntMatrix::identity(22), l);
  auto [f1, a1] = fixed_and_antifixed(l, id);
  CHECK(f1.rank() == 22);
  CHECK(a1.rank() == 0);
  Isometry neg(IntMatrix::identity(22).scaled(Integer(-1)), l);
  auto [f2, a2] = fixed_and_antifixed(l, neg);
  CHECK(f2.rank() == 0);
  CHECK(a2.rank() == 22);

  Lattice e8e8 = direct_sum(E8m1(), E8m1());
  IntMatrix swap(16, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    swap(i, 8 + i) = 1;
    swap(8 + i, i) = 1;
  }
  Isometry sw(swap, e8e8);
  auto [fixed, anti] = fixed_and_antifixed(e8e8, sw);
  CHECK(fixed.rank() == 8);
  CHECK(anti.rank() == 8);
  CHECK(fixed.saturated());
  CHECK(anti.saturated());
  IntMatrix diag(8, 16);
  for (std::size_t i = 0; i < 8; ++i) diag(i, i) = diag(i, 8 + i) = 1;
  Sublattice diagonal(e8e8, diag);
  CHECK(fixed.same_span(diagonal));
  CHECK(diagonal.induced_gram() == twist(E8(), -2).gram());
  // Complement of the swap-fixed part carries E8(-2) too.
  auto comp = orthogonal_complement(e8e8, fixed);
  CHECK(comp.same_span(anti));
  CHECK(invariants(comp.induced_lattice()).det == 256);
}

TEST_CASE("fixed/antifixed rank identity for random signed permutations") {
  std::mt19937_64 rng(23);
  Lattice l = twist(direct_sum(direct_sum(U(), U()), U()), 1);
  for (int trial = 0; trial < 10; ++trial) {
    // Products of the block swaps and U-coordinate swaps are involutions.
    std::vector<std::size_t> blocks{0, 1, 2};
    std::shuffle(blocks.begin(), blocks.end(), rng);
    IntMatrix p(6, 6);
    // swap blocks 0 and blocks[0] if different; other block fixed
    std::size_t a = blocks[0], b = blocks[1];
    for (std::size_t blk = 0; blk < 3; ++blk) {
      std::size_t to = blk == a ? b : blk == b ? a : blk;
      p(2 * to, 2 * blk) = 1;
      p(2 * to + 1, 2 * blk + 1) = 1;
    }
    if (trial % 2) {
      // also negate the untouched block
      std::size_t c = blocks[2];
      p(2 * c, 2 * c) = -1;
      p(2 * c + 1, 2 * c + 1) = -1;
    }
    Isometry iota(p, l);
    auto [f, an] = fixed_and_antifixed(l, iota);
    CHECK(f.rank() + an.rank() == 6);
    CHECK(Integer(static_cast<long>(f.rank()) - static_cast<long>(an.rank())) == iota.trace());
  }
}

TEST_CASE("non-involutions and non-isometries are rejected") {
  Lattice e8 = E8();
  CHECK(code_of([&] { Isometry(IntMatrix::identity(8).scaled(Integer(2)), e8); }) == ErrorCode::NotIsometry);
  CHECK(code_of([&] { Isometry(IntMatrix::identity(3), e8); }) == ErrorCode::RankMismatch);
  // Rotation of order 4 in U + U? Use the U-swap composed with a sign change on a U(-1)... use [[0,-1],[1,0]] on <1>+<1>.
  Lattice plane(IntMatrix{{1, 0}, {0, 1}});
  Isometry rot(IntMatrix{{0, -1}, {1, 0}}, plane);
  CHECK(code_of([&] { fixed_and_antifixed(plane, rot); }) == ErrorCode::NotInvolution);
}

TEST_CASE("verify_isometry") {
  CHECK(verify_isometry(IntMatrix::identity(2), U(), U()));
  CHECK_FALSE(verify_isometry(IntMatrix{{2, 0}, {0, 1}}, U(), U()));
  CHECK(verify_isometry(IntMatrix{{0, 1}, {1, 0}}, U(), U()));
  CHECK(code_of([] { verify_isometry(IntMatrix::identity(2), U(), E8()); }) == ErrorCode::RankMismatch);
}

TEST_CASE("lattice JSON literal") {
  auto j = to_json(U());
  CHECK(j.dump() == R"({"gram":[[0,1],[1,0]],"rank":2})");
  CHECK(lattice_from_json(j) == U());
  CHECK(code_of([] { lattice_from_json(nlohmann::json::parse(R"({"rank":2,"gram":[[1,2]]})")); }) ==
        ErrorCode::BadGram);
}
