#include <thread>

#include "doctest.h"
#include "k3/error.hpp"
#include "k3/motive.hpp"

using namespace k3;
using namespace k3::motive;

namespace {

using E = InvolutionElement;

// Independent model of the algebra: 2x2 matrices over Q acting on the
// basis ([xi], alpha), with alpha the swap. Products are matrix products.
struct Mat2 {
  Rational a, b, c, d;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mat2 as_matrix(const E& x) { return {x.unit, x.alpha, x.alpha, x.unit}; }

}  // namespace

TEST_CASE("chow_kunneth_k3") {
  auto m = chow_kunneth_k3(9);
  CHECK(m.lefschetz_count(1) == 9);
  CHECK(m.lefschetz_count(2) == 1);
  CHECK(m.count(Unit{}) == 1);
  REQUIRE(m.transcendental().size() == 1);
  CHECK(m.transcendental()[0].dim == 13);
  CHECK(m.to_string() == "1 + L^{+9} + L^2 + t2(X; 13)");
  CHECK(chow_kunneth_k3(20).transcendental()[0].dim == 2);
  CHECK_THROWS_AS(chow_kunneth_k3(0), Error);
  CHECK_THROWS_AS(chow_kunneth_k3(21), Error);
  try {
    chow_kunneth_k3(0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankOutOfRange);
  }
}

TEST_CASE("normal form is multiset equality") {
  MotiveExpr a({T2{"X", 4}, Lef{1}, Unit{}});
  MotiveExpr b({Unit{}, T2{"X", 4}, Lef{1}});
  CHECK(a == b);
  CHECK(a + MotiveExpr({Lef{1}}) == b.with(Lef{1}));
  CHECK_FALSE(a == b.with(Lef{1}));
  CHECK_THROWS_AS(MotiveExpr({Lef{0}}), Error);
}

TEST_CASE("betti_dims") {
  using A = std::array<long, 5>;
  CHECK(betti_dims(chow_kunneth_k3(9)) == A{1, 0, 22, 0, 1});
  CHECK(betti_dims(MotiveExpr({Unit{}})) == A{1, 0, 0, 0, 0});
  CHECK(betti_dims(blowup_8(chow_kunneth_k3(9))) == A{1, 0, 30, 0, 1});
  CHECK(euler_characteristic(blowup_8(chow_kunneth_k3(9))) == 32);
  for (long rho = 1; rho <= 20; ++rho) {
    auto m = chow_kunneth_k3(rho);
    CHECK(euler_characteristic(m) == SurfaceData::k3(rho).e);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(euler_characteristic(blowup_points(m, n)) == 24 + static_cast<long>(n));
  }
}

TEST_CASE("blowup_8") {
  auto m = chow_kunneth_k3(9);
  auto b = blowup_8(m);
  CHECK(b.lefschetz_count(1) == 17);
  CHECK(blowup_8(b).lefschetz_count(1) == 25);
  CHECK(b.transcendental() == m.transcendental());
}

TEST_CASE("motives_isomorphic") {
  FactStore facts;
  auto x = chow_kunneth_k3(10, "X");
  auto y = chow_kunneth_k3(10, "Y");
  CHECK(motives_isomorphic(x, x, facts));
  CHECK_FALSE(motives_isomorphic(x, y, facts));
  facts.add({kT2Isomorphic, {"X", "Y"}, "test"});
  CHECK(motives_isomorphic(x, y, facts));
  CHECK(motives_isomorphic(y, x, facts));
  CHECK_FALSE(motives_isomorphic(x, y.with(Lef{1}), facts));
  CHECK_FALSE(motives_isomorphic(chow_kunneth_k3(10, "X"), chow_kunneth_k3(11, "Y"), facts));
  facts.add({kT2Isomorphic, {"Y", "Z"}, "test"});
  CHECK(motives_isomorphic(x, chow_kunneth_k3(10, "Z"), facts));
}

TEST_CASE("null summand elimination needs finite dimensionality") {
  FactStore facts;
  CHECK_FALSE(eliminate_null_summand(facts, {"X", 12}, {"Y", 12}));
  CHECK_FALSE(facts.t2_isomorphic("X", "Y"));
  facts.add({kFiniteDimensional, {"X"}, "test"});
  CHECK_FALSE(eliminate_null_summand(facts, {"X", 12}, {"Y", 11}));
  CHECK(eliminate_null_summand(facts, {"X", 12}, {"Y", 12}));
  CHECK(facts.t2_isomorphic("X", "Y"));
}

TEST_CASE("fact store JSON round trip") {
  FactStore facts;
  facts.add({kFiniteDimensional, {"X"}, "c1"});
  facts.add({kT2Isomorphic, {"X", "Y"}, "c2"});
  facts.add({kT2Isomorphic, {"X", "Y"}, "c2"});
  CHECK(facts.facts().size() == 2);
  auto j = facts.to_json();
  CHECK(j[1]["subjects"][1] == "Y");
  auto back = FactStore::from_json(j);
  CHECK(back.facts() == facts.facts());
  CHECK_THROWS_AS(FactStore::from_json(nlohmann::json::object()), Error);
  CHECK_THROWS_AS(FactStore::from_json(nlohmann::json::parse(R"([{"fact":"x"}])")), Error);
}

TEST_CASE("fact store tolerates concurrent readers and writers") {
  FactStore facts;
  std::vector<std::thread> threads;
  for (int w = 0; w < 4; ++w)
    threads.emplace_back([&, w] {
      for (int i = 0; i < 50; ++i)
        facts.add({kFiniteDimensional, {"S" + std::to_string(w) + "_" + std::to_string(i)}, "c"});
    });
  for (int r = 0; r < 4; ++r)
    threads.emplace_back([&] {
      for (int i = 0; i < 200; ++i) (void)facts.finite_dimensional("S0_0");
    });
  for (auto& t : threads) t.join();
  CHECK(facts.facts().size() == 200);
  CHECK(facts.finite_dimensional("S3_49"));
}

TEST_CASE("involution algebra") {
  CHECK(alg_mul(E::generator(), E::generator()) == E::xi());
  CHECK(E::p_plus() * E::p_plus() == E::p_plus());
  CHECK(E::p_minus() * E::p_minus() == E::p_minus());
  CHECK(E::p_plus() * E::p_minus() == E{0, 0});
  CHECK(E::p_plus() + E::p_minus() == E::xi());
  CHECK(E::xi() * E::generator() == E::generator());
}

TEST_CASE("multiplication agrees with the matrix model") {
  const std::vector<Rational> vals{Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1), Rational(5, 2)};
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals)
        for (const auto& d : vals) {
          E x{a, b}, y{c, d};
          CHECK(as_matrix(x * y) == as_matrix(x) * as_matrix(y));
          CHECK(x * y == y * x);
        }
}

TEST_CASE("push and pull") {
  CHECK(push(E::xi()) == 2);
  CHECK(push(E::generator()) == 2);
  CHECK(push(E::p_minus()) == 0);
  CHECK(pull(1) == E::xi() + E::generator());
  CHECK(pull(push(E::xi())) == E{2, 2});
  CHECK(push(pull(1)) == 4);
  // pull(push(x)) = push(x) * ([xi] + alpha); push(pull(c)) = 4c
  const std::vector<Rational> vals{Rational(-3), Rational(1, 2), Rational(7, 5)};
  for (const auto& a : vals)
    for (const auto& b : vals) {
      E x{a, b};
      CHECK(pull(push(x)) == (E::xi() + E::generator()).scaled(push(x)));
      CHECK(push(pull(a)) == 4 * a);
    }
}

TEST_CASE("valences") {
  CHECK(valence_compose(Rational(-1), Rational(-1)) == -1);
  CHECK(valence_compose(Rational(1), Rational(1)) == -1);
  CHECK(valence_compose(Rational(0), Rational(3, 2)) == 0);
  CHECK_THROWS_AS(valence_compose(std::nullopt, Rational(1)), Error);
  CHECK(projector_valence_check(0));
  CHECK(projector_valence_check(-1));
  CHECK_FALSE(projector_valence_check(Rational(1, 2)));
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        Rational left = valence_compose(valence_compose(Rational(a), Rational(b)), Rational(c));
        Rational right = valence_compose(Rational(a), valence_compose(Rational(b), Rational(c)));
        CHECK(left == right);
      }
  // -v^2 = v is exactly the projector condition.
  for (int num = -4; num <= 4; ++num) {
    Rational v(num, 2);
    v.canonicalize();
    CHECK(projector_valence_check(v) == (valence_compose(v, v) == v));
  }
}

TEST_CASE("valued correspondences") {
  ValuedCorrespondence t{Rational(1), std::pair<Integer, Integer>{2, 5}};
  ValuedCorrespondence u{Rational(-1, 2), std::pair<Integer, Integer>{1, 1}};
  auto s = t + u;
  CHECK(*s.valence == Rational(1, 2));
  CHECK(s.indices->first == 3);
  CHECK(s.indices->second == 6);
  CHECK(t.transpose().indices->first == 5);
  CHECK(t.transpose().transpose().indices == t.indices);
  CHECK(*t.compose(u).valence == Rational(1, 2));
  CHECK_FALSE(t.compose(ValuedCorrespondence{}).valence.has_value());
  auto delta = diagonal_correspondence();
  CHECK(*delta.compose(delta).valence == *delta.valence);
}

TEST_CASE("theorem1_decide") {
  CHECK(theorem1_decide(1, 1) == Theorem1Outcome::T2QuotientZero);
  CHECK(theorem1_decide(-1, 1) == Theorem1Outcome::T2Isomorphism);
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadInput;
  };
  CHECK(code_of([] { theorem1_decide(-1, 0); }) == ErrorCode::ValenceNotUnique);
  CHECK(code_of([] { theorem1_decide(0, 1); }) == ErrorCode::InconsistentValence);
  CHECK(code_of([] { theorem1_decide(Rational(1, 2), 1); }) == ErrorCode::InconsistentValence);
}

TEST_CASE("trichotomy agrees with the valence branch") {
  CHECK(corollary1_trichotomy(InvolutionAction::PlusOne) == TrichotomyOutcome::Isomorphism);
  CHECK(corollary1_trichotomy(InvolutionAction::MinusOne) == TrichotomyOutcome::QuotientZero);
  CHECK(corollary1_trichotomy(InvolutionAction::Mixed) == TrichotomyOutcome::ProperSummand);
  CHECK(theorem1_decide(-1, 1) == Theorem1Outcome::T2Isomorphism);
  CHECK(corollary1_trichotomy(InvolutionAction::PlusOne) == TrichotomyOutcome::Isomorphism);
  CHECK(theorem1_decide(1, 1) == Theorem1Outcome::T2QuotientZero);
  CHECK(corollary1_trichotomy(InvolutionAction::MinusOne) == TrichotomyOutcome::QuotientZero);
  auto allowed = valences_with_nonzero_quotient(1);
  REQUIRE(allowed.size() == 1);
  CHECK(allowed[0] == -1);
}
