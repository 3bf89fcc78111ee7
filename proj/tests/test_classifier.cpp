#include <random>

#include "doctest.h"
#include "k3/citations.hpp"
#include "k3/classifier.hpp"
#include "k3/error.hpp"

using namespace k3;
using namespace k3::classifier;
using nlohmann::json;

namespace {

Derivation run(const char* descriptor) { return classify(descriptor_from_json(json::parse(descriptor))); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadInput;
}

std::vector<std::string> rules(const Derivation& d) {
  std::vector<std::string> out;
  for (const auto& f : d.facts) out.push_back(f.rule_id);
  return out;
}

}  // namespace

TEST_CASE("R1: rho 19 or 20") {
  auto d = run(R"({"kind":"K3","rho":20})");
  REQUIRE(d.facts.size() == 1);
  CHECK(d.facts[0].rule_id == "R1");
  CHECK(d.derives("FiniteDimensional"));
  CHECK(d.derives("AbelianSubcategory"));
  CHECK(d.facts[0].citation == cite::kTheorem2);
  CHECK(run(R"({"kind":"K3","rho":19})").derives("FiniteDimensional"));
  CHECK(run(R"({"kind":"K3","rho":18})").facts.empty());
  CHECK(run(R"({"kind":"Abelian","rho":20})").facts.empty());
}

TEST_CASE("R2 needs finite dimensionality") {
  auto d = run(R"({"kind":"K3","features":[{"type":"NikulinInvolution"}],"assumptions":["FiniteDimensional"]})");
  CHECK(d.derives("MotiveIsoWithQuotient"));
  auto r2 = d.facts[*d.find("MotiveIsoWithQuotient")];
  CHECK(std::find(r2.premises.begin(), r2.premises.end(), "assumption:FiniteDimensional") != r2.premises.end());
  CHECK_FALSE(run(R"({"kind":"K3","features":[{"type":"NikulinInvolution"}]})").derives("MotiveIsoWithQuotient"));
}

TEST_CASE("R1 chains into R2") {
  auto d = run(R"({"kind":"K3","rho":20,"features":[{"type":"NikulinInvolution"}]})");
  CHECK(rules(d) == std::vector<std::string>{"R1", "R2", "R8"});
  const auto& r2 = d.facts[1];
  CHECK(std::find(r2.premises.begin(), r2.premises.end(), "fact:0") != r2.premises.end());
  // provenance is acyclic: fact premises point backwards
  for (std::size_t i = 0; i < d.facts.size(); ++i)
    for (const auto& p : d.facts[i].premises)
      if (p.rfind("fact:", 0) == 0) CHECK(std::stoul(p.substr(5)) < i);
}

TEST_CASE("R3: valence or identity on zero cycles") {
  auto base = R"({"kind":"K3","features":[{"type":"NikulinInvolution"}],"assumptions":["ValenceExists"]})";
  CHECK(run(base).derives("T2IsoWithQuotient"));
  CHECK(run(R"({"kind":"K3","features":[{"type":"NikulinInvolution"}],"assumptions":["IdentityOnZeroCycles"]})")
            .derives("T2IsoWithQuotient"));
  CHECK_FALSE(run(R"({"kind":"K3","features":[{"type":"NikulinInvolution"}]})").derives("T2IsoWithQuotient"));
}

TEST_CASE("R4: Fermat covers") {
  auto d = run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":4,"unimodular":true}]})");
  CHECK(d.derives("FermatCover(4)"));
  CHECK(d.derives("FiniteDimensional"));
  CHECK(run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":4,"unimodular":false}]})")
            .derives("FermatCover(8)"));
  CHECK(run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":3,"unimodular":true}]})").facts.empty());
  CHECK(run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":2,"unimodular":true}]})").facts.empty());
  CHECK(run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":2,"unimodular":false}]})")
            .derives("FermatCover(4)"));
  CHECK(run(R"({"kind":"K3","rho":10,"features":[{"type":"NonSymplecticTrivialGroup","m":5,"unimodular":true}]})")
            .derives("FermatCover(5)"));
  CHECK(code_of([] {
          run(R"({"kind":"K3","rho":9,"features":[{"type":"NonSymplecticTrivialGroup","m":5,"unimodular":true}]})");
        }) == ErrorCode::Inconsistent);
}

TEST_CASE("R5: non-symplectic involutions") {
  auto d = run(R"({"kind":"K3","features":[{"type":"NonSymplecticInvolution","fixed_locus_empty":true}]})");
  CHECK(d.derives("T2QuotientZero"));
  CHECK(d.derives("NotT2Iso"));
  CHECK(d.derives("QuotientKind(Enriques)"));
  CHECK(run(R"({"kind":"K3","features":[{"type":"NonSymplecticInvolution"}]})").derives("QuotientKind(Rational)"));
  CHECK_FALSE(d.derives("T2IsoWithQuotient"));
}

TEST_CASE("R6: elliptic and three quadrics") {
  CHECK(run(R"({"kind":"K3","features":[{"type":"EllipticWithTwoTorsionSection"}]})").derives("T2IsoWithQuotient"));
  auto d = run(R"({"kind":"K3","features":[{"type":"InvariantThreeQuadrics"}]})");
  REQUIRE(d.facts.size() == 1);
  CHECK(d.facts[0].citation.find("A_0(X)") != std::string::npos);
}

TEST_CASE("R7: even sets") {
  auto d = run(R"({"kind":"K3","features":[{"type":"EvenSet","k":16}]})");
  CHECK(d.derives("KummerQuotient"));
  CHECK(d.derives("FiniteDimensional"));
  CHECK(d.derives("T2IsoAll"));
  auto eight = run(R"({"kind":"K3","features":[{"type":"EvenSet","k":8}]})");
  CHECK(eight.derives("CoverHasNikulinInvolution"));
  CHECK_FALSE(eight.derives("FiniteDimensional"));
  CHECK_FALSE(eight.derives("MotiveIsoWithQuotient"));
  CHECK(run(R"({"kind":"K3","features":[{"type":"EvenSet","k":0}]})").facts.empty());
  CHECK(code_of([] { run(R"({"kind":"K3","features":[{"type":"EvenSet","k":7}]})"); }) == ErrorCode::Inconsistent);
}

TEST_CASE("R8: quotient rank and swap trace") {
  auto d = run(R"({"kind":"K3","rho":9,"features":[{"type":"NikulinInvolution"}]})");
  CHECK(rules(d) == std::vector<std::string>{"R8"});
  CHECK(d.derives("SwapTrace(6)"));
  CHECK(d.derives("RhoQuotientEqualsRho"));
}

TEST_CASE("inconsistent descriptors") {
  CHECK(code_of([] { run(R"({"kind":"K3","rho":8,"features":[{"type":"NikulinInvolution"}]})"); }) ==
        ErrorCode::Inconsistent);
  CHECK(code_of([] { run(R"({"kind":"K3","pg":0})"); }) == ErrorCode::Inconsistent);
  CHECK(code_of([] { run(R"({"kind":"K3","q":1})"); }) == ErrorCode::Inconsistent);
  CHECK(code_of([] { run(R"({"kind":"K3","rho":21})"); }) == ErrorCode::Inconsistent);
  try {
    run(R"({"kind":"K3","rho":8,"features":[{"type":"NikulinInvolution"}]})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("rho(X) >= 9") != std::string::npos);
  }
}

TEST_CASE("descriptor parsing") {
  CHECK(code_of([] { descriptor_from_json(json::parse(R"({"kind":"Torus"})")); }) == ErrorCode::BadInput);
  CHECK(code_of([] { descriptor_from_json(json::parse(R"({"rho":3})")); }) == ErrorCode::BadInput);
  CHECK(code_of([] { descriptor_from_json(json::parse(R"({"kind":"K3","features":[{"type":"EvenSet"}]})")); }) ==
        ErrorCode::BadInput);
  CHECK(code_of([] { descriptor_from_json(json::parse(R"({"kind":"K3","assumptions":["Kimura"]})")); }) ==
        ErrorCode::BadInput);
  auto d = descriptor_from_json(json::parse(
      R"({"kind":"K3","rho":10,"features":[{"type":"EvenSet","k":8},{"type":"NikulinInvolution"}],"assumptions":["ValenceExists"]})"));
  CHECK(*d.pg == 1);
  CHECK(*d.q == 0);
  auto round = descriptor_from_json(to_json(d));
  CHECK(to_json(round) == to_json(d));
}

TEST_CASE("explain") {
  auto d = run(R"({"kind":"K3","rho":20})");
  auto j = explain_json(d);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["rule_id"] == "R1");
  CHECK(j[0]["citation"] == std::string(cite::kTheorem2));
  CHECK(explain_text(d).find("R1: FiniteDimensional, AbelianSubcategory") != std::string::npos);
  CHECK(explain_json(run(R"({"kind":"K3"})")).empty());
  CHECK(explain_text(Derivation{}) == "no facts derived\n");
}

TEST_CASE("registered conclusions feed the motive calculus") {
  motive::FactStore store;
  register_facts(run(R"({"kind":"K3","rho":10,"features":[{"type":"NikulinInvolution"}],"assumptions":["FiniteDimensional"]})"),
                 store);
  CHECK(motive::motives_isomorphic(motive::chow_kunneth_k3(10, "X"), motive::chow_kunneth_k3(10, "Y"), store));
}

TEST_CASE("monotonicity and termination over random consistent descriptors") {
  const std::vector<Feature> pool{
      {FeatureType::NikulinInvolution},
      {FeatureType::NonSymplecticInvolution, true},
      {FeatureType::NonSymplecticTrivialGroup, false, 4, true},
      {FeatureType::NonSymplecticTrivialGroup, false, 3, false},
      {FeatureType::EllipticWithTwoTorsionSection},
      {FeatureType::InvariantThreeQuadrics},
      {FeatureType::EvenSet, false, 0, false, 8},
      {FeatureType::EvenSet, false, 0, false, 16},
      {FeatureType::ShiodaInose},
  };
  const std::vector<Assumption> hyps{Assumption::FiniteDimensional, Assumption::ValenceExists,
                                     Assumption::IdentityOnZeroCycles};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    SurfaceDescriptor small;
    small.rho = std::vector<long>{10, 12, 16, 18, 20}[rng() % 5];
    for (const auto& f : pool)
      if (rng() % 3 == 0) small.features.insert(f);
    for (auto a : hyps)
      if (rng() % 3 == 0) small.assumptions.insert(a);
    SurfaceDescriptor big = small;
    for (const auto& f : pool)
      if (rng() % 2 == 0) big.features.insert(f);
    for (auto a : hyps)
      if (rng() % 2 == 0) big.assumptions.insert(a);

    auto ds = classify(small);
    auto db = classify(big);
    CHECK(ds.facts.size() <= 8);
    CHECK(db.facts.size() <= 8);
    for (const auto& f : ds.facts)
      for (const auto& c : f.conclusion) CHECK(db.derives(c));
  }
}
