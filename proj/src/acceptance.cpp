#include "k3/acceptance.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "k3/classifier.hpp"
#include "k3/elliptic.hpp"
#include "k3/error.hpp"
#include "k3/linalg.hpp"
#include "k3/motive.hpp"
#include "k3/nikulin.hpp"
#include "k3/nsclass.hpp"

namespace k3::acceptance {

namespace {

using lattice::Signature;
using lattice::StandardName;

/// Collects named checks; the first failure goes into the detail line.
class Checks {
 public:
  void operator()(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failed_.empty()) failed_ = what;
    if (!ok) ++failures_;
  }
  CriterionResult result(int id, std::string name, const std::string& summary) const {
    CriterionResult r{id, std::move(name), failures_ == 0, summary};
    if (failures_) r.detail = std::to_string(failures_) + "/" + std::to_string(total_) + " checks failed, first: " + failed_;
    return r;
  }

 private:
  std::size_t total_ = 0;
  std::size_t failures_ = 0;
  std::string failed_;
};

template <class F>
bool throws_code(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

CriterionResult guarded(int id, const char* name, const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {id, name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::uint64_t seed_from_env() {
  const char* env = std::getenv("SEED");
  if (!env || !*env) return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::BadInput, std::string("SEED must be a nonnegative integer, got '") + env + "'");
  return v;
}

CriterionResult lattice_invariants() {
  return guarded(1, "lattice invariants", [] {
    Checks c;
    auto u = lattice::invariants(lattice::standard_lattice(StandardName::U));
    c(u.det == -1, "det U = -1");
    c(u.signature == Signature{1, 1}, "sig U = (1,1)");
    c(u.even && u.unimodular, "U even unimodular");
    auto e8 = lattice::invariants(lattice::standard_lattice(StandardName::E8));
    c(e8.det == 1, "det E8 = 1");
    c(e8.signature == Signature{8, 0}, "sig E8 = (8,0)");
    c(e8.even, "E8 even");
    auto e8m2 = lattice::twist(lattice::standard_lattice(StandardName::E8), -2);
    c(lattice::invariants(e8m2).det == 256, "det E8(-2) = 256");
    auto dg = lattice::discriminant_group(e8m2);
    c(dg.invariant_factors == std::vector<Integer>(8, Integer(2)), "A(E8(-2)) = (Z/2)^8");
    return c.result(1, "lattice invariants", "U: det -1 (1,1) even unimodular; E8: det 1 (8,0) even; E8(-2): det 256, (Z/2)^8");
  });
}

CriterionResult h2_model() {
  return guarded(2, "H2 model and swap", [] {
    Checks c;
    auto model = nikulin::build_model();
    auto inv = lattice::invariants(model.lattice);
    c(inv.rank == 22, "rank 22");
    c(inv.signature == Signature{3, 19}, "signature (3,19)");
    c(inv.even && inv.unimodular, "even unimodular");
    c(model.swap.trace() == 6, "swap trace 6");
    auto rep = nikulin::verify_invariant_lattices(model);
    c(rep.fixed_rank == 14, "fixed rank 14");
    c(rep.fixed_ok, "fixed lattice isometric to U^3 + E8(-2)");
    c(rep.antifixed_ok, "antifixed lattice isometric to E8(-2)");
    return c.result(2, "H2 model and swap", "rank 22, (3,19), trace 6, witnesses for U^3+E8(-2) and E8(-2)");
  });
}

CriterionResult euler_balance() {
  return guarded(3, "Euler balance", [] {
    Checks c;
    c(nikulin::euler_balance_solve(24, 6, 8) == 24, "e(Y) = 24");
    c(throws_code([] { nikulin::euler_balance_solve(24, 5, 8); }, ErrorCode::NonIntegralBalance), "odd t rejected");
    c(throws_code([] { nikulin::euler_balance_solve(23, 6, 8); }, ErrorCode::NonIntegralBalance), "odd e(X) rejected");
    return c.result(3, "Euler balance", "e(Y) = (24 + 6 + 2 + 16) / 2 = 24; parity violations rejected");
  });
}

CriterionResult ns_sweep() {
  return guarded(4, "NS sweep d = 1..12", [] {
    Checks c;
    for (long d = 1; d <= 12; ++d) {
      const std::string at = " (d=" + std::to_string(d) + ")";
      auto lam = lattice::invariants(nsclass::lambda_2d(d));
      c(lam.even, "Lambda even" + at);
      c(abs(lam.det) == 512 * d, "|det Lambda| = 512d" + at);
      auto set = nsclass::ns_candidates(d);
      c(set.candidates.size() == (d % 2 == 0 ? 2u : 1u), "candidate count" + at);
      if (d % 2 != 0) {
        c(throws_code([d] { nsclass::find_glue_and_extend(d); }, ErrorCode::BadPolarization), "no overlattice" + at);
        continue;
      }
      auto ext = nsclass::find_glue_and_extend(d);
      const Integer residue = ((ext.glue_square + 2 * d) % 8 + 8) % 8;
      c(residue == 0, "v^2 = -2d mod 8" + at);
      auto over = lattice::invariants(ext.overlattice);
      c(over.even, "overlattice even" + at);
      c(abs(over.det) == 128 * d, "|det| = 128d" + at);
      c(ext.index == 2, "index 2" + at);
      c(nsclass::verify_primitive(nsclass::e8_in_overlattice(ext), ext.overlattice), "E8(-2) primitive" + at);
      if (d == 2) {
        c(ext.glue_square == -4, "d=2: v^2 = -4");
        c(ext.overlattice.gram()(0, 0) == 0, "d=2: ((L+v)/2)^2 = 0");
      }
    }
    return c.result(4, "NS sweep d = 1..12", "Lambda_2d even |det| 512d; even d: glue, index 2, |det| 128d, E8(-2) primitive");
  });
}

CriterionResult elliptic_models(std::uint64_t seed) {
  return guarded(5, "elliptic fibrations", [seed] {
    using namespace elliptic;
    Checks c;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kEllipticModels; ++i) {
      const std::string at = " (model " + std::to_string(i) + ")";
      auto w = random_generic_model(rng);
      auto t = fiber_table(w);
      c(t.root_count(Kodaira::I1) == 8, "8 I1 roots" + at);
      c(t.root_count(Kodaira::I2) == 8, "8 I2 roots" + at);
      c(t.euler_sum == 24, "Euler sum 24" + at);
      c(t.rho == 10, "rho 10" + at);
      c(t.dim_t == 12, "dim T 12" + at);
      auto q = quotient_model(w);
      auto tq = fiber_table(q);
      c(same_factor_sets(t.factors(Kodaira::I1), tq.factors(Kodaira::I2)), "I1 -> I2 under quotient" + at);
      c(same_factor_sets(t.factors(Kodaira::I2), tq.factors(Kodaira::I1)), "I2 -> I1 under quotient" + at);
      auto qq = quotient_model(q);
      c(qq.a == RatPoly::constant(4) * w.a && qq.b == RatPoly::constant(16) * w.b, "double quotient (4a, 16b)" + at);
      c(rescale(qq, 2) == w, "(x,y) -> (4x,8y) recovers the model" + at);
    }
    return c.result(5, "elliptic fibrations",
                    std::to_string(kEllipticModels) + " models (seed " + std::to_string(seed) +
                        "): 8 I1 + 8 I2, e = 24, rho 10, dim T 12, fibers swap, double quotient exact");
  });
}

CriterionResult involution_algebra() {
  return guarded(6, "involution algebra", [] {
    using E = motive::InvolutionElement;
    Checks c;
    c(E::generator() * E::generator() == E::xi(), "alpha^2 = [xi]");
    c(E::p_plus() * E::p_plus() == E::p_plus(), "p+ idempotent");
    c(E::p_minus() * E::p_minus() == E::p_minus(), "p- idempotent");
    c(E::p_plus() * E::p_minus() == E{0, 0}, "p+ p- = 0");
    c(E::p_plus() + E::p_minus() == E::xi(), "p+ + p- = [xi]");
    c(motive::push(E::xi()) == 2 && motive::push(E::generator()) == 2, "push = 2[eta]");
    c(motive::pull(1) == E::xi() + E::generator(), "pull([eta]) = [xi] + alpha");
    c(motive::pull(motive::push(E::xi())) == E{2, 2}, "pull push [xi] = 2[xi] + 2alpha");
    return c.result(6, "involution algebra", "alpha^2 = [xi]; p+, p- orthogonal idempotents; push/pull identities");
  });
}

CriterionResult valence_decisions() {
  return guarded(7, "valence decisions", [] {
    using namespace motive;
    Checks c;
    c(theorem1_decide(1, 1) == Theorem1Outcome::T2QuotientZero, "v=1 -> T2QuotientZero");
    c(theorem1_decide(-1, 1) == Theorem1Outcome::T2Isomorphism, "v=-1 -> T2Isomorphism");
    c(throws_code([] { theorem1_decide(-1, 0); }, ErrorCode::ValenceNotUnique), "p_g = 0 rejected");
    auto allowed = valences_with_nonzero_quotient(1);
    c(allowed.size() == 1 && allowed[0] == -1, "nonzero t2(Y) forces v = -1");
    c(corollary1_trichotomy(InvolutionAction::PlusOne) == TrichotomyOutcome::Isomorphism &&
          theorem1_decide(allowed.at(0), 1) == Theorem1Outcome::T2Isomorphism,
      "trichotomy PlusOne agrees with v = -1");
    c(corollary1_trichotomy(InvolutionAction::MinusOne) == TrichotomyOutcome::QuotientZero, "MinusOne -> QuotientZero");
    return c.result(7, "valence decisions", "v=1 quotient zero, v=-1 isomorphism, p_g=0 rejected, Nikulin case forces v=-1");
  });
}

CriterionResult classifier_goldens() {
  return guarded(8, "classifier goldens", [] {
    using namespace classifier;
    Checks c;
    auto run = [](const char* text) { return classify(descriptor_from_json(nlohmann::json::parse(text))); };
    c(run(R"({"kind":"K3","rho":20})").derives("FiniteDimensional"), "rho 20 -> FiniteDimensional");
    auto chain = run(R"({"kind":"K3","rho":20,"features":[{"type":"NikulinInvolution"}]})");
    c(chain.derives("MotiveIsoWithQuotient"), "rho 20 + Nikulin -> h(X) = h(Y)");
    motive::FactStore store;
    register_facts(chain, store);
    c(motive::motives_isomorphic(motive::chow_kunneth_k3(20, "X"), motive::chow_kunneth_k3(20, "Y"), store),
      "registered facts identify the motives");
    auto fermat = run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":4,"unimodular":true}]})");
    c(fermat.derives("FermatCover(4)") && fermat.derives("FiniteDimensional"), "m=4 unimodular -> F_4, finite dim");
    c(run(R"({"kind":"K3","features":[{"type":"NonSymplecticTrivialGroup","m":3,"unimodular":true}]})").facts.empty(),
      "m=3 rejected");
    c(run(R"({"kind":"K3","features":[{"type":"NonSymplecticInvolution"}]})").derives("T2QuotientZero"),
      "non-symplectic involution -> T2QuotientZero");
    c(throws_code([&] { run(R"({"kind":"K3","features":[{"type":"EvenSet","k":7}]})"); }, ErrorCode::Inconsistent),
      "EvenSet(7) inconsistent");
    c(!run(R"({"kind":"K3","features":[{"type":"EvenSet","k":8}]})").derives("FiniteDimensional"),
      "EvenSet(8) leaves finite dimensionality open");
    return c.result(8, "classifier goldens", "rho 20, Nikulin chain, Fermat m=4 / m=3, non-symplectic involution, EvenSet(7), EvenSet(8)");
  });
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  return {lattice_invariants(), h2_model(),          euler_balance(),     ns_sweep(),
          elliptic_models(seed), involution_algebra(), valence_decisions(), classifier_goldens()};
}

}  // namespace k3::acceptance
