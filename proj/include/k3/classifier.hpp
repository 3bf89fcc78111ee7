#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3/motive.hpp"

namespace k3::classifier {

enum class SurfaceKind { K3, GeneralType, Abelian, Kummer, Enriques, Rational };

enum class FeatureType {
  NikulinInvolution,
  NonSymplecticInvolution,
  NonSymplecticTrivialGroup,
  EllipticWithTwoTorsionSection,
  InvariantThreeQuadrics,
  EvenSet,
  ShiodaInose,
};

/// Tagged feature; only the fields of its type are meaningful.
struct Feature {
  FeatureType type = FeatureType::NikulinInvolution;
  bool fixed_locus_empty = false;  // NonSymplecticInvolution
  long m = 0;                      // NonSymplecticTrivialGroup
  bool unimodular = false;         // NonSymplecticTrivialGroup
  long k = 0;                      // EvenSet
  auto operator<=>(const Feature&) const = default;
};

enum class Assumption { FiniteDimensional, ValenceExists, IdentityOnZeroCycles };

struct SurfaceDescriptor {
  SurfaceKind kind = SurfaceKind::K3;
  std::optional<long> rho;
  std::optional<long> pg;
  std::optional<long> q;
  std::set<Feature> features;
  std::set<Assumption> assumptions;

  bool has(FeatureType t) const;
  std::optional<Feature> find(FeatureType t) const;
  bool assumes(Assumption a) const { return assumptions.count(a) > 0; }
};

SurfaceDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SurfaceDescriptor& d);

/// One rule application. Premises are "fact:<index>" for earlier facts,
/// "assumption:<name>" for hypotheses, or descriptor fields such as
/// "kind=K3", "rho=20", "feature:EvenSet(16)".
struct DerivedFact {
  std::vector<std::string> conclusion;
  std::string rule_id;
  std::string citation;
  std::vector<std::string> premises;
};

struct Derivation {
  std::vector<DerivedFact> facts;
  /// Index of the first fact concluding `atom`.
  std::optional<std::size_t> find(const std::string& atom) const;
  bool derives(const std::string& atom) const { return find(atom).has_value(); }
};

/// Applies R1..R8 to a fixed point, each rule at most once. Throws
/// Inconsistent, naming the violated constraint and its citation.
Derivation classify(const SurfaceDescriptor& d);

std::string explain_text(const Derivation& d);
nlohmann::json explain_json(const Derivation& d);

/// Registers FiniteDimensional(x) and T2Isomorphic(x, y) conclusions.
void register_facts(const Derivation& d, motive::FactStore& store, const std::string& x = "X",
                    const std::string& y = "Y");

const char* to_string(SurfaceKind k);
const char* to_string(FeatureType t);
const char* to_string(Assumption a);
std::string to_string(const Feature& f);

}  // namespace k3::classifier
