#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::size_t kEllipticModels = 24;

/// SEED from the environment, else kDefaultSeed. BadInput on garbage.
std::uint64_t seed_from_env();

CriterionResult lattice_invariants();
CriterionResult h2_model();
CriterionResult euler_balance();
CriterionResult ns_sweep();
CriterionResult elliptic_models(std::uint64_t seed);
CriterionResult involution_algebra();
CriterionResult valence_decisions();
CriterionResult classifier_goldens();

/// Criteria 1..8 in order.
std::vector<CriterionResult> run_all(std::uint64_t seed);

}  // namespace k3::acceptance
