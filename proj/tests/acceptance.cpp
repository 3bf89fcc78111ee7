#include <cstdio>

#include "k3/acceptance.hpp"

int main() {
  const auto seed = k3::acceptance::seed_from_env();
  bool all = true;
  for (const auto& r : k3::acceptance::run_all(seed)) {
    std::printf("%s criterion %d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
