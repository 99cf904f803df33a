#pragma once

// Verification suites: exhaustive cross-checks of every closed formula
// against the brute-force group oracle and of the Hopf structure against
// its defining identities, at desk scale.

#include <cstdint>
#include <string>
#include <vector>

#include "superpattern/group.hpp"
#include "superpattern/nonnesting.hpp"

namespace superpattern {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_atoms = 3;
  std::vector<int> primes = {2, 3};
  std::uint64_t nn_cap = kDefaultNNCap;
  std::uint64_t group_cap = kDefaultGroupCap;
  std::uint64_t seed = 12345;
};

// Suites: axioms, bases, restriction, hopf, antipode, catalan.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& opt);
std::vector<std::string> suite_names();

// The acceptance criteria, one result per criterion, at their stated bounds.
std::vector<CheckResult> run_acceptance();

}  // namespace superpattern
