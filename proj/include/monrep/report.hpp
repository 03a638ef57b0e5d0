// monrep - exact representation theory for finite monoids
// SPDX-License-Identifier: Apache-2.0

#ifndef MONREP_REPORT_HPP
#define MONREP_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace monrep {

//! One verified claim, with a human-readable witness for either outcome.
struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string witness;
};

//! Outcome of a verification run over one instance.
struct VerificationReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  void add(std::string name, bool ok, std::string witness) {
    checks.push_back({std::move(name), ok, std::move(witness)});
  }

  bool passed() const {
    for (auto const& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

}  // namespace monrep

#endif  // MONREP_REPORT_HPP
