#pragma once

// Canned orbit data for worked S^3-actions with known Poincare polynomials.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbitseq/gysin.hpp"

namespace orbitseq::fixtures {

class unknown_fixture : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Fixture {
  std::string name;
  std::string description;
  gysin::GysinInput input;
  /// Every feasible H^0..H^n(M) profile the solver should report.
  std::vector<std::vector<std::size_t>> expected_profiles;
};

/// cp2_sum, s3_x_s1, s2_x_s1_trivial, s2_x_s1_twisted, rp2_x_s1,
/// ineffective_s1, hopf_like_free.
const std::vector<std::string>& names();

Fixture entry(std::string_view name);
gysin::GysinInput fixture(std::string_view name);

}  // namespace orbitseq::fixtures
