#pragma once

// Gysin sequence of an S^3-action, assembled from simplicial models of the
// orbit data:
//
//   ... -> H^i(M) -> H^{i-3}(M/S3, Sigma/S3) + (H^{i-2}(M^S1))^{-Z2}
//       -> H^{i+1}(M/S3) -> H^{i+1}(M) -> ...
//
// H^*(M) is never computed directly; it is supplied or solved for.

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitseq/complexes.hpp"
#include "orbitseq/equivariant.hpp"
#include "orbitseq/lesolve.hpp"

namespace orbitseq::gysin {

using complexes::GradedDims;
using complexes::SimplicialComplex;
using complexes::SimplicialPair;
using equivariant::Involution;

class malformed_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GysinInput {
  SimplicialPair orbit_pair;           // (M/S3, Sigma/S3)
  SimplicialComplex fixed_circle_set;  // M^S1
  Involution j_involution;             // action of j on M^S1
  int degree_bound = 0;                // dim M
  std::map<int, std::size_t> known_total;  // known dim H^k(M)

  /// Throws malformed_input on a mismatched involution carrier, a negative
  /// degree bound, or known dimensions outside 0..degree_bound.
  void validate() const;

  friend bool operator==(const GysinInput&, const GysinInput&) = default;
};

/// Cohomological ingredients of the sequence, all unshifted except `middle`.
struct GysinTerms {
  GradedDims orbit;          // H^s(M/S3)
  GradedDims relative;       // H^s(M/S3, Sigma/S3)
  GradedDims antisymmetric;  // (H^s(M^S1))^{-Z2}
  GradedDims middle;         // relative[i-3] + antisymmetric[i-2]
};

GysinTerms compute_terms(const GysinInput& g);

/// Flat template H^{-1}(M), middle_{-1}, H^0(M/S3), H^0(M), middle_0, ...
/// ending at the first H^{i+1}(M/S3) beyond every nonzero term. H^k(M) is
/// known zero outside 0..degree_bound. Slots carry the degree i of their
/// triple (H^{i+1}(M/S3) carries i+1).
lesolve::ExactSequenceTemplate gysin_sequence(const GysinTerms& terms, int degree_bound,
                                              const std::map<int, std::size_t>& known_total);

/// The sequence with no antisymmetric summand, built directly from a pair
/// (M/S3, A): the semi-free form with A = F, or the form for actions with no
/// isotropy conjugate to S1 with A = Sigma/S3.
lesolve::ExactSequenceTemplate reduced_sequence(const SimplicialPair& orbit_pair, int degree_bound,
                                                const std::map<int, std::size_t>& known_total);

struct DualityReport {
  bool obstructed = false;
  std::vector<int> degrees;  // fixed-set degrees where the exotic term is nonzero
  std::string text;
};

/// Rows q = 0..3 of the second page: H^s(M/S3), 0, (H^s(M^S1))^{-Z2},
/// H^s(M/S3, Sigma/S3).
using E2Rows = std::array<GradedDims, 4>;

struct GysinReport {
  lesolve::ExactSequenceTemplate sequence;
  GysinTerms terms;
  lesolve::SolveReport solve;
  /// dim H^0..H^n(M) for every feasible solution, ascending.
  std::vector<std::vector<std::size_t>> total_profiles;
  E2Rows e2_rows;
  DualityReport duality;
  int degree_bound = 0;

  bool unique() const { return solve.consistent && total_profiles.size() == 1; }
  std::vector<GradedDims> poincare_polynomials() const;
};

GysinReport assemble(const GysinInput& g);
E2Rows e2_rows(const GysinInput& g);
DualityReport duality_report(const GysinInput& g);

E2Rows e2_rows(const GysinTerms& terms);
DualityReport duality_report(const GysinTerms& terms);

}  // namespace orbitseq::gysin
