#pragma once

// Simplicial Z/2 actions: the induced involution on cohomology, its
// invariant/antisymmetric eigenspaces, and quotients by regular actions.

#include <stdexcept>
#include <utility>
#include <vector>

#include "orbitseq/complexes.hpp"

namespace orbitseq::equivariant {

using complexes::GradedDims;
using complexes::Simplex;
using complexes::SimplicialComplex;
using complexes::Vertex;
using complexes::VertexMap;

class malformed_involution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class non_regular_action : public std::invalid_argument {
 public:
  non_regular_action(const std::string& what, Simplex offending)
      : std::invalid_argument(what), offending_(std::move(offending)) {}
  const Simplex& offending() const noexcept { return offending_; }

 private:
  Simplex offending_;
};

/// A simplicial automorphism of order at most two.
class Involution {
 public:
  /// Swaps each listed pair; unlisted vertices are fixed.
  Involution(SimplicialComplex carrier, const std::vector<std::pair<Vertex, Vertex>>& swaps);
  /// Full vertex map; must be defined exactly on the carrier's vertices.
  static Involution from_map(SimplicialComplex carrier, VertexMap vertex_map);
  static Involution identity(SimplicialComplex carrier);

  const SimplicialComplex& carrier() const noexcept { return carrier_; }
  const VertexMap& vertex_map() const noexcept { return map_; }
  Vertex operator()(Vertex v) const { return map_.at(v); }
  Simplex image(const Simplex& s) const;
  bool is_trivial() const;

  /// Non-fixed vertices as (a, b) with a < b, ascending.
  std::vector<std::pair<Vertex, Vertex>> swaps() const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  void validate() const;

  SimplicialComplex carrier_;
  VertexMap map_;
};

struct SplitCohomology {
  GradedDims symmetric;
  GradedDims antisymmetric;
};

/// Eigenspace dimensions (+1 and -1) of the induced map on each H^k.
SplitCohomology split_involution(const Involution& inv);

/// Per-degree matrices of the induced involution on H^k(carrier).
std::vector<complexes::Matrix> induced_involution(const Involution& inv);

/// Throws non_regular_action naming a simplex that has two vertices in one
/// orbit, or whose orbit image coincides with the image of a simplex outside
/// its orbit. Under these conditions the simplicial quotient is the
/// topological quotient.
void require_regular(const Involution& inv);
bool is_regular(const Involution& inv);

/// Quotient complex; each orbit is labelled by its smallest vertex.
SimplicialComplex quotient_complex(const Involution& inv);

/// Antisymmetric dimensions of the involution on the given complex, unshifted.
GradedDims antisym_of_fixed_set(const SimplicialComplex& k, const Involution& inv);

}  // namespace orbitseq::equivariant
