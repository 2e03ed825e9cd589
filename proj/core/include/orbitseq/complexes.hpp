#pragma once

// Finite abstract simplicial complexes, relative pairs, and their rational
// cohomology computed from explicit cochain complexes.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitseq/exactla.hpp"
#include "orbitseq/lesolve.hpp"

namespace orbitseq::complexes {

using exactla::Matrix;
using exactla::Vector;

using Vertex = int;
/// Vertices in strictly ascending order.
using Simplex = std::vector<Vertex>;
using VertexMap = std::map<Vertex, Vertex>;

class malformed_complex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class malformed_pair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class non_simplicial_map : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely supported degree -> dimension map; also a Poincare polynomial.
class GradedDims {
 public:
  GradedDims() = default;
  /// Dimensions listed from degree 0 upward.
  GradedDims(std::initializer_list<std::size_t> by_degree);
  static GradedDims from_vector(const std::vector<std::size_t>& by_degree);

  std::size_t operator[](int degree) const;
  void set(int degree, std::size_t value);
  void add(int degree, std::size_t value);

  /// Highest degree with a nonzero entry, or -1 when identically zero.
  int top_degree() const;
  bool is_zero() const noexcept { return dims_.empty(); }
  const std::map<int, std::size_t>& entries() const noexcept { return dims_; }

  /// Dimensions of degrees 0..up_to (defaults to top_degree()).
  std::vector<std::size_t> to_vector(std::optional<int> up_to = std::nullopt) const;

  long long evaluate(long long t) const;
  long long euler_characteristic() const { return evaluate(-1); }

  /// Human-readable polynomial such as "1 + 2t^2 + t^4"; "0" when empty.
  std::string polynomial(const std::string& variable = "t") const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  std::map<int, std::size_t> dims_;
};

/// Sorts the vertices; rejects empty simplices, negative labels and repeats.
Simplex normalize(Simplex s);
std::string to_string(const Simplex& s);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Exactly the given simplices; throws malformed_complex unless the set is
  /// closed under faces.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
  /// The given simplices together with all of their faces.
  static SimplicialComplex closure_of(const std::vector<Simplex>& simplices);

  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const noexcept { return by_dim_.empty(); }
  std::size_t count(int k) const;
  std::size_t size() const;

  /// k-simplices in lexicographic order; this order indexes cochain vectors.
  const std::vector<Simplex>& simplices(int k) const;
  std::vector<Simplex> all_simplices() const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  std::vector<Vertex> vertices() const;
  Vertex max_vertex() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Simplices whose vertices all satisfy `keep`.
  template <typename Pred>
  SimplicialComplex induced(Pred keep) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  explicit SimplicialComplex(std::map<Simplex, int> sorted);

  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

template <typename Pred>
SimplicialComplex SimplicialComplex::induced(Pred keep) const {
  std::vector<Simplex> kept;
  for (const auto& layer : by_dim_) {
    for (const auto& s : layer) {
      bool all = true;
      for (Vertex v : s) all = all && keep(v);
      if (all) kept.push_back(s);
    }
  }
  return from_simplices(std::move(kept));
}

class SimplicialPair {
 public:
  /// Throws malformed_pair unless `sub` is a subcomplex of `total`.
  SimplicialPair(SimplicialComplex total, SimplicialComplex sub);

  const SimplicialComplex& total() const noexcept { return total_; }
  const SimplicialComplex& sub() const noexcept { return sub_; }

  friend bool operator==(const SimplicialPair&, const SimplicialPair&) = default;

 private:
  SimplicialComplex total_;
  SimplicialComplex sub_;
};

/// C^0 -> C^1 -> ... ; coboundaries[k] has shape dims[k+1] x dims[k], with an
/// empty target for the top degree.
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> coboundaries;
};

/// delta: C^k -> C^{k+1}, (delta f)(tau) = sum_i (-1)^i f(tau minus its i-th vertex).
Matrix coboundary_matrix(const SimplicialComplex& x, int k);
CochainComplex cochains(const SimplicialComplex& x);
/// Cochains supported on simplices of total that are not in sub.
CochainComplex relative_cochains(const SimplicialPair& p);

struct DegreeCohomology {
  std::size_t cochain_dim = 0;
  std::vector<Vector> cocycle_basis;
  std::vector<Vector> coboundary_basis;
  /// Cocycles whose classes form a basis of H^k.
  std::vector<Vector> representatives;
};

struct CohomologyResult {
  GradedDims dims;
  std::vector<DegreeCohomology> degrees;

  /// Coordinates of the class of `cocycle` in the representative basis of
  /// H^k. Throws std::invalid_argument when `cocycle` is not a cocycle.
  Vector class_of(int k, const Vector& cocycle) const;
  std::size_t dim(int k) const { return dims[k]; }
};

CohomologyResult cohomology(const CochainComplex& c);
CohomologyResult cohomology(const SimplicialComplex& x);
CohomologyResult relative_cohomology(const SimplicialPair& p);

/// ... -> H^k(total, sub) -> H^k(total) -> H^k(sub) -> H^{k+1}(total, sub) -> ...
/// bracketed by zero slots, with all maps explicit on representative bases.
lesolve::ExactSequenceTemplate pair_long_exact_sequence(const SimplicialPair& p);

/// Pullback of cochains C^k(y) -> C^k(x) along the vertex map f: x -> y.
Matrix cochain_pullback(const SimplicialComplex& x, const SimplicialComplex& y,
                        const VertexMap& f, int k);

/// Per-degree matrices of f^*: H^k(y) -> H^k(x) on representative bases, for
/// k = 0..max(dim x, dim y). Throws non_simplicial_map if f is undefined on a
/// vertex of x or sends a simplex of x outside y.
std::vector<Matrix> induced_map(const SimplicialComplex& x, const SimplicialComplex& y,
                                const VertexMap& f);
std::vector<Matrix> induced_map(const SimplicialComplex& x, const CohomologyResult& hx,
                                const SimplicialComplex& y, const CohomologyResult& hy,
                                const VertexMap& f);

/// Product of Poincare polynomials.
GradedDims kunneth_poly(const GradedDims& p, const GradedDims& q);

/// x followed by a copy of y whose labels are shifted past max_vertex(x).
SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y);

}  // namespace orbitseq::complexes
