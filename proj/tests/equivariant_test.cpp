#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "orbitseq/equivariant.hpp"
#include "orbitseq/models.hpp"

namespace {

using namespace orbitseq::equivariant;
using orbitseq::complexes::cohomology;
using orbitseq::complexes::disjoint_union;
using orbitseq::complexes::GradedDims;
using orbitseq::exactla::Matrix;
namespace models = orbitseq::models;

Involution antipodal_icosahedron() {
  return Involution(models::icosahedron(), models::icosahedron_antipodal_pairs());
}

Involution swap_copies(const SimplicialComplex& x) {
  const int shift = x.max_vertex() + 1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto v : x.vertices()) pairs.emplace_back(v, v + shift);
  return Involution(disjoint_union(x, x), pairs);
}

Involution hexagon_deck() { return Involution(models::polygon(6), {{0, 3}, {1, 4}, {2, 5}}); }

TEST(Involution, Validation) {
  // Swapping the ends of one edge of a path 0-1-2 is not simplicial.
  const auto path = SimplicialComplex::closure_of({{0, 1}, {1, 2}});
  EXPECT_THROW(Involution(path, {{0, 1}}), malformed_involution);
  EXPECT_NO_THROW(Involution(path, {{0, 2}}));
  EXPECT_THROW(Involution(path, {{0, 2}, {2, 1}}), malformed_involution);
  EXPECT_THROW(Involution(path, {{0, 7}}), malformed_involution);
  // A 3-cycle is not an involution.
  EXPECT_THROW(Involution::from_map(models::polygon(3), VertexMap{{0, 1}, {1, 2}, {2, 0}}),
               malformed_involution);
  EXPECT_NO_THROW(Involution::from_map(models::polygon(4), VertexMap{{0, 2}, {1, 1}, {2, 0}, {3, 3}}));
}

TEST(Split, IdentityHasNoAntisymmetricPart) {
  const auto s = split_involution(Involution::identity(models::torus()));
  EXPECT_TRUE(s.antisymmetric.is_zero());
  EXPECT_EQ(s.symmetric, GradedDims({1, 2, 1}));
}

TEST(Split, AntipodalSphere) {
  const auto s = split_involution(antipodal_icosahedron());
  EXPECT_EQ(s.symmetric, GradedDims({1, 0, 0}));
  EXPECT_EQ(s.antisymmetric, GradedDims({0, 0, 1}));
  // The induced map is Id on H^0 and -Id on H^2.
  const auto maps = induced_involution(antipodal_icosahedron());
  EXPECT_EQ(maps[0], Matrix{{1}});
  EXPECT_EQ(maps[2], Matrix{{-1}});
}

TEST(Split, SwapOfTwoCircles) {
  const auto s = split_involution(swap_copies(models::polygon(3)));
  EXPECT_EQ(s.symmetric, GradedDims({1, 1}));
  EXPECT_EQ(s.antisymmetric, GradedDims({1, 1}));
}

TEST(Quotient, TrivialAndSwap) {
  EXPECT_EQ(quotient_complex(Involution::identity(models::torus())), models::torus());
  EXPECT_EQ(quotient_complex(swap_copies(models::torus())), models::torus());
}

TEST(Quotient, AntipodalIcosahedronIsProjectivePlane) {
  const auto q = quotient_complex(antipodal_icosahedron());
  EXPECT_EQ(q.count(0), 6u);
  EXPECT_EQ(q.count(1), 15u);
  EXPECT_EQ(q.count(2), 10u);
  EXPECT_EQ(cohomology(q).dims, GradedDims({1, 0, 0}));
}

TEST(Quotient, NonRegularActionIsReported) {
  // Flipping an interval fixes the edge while swapping its ends.
  const Involution flip(models::interval(), {{0, 1}});
  try {
    quotient_complex(flip);
    FAIL() << "expected non_regular_action";
  } catch (const non_regular_action& e) {
    EXPECT_EQ(e.offending(), (Simplex{0, 1}));
  }
  // Rotating a square by a half turn is free, but the quotient 2-gon is not a
  // simplicial complex: edges {0,1} and {1,2} collapse onto the same pair.
  EXPECT_FALSE(is_regular(Involution(models::polygon(4), {{0, 2}, {1, 3}})));
  EXPECT_TRUE(is_regular(hexagon_deck()));
}

TEST(Antisymmetric, FourPointsSwappedInPairs) {
  const auto pts = models::points(4);
  EXPECT_EQ(antisym_of_fixed_set(pts, Involution(pts, {{0, 1}, {2, 3}})), GradedDims({2}));
}

TEST(Antisymmetric, EmptyFixedSet) {
  const SimplicialComplex empty;
  EXPECT_TRUE(antisym_of_fixed_set(empty, Involution::identity(empty)).is_zero());
}

TEST(Antisymmetric, HexagonDeckTransformationActsTrivially) {
  // Rotation by three keeps the orientation of the hexagon, so both H^0 and
  // H^1 are invariant.
  const auto maps = induced_involution(hexagon_deck());
  EXPECT_EQ(maps[0], Matrix{{1}});
  EXPECT_EQ(maps[1], Matrix{{1}});
  EXPECT_TRUE(antisym_of_fixed_set(models::polygon(6), hexagon_deck()).is_zero());
  EXPECT_EQ(cohomology(quotient_complex(hexagon_deck())).dims, GradedDims({1, 1}));
}

TEST(Antisymmetric, CarrierMismatch) {
  EXPECT_THROW(antisym_of_fixed_set(models::points(3), Involution::identity(models::points(4))),
               malformed_involution);
}

TEST(Properties, SplittingIdentityAndQuotient) {
  std::mt19937 rng(2024);
  int regular = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto inv = (trial % 3 == 0) ? gen::random_doubled(rng) : gen::random_symmetric(rng);
    const auto total = cohomology(inv.carrier()).dims;
    const auto s = split_involution(inv);
    for (int k = 0; k <= inv.carrier().dimension(); ++k) {
      EXPECT_EQ(s.symmetric[k] + s.antisymmetric[k], total[k]);
    }
    if (is_regular(inv)) {
      EXPECT_EQ(cohomology(quotient_complex(inv)).dims, s.symmetric);
      ++regular;
    }
  }
  EXPECT_GE(regular, 40);
}

TEST(Properties, SwapOfCopiesIsAntisymmetricCopy) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = gen::random_complex(rng, 30);
    EXPECT_EQ(split_involution(swap_copies(x)).antisymmetric, cohomology(x).dims);
  }
}

}  // namespace
