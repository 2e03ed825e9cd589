#include <gtest/gtest.h>

#include "orbitseq/fixtures.hpp"
#include "orbitseq/gysin.hpp"
#include "orbitseq/models.hpp"

namespace {

using namespace orbitseq::gysin;
using orbitseq::complexes::cohomology;
using orbitseq::complexes::relative_cohomology;
namespace fixtures = orbitseq::fixtures;
namespace models = orbitseq::models;
namespace lesolve = orbitseq::lesolve;

GysinInput free_over_circle() {
  SimplicialComplex none;
  return GysinInput{SimplicialPair(models::polygon(3), none), none, Involution::identity(none), 4,
                    {}};
}

// S4 as the suspension of S3: orbit space [0,1], fixed points at both ends.
GysinInput semi_free_suspension() {
  auto ends = models::points(2);
  return GysinInput{SimplicialPair(models::interval(), ends), ends, Involution::identity(ends), 4,
                    {}};
}

TEST(Assemble, FreeActionOverCircleIsUnique) {
  const auto r = assemble(free_over_circle());
  ASSERT_TRUE(r.unique());
  EXPECT_EQ(r.poincare_polynomials().front(), GradedDims({1, 1, 0, 1, 1}));
}

TEST(Assemble, ConnectedSumWithOnlyH0Pinned) {
  auto g = fixtures::fixture("cp2_sum");
  g.known_total = {{0, 1}};
  const auto r = assemble(g);
  ASSERT_TRUE(r.unique());
  EXPECT_EQ(r.total_profiles.front(), (std::vector<std::size_t>{1, 0, 2, 0, 1}));
  EXPECT_EQ(r.terms.middle, GradedDims({0, 0, 2, 0, 1}));
}

TEST(Assemble, FullySingularOrbitSpaceCopiesOrbitCohomology) {
  const auto q = models::polygon(3);
  SimplicialComplex none;
  const GysinInput g{SimplicialPair(q, q), none, Involution::identity(none), 3, {}};
  const auto r = assemble(g);
  EXPECT_TRUE(r.terms.middle.is_zero());
  ASSERT_TRUE(r.unique());
  EXPECT_EQ(r.poincare_polynomials().front(), cohomology(q).dims);
  // Every H^{i+1}(M/S3) -> H^{i+1}(M) arrow is an isomorphism.
  const auto& slots = r.sequence.slots();
  for (std::size_t i = 2; i + 1 < slots.size(); i += 3) {
    const auto& range = r.solve.ranks[i];
    EXPECT_EQ(range.min, *slots[i].dim);
    EXPECT_EQ(range.max, *slots[i].dim);
  }
}

TEST(Assemble, InconsistentKnownDimsAreReported) {
  auto g = fixtures::fixture("cp2_sum");
  g.known_total[2] = 1;
  const auto r = assemble(g);
  EXPECT_FALSE(r.solve.consistent);
  EXPECT_TRUE(r.total_profiles.empty());
}

TEST(Assemble, TemplateLayout) {
  const auto r = assemble(fixtures::fixture("cp2_sum"));
  const auto& s = r.sequence.slots();
  ASSERT_EQ(s.size() % 3, 0u);
  EXPECT_EQ(s.front().label, "H^-1(M)");
  EXPECT_EQ(s[1].degree, -1);
  EXPECT_EQ(s[2].label, "H^0(M/S3)");
  EXPECT_EQ(s[2].degree, 0);
  EXPECT_EQ(s.back().dim, 0u);
  // middle_i sits between H^i(M) and H^{i+1}(M/S3).
  EXPECT_EQ(s[10].label, "H^-1(M/S3,Sigma/S3) + H^0(M^S1)^-Z2");
  EXPECT_EQ(s[10].dim, 2u);
}

TEST(Assemble, MiddleDecomposition) {
  for (const auto& name : fixtures::names()) {
    const auto g = fixtures::fixture(name);
    const auto r = assemble(g);
    const auto rel = relative_cohomology(g.orbit_pair).dims;
    const auto anti =
        orbitseq::equivariant::split_involution(g.j_involution).antisymmetric;
    for (int i = -1; i <= g.degree_bound + 4; ++i) {
      EXPECT_EQ(r.terms.middle[i], rel[i - 3] + anti[i - 2]) << name << " i=" << i;
    }
  }
}

TEST(Assemble, FixturesSolveToDocumentedProfiles) {
  for (const auto& name : fixtures::names()) {
    const auto f = fixtures::entry(name);
    const auto r = assemble(f.input);
    ASSERT_TRUE(r.solve.consistent) << name;
    EXPECT_EQ(r.total_profiles, f.expected_profiles) << name;
    for (std::size_t a = 0; a < r.solve.assignments.size(); ++a) {
      std::vector<lesolve::Slot> slots = r.sequence.slots();
      const auto dims = r.solve.completed(r.sequence, a);
      for (std::size_t i = 0; i < slots.size(); ++i) slots[i].dim = dims[i];
      EXPECT_TRUE(lesolve::alternating_sum_check(lesolve::ExactSequenceTemplate(slots))) << name;
    }
  }
}

TEST(Specialization, SemiFreeMatchesReducedSequence) {
  const auto g = semi_free_suspension();
  const auto r = assemble(g);
  EXPECT_TRUE(lesolve::same_shape(r.sequence, reduced_sequence(g.orbit_pair, 4, {})));
  ASSERT_TRUE(r.unique());
  EXPECT_EQ(r.poincare_polynomials().front(), GradedDims({1, 0, 0, 0, 1}));
}

TEST(Specialization, TrivialJActionMatchesReducedSequence) {
  for (const char* name : {"rp2_x_s1", "ineffective_s1", "s3_x_s1"}) {
    const auto g = fixtures::fixture(name);
    EXPECT_TRUE(lesolve::same_shape(assemble(g).sequence,
                                    reduced_sequence(g.orbit_pair, g.degree_bound, g.known_total)))
        << name;
  }
  // A nontrivial exotic term breaks the equality.
  const auto cp2 = fixtures::fixture("cp2_sum");
  EXPECT_FALSE(lesolve::same_shape(assemble(cp2).sequence,
                                   reduced_sequence(cp2.orbit_pair, 4, cp2.known_total)));
}

TEST(E2Rows, ConnectedSum) {
  const auto rows = e2_rows(fixtures::fixture("cp2_sum"));
  EXPECT_EQ(rows[0], GradedDims({1}));
  EXPECT_TRUE(rows[1].is_zero());
  EXPECT_EQ(rows[2], GradedDims({2}));
  EXPECT_EQ(rows[3], GradedDims({0, 1}));
}

TEST(E2Rows, EmptyFixedSetAndEmptySigma) {
  const auto rows = e2_rows(free_over_circle());
  EXPECT_TRUE(rows[2].is_zero());
  EXPECT_EQ(rows[3], rows[0]);
}

TEST(Duality, Examples) {
  const auto cp2 = duality_report(fixtures::fixture("cp2_sum"));
  EXPECT_TRUE(cp2.obstructed);
  EXPECT_EQ(cp2.degrees, (std::vector<int>{0}));
  EXPECT_NE(cp2.text.find("degree 0"), std::string::npos);

  EXPECT_FALSE(duality_report(semi_free_suspension()).obstructed);
  EXPECT_FALSE(duality_report(fixtures::fixture("rp2_x_s1")).obstructed);
  EXPECT_FALSE(duality_report(fixtures::fixture("s2_x_s1_twisted")).obstructed);
}

TEST(Validation, RejectsBadInputs) {
  auto g = fixtures::fixture("cp2_sum");
  g.known_total[5] = 0;
  EXPECT_THROW(assemble(g), malformed_input);

  auto h = fixtures::fixture("cp2_sum");
  h.fixed_circle_set = models::points(3);
  EXPECT_THROW(assemble(h), malformed_input);

  auto n = fixtures::fixture("s3_x_s1");
  n.degree_bound = -1;
  n.known_total.clear();
  EXPECT_THROW(assemble(n), malformed_input);
}

TEST(Fixtures, Lookup) {
  EXPECT_EQ(fixtures::names().size(), 7u);
  EXPECT_THROW(fixtures::fixture("klein_bottle"), fixtures::unknown_fixture);
  EXPECT_EQ(fixtures::entry("s3_x_s1").expected_profiles,
            (std::vector<std::vector<std::size_t>>{{1, 1, 0, 1, 1}}));
  EXPECT_EQ(fixtures::entry("s2_x_s1_trivial").expected_profiles,
            (std::vector<std::vector<std::size_t>>{{1, 1, 1, 1}}));
  EXPECT_EQ(fixtures::entry("rp2_x_s1").expected_profiles,
            (std::vector<std::vector<std::size_t>>{{1, 1, 0, 0}}));
}

}  // namespace
