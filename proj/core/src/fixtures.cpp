#include "orbitseq/fixtures.hpp"

#include "orbitseq/models.hpp"

namespace orbitseq::fixtures {

using complexes::SimplicialComplex;
using complexes::SimplicialPair;
using equivariant::Involution;
using gysin::GysinInput;

namespace {

GysinInput make(SimplicialPair orbit, SimplicialComplex fixed,
                std::vector<std::pair<complexes::Vertex, complexes::Vertex>> swaps, int n,
                std::map<int, std::size_t> known) {
  Involution j(fixed, swaps);
  return GysinInput{std::move(orbit), std::move(fixed), std::move(j), n, std::move(known)};
}

SimplicialPair circle_all_singular() {
  return SimplicialPair(models::polygon(3), models::polygon(3));
}

Fixture cp2_sum() {
  // M/S3 = [0,1] with Sigma/S3 its endpoints; M^S1 = {N,S} x {0,1} with j
  // swapping the poles at each end.
  return {"cp2_sum",
          "CP2 # CP2 = (S3 x [0,1])/~ with S3 acting on the left; exotic term R + R",
          make(SimplicialPair(models::interval(), models::points(2)), models::points(4),
               {{0, 1}, {2, 3}}, 4, {{0, 1}, {4, 1}}),
          {{1, 0, 2, 0, 1}}};
}

Fixture s3_x_s1() {
  return {"s3_x_s1", "S3 x S1, free action on the left factor",
          make(SimplicialPair(models::polygon(3), SimplicialComplex{}), SimplicialComplex{}, {}, 4,
               {{0, 1}, {4, 1}}),
          {{1, 1, 0, 1, 1}}};
}

Fixture s2_x_s1_trivial() {
  // Orbits S2; M^S1 = {N,S} x S1 is the trivial double cover of M/S3.
  return {"s2_x_s1_trivial", "S2 x S1, orbits S2, trivial covering M^S1 -> M/S3",
          make(circle_all_singular(),
               complexes::disjoint_union(models::polygon(3), models::polygon(3)),
               {{0, 3}, {1, 4}, {2, 5}}, 3, {{0, 1}, {3, 1}}),
          {{1, 1, 1, 1}}};
}

Fixture s2_x_s1_twisted() {
  // Connected double cover: a hexagon with the deck involution v -> v + 3.
  return {"s2_x_s1_twisted", "S2 x_Z2 S1, orbits S2, nontrivial covering M^S1 -> M/S3",
          make(circle_all_singular(), models::polygon(6), {{0, 3}, {1, 4}, {2, 5}}, 3, {{0, 1}}),
          {{1, 1, 0, 0}}};
}

Fixture rp2_x_s1() {
  return {"rp2_x_s1", "RP2 x S1, orbits RP2, j acting trivially on M^S1",
          make(circle_all_singular(), models::polygon(3), {}, 3, {{0, 1}}), {{1, 1, 0, 0}}};
}

Fixture ineffective_s1() {
  return {"ineffective_s1", "S1 with S3 acting trivially; every orbit a point",
          make(circle_all_singular(), models::polygon(3), {}, 1, {{0, 1}, {1, 1}}), {{1, 1}}};
}

Fixture hopf_like_free() {
  // Free action over S4. The arrow H^0(M/S3) -> H^4(M/S3) (multiplication by
  // the Euler class) has rank 0 or 1; dimensions alone cannot tell which.
  return {"hopf_like_free", "free action over S4; underdetermined without the Euler class",
          make(SimplicialPair(models::sphere(4), SimplicialComplex{}), SimplicialComplex{}, {}, 7,
               {{0, 1}, {7, 1}}),
          {{1, 0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 1, 1, 0, 0, 1}}};
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"cp2_sum",  "s3_x_s1",        "s2_x_s1_trivial",
                                            "s2_x_s1_twisted", "rp2_x_s1", "ineffective_s1",
                                            "hopf_like_free"};
  return all;
}

Fixture entry(std::string_view name) {
  if (name == "cp2_sum") return cp2_sum();
  if (name == "s3_x_s1") return s3_x_s1();
  if (name == "s2_x_s1_trivial") return s2_x_s1_trivial();
  if (name == "s2_x_s1_twisted") return s2_x_s1_twisted();
  if (name == "rp2_x_s1") return rp2_x_s1();
  if (name == "ineffective_s1") return ineffective_s1();
  if (name == "hopf_like_free") return hopf_like_free();
  throw unknown_fixture("unknown fixture '" + std::string(name) + "'");
}

gysin::GysinInput fixture(std::string_view name) { return entry(name).input; }

}  // namespace orbitseq::fixtures
