#include "orbitseq/models.hpp"

namespace orbitseq::models {

using complexes::Simplex;

SimplicialComplex point() { return SimplicialComplex::from_simplices({{0}}); }

SimplicialComplex points(int n) {
  std::vector<Simplex> vs;
  for (int i = 0; i < n; ++i) vs.push_back({i});
  return SimplicialComplex::from_simplices(std::move(vs));
}

SimplicialComplex interval() { return SimplicialComplex::closure_of({{0, 1}}); }

SimplicialComplex polygon(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::closure_of(edges);
}

SimplicialComplex sphere(int d) {
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= d + 1; ++skip) {
    Simplex s;
    for (int v = 0; v <= d + 1; ++v) {
      if (v != skip) s.push_back(v);
    }
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::closure_of(facets);
}

SimplicialComplex simplex(int d) {
  Simplex s;
  for (int v = 0; v <= d; ++v) s.push_back(v);
  return SimplicialComplex::closure_of({s});
}

SimplicialComplex icosahedron() {
  return SimplicialComplex::closure_of({
      {0, 1, 4},  {0, 1, 5},  {0, 2, 3},  {0, 2, 4},  {0, 3, 5},
      {1, 4, 9},  {1, 5, 8},  {1, 8, 9},  {2, 3, 7},  {2, 4, 11},
      {2, 7, 11}, {3, 5, 10}, {3, 7, 10}, {4, 9, 11}, {5, 8, 10},
      {6, 7, 10}, {6, 7, 11}, {6, 8, 9},  {6, 8, 10}, {6, 9, 11},
  });
}

std::vector<std::pair<Vertex, Vertex>> icosahedron_antipodal_pairs() {
  return {{0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}};
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::closure_of({
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
  });
}

SimplicialComplex torus() {
  auto label = [](int i, int j) { return 3 * ((i + 3) % 3) + (j + 3) % 3; };
  std::vector<Simplex> triangles;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      triangles.push_back({label(i, j), label(i + 1, j), label(i + 1, j + 1)});
      triangles.push_back({label(i, j), label(i, j + 1), label(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::closure_of(triangles);
}

}  // namespace orbitseq::models
