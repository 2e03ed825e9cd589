#pragma once

// Small standard triangulations used by fixtures, tests and benchmarks.

#include <utility>
#include <vector>

#include "orbitseq/complexes.hpp"

namespace orbitseq::models {

using complexes::SimplicialComplex;
using complexes::Vertex;

SimplicialComplex point();
/// n isolated vertices 0..n-1.
SimplicialComplex points(int n);
/// Vertices 0, 1 and the edge between them.
SimplicialComplex interval();
/// Cycle graph on n >= 3 vertices: a circle.
SimplicialComplex polygon(int n);
/// Boundary of the (d+1)-simplex on vertices 0..d+1: a d-sphere.
SimplicialComplex sphere(int d);
/// The full d-simplex on vertices 0..d.
SimplicialComplex simplex(int d);
/// Icosahedron boundary, labelled so that v and v + 6 are antipodal.
SimplicialComplex icosahedron();
std::vector<std::pair<Vertex, Vertex>> icosahedron_antipodal_pairs();
/// Six-vertex real projective plane.
SimplicialComplex projective_plane();
/// 3 x 3 grid torus (9 vertices, 18 triangles).
SimplicialComplex torus();

}  // namespace orbitseq::models
