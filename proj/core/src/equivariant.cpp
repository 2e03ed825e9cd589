#include "orbitseq/equivariant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbitseq::equivariant {

using complexes::to_string;

Involution::Involution(SimplicialComplex carrier,
                       const std::vector<std::pair<Vertex, Vertex>>& swaps)
    : carrier_(std::move(carrier)) {
  for (Vertex v : carrier_.vertices()) map_[v] = v;
  std::set<Vertex> seen;
  for (const auto& [a, b] : swaps) {
    for (Vertex v : {a, b}) {
      if (!map_.count(v)) {
        throw malformed_involution("vertex " + std::to_string(v) + " is not in the complex");
      }
    }
    if (a == b) continue;
    if (!seen.insert(a).second || !seen.insert(b).second) {
      throw malformed_involution("vertex listed in more than one swap: " + std::to_string(a) +
                                 " <-> " + std::to_string(b));
    }
    map_[a] = b;
    map_[b] = a;
  }
  validate();
}

Involution Involution::from_map(SimplicialComplex carrier, VertexMap vertex_map) {
  Involution inv = identity(std::move(carrier));
  inv.map_ = std::move(vertex_map);
  const auto& map_ = inv.map_;
  const auto vs = inv.carrier_.vertices();
  if (map_.size() != vs.size()) {
    throw malformed_involution("vertex map must be defined exactly on the complex's vertices");
  }
  for (Vertex v : vs) {
    auto it = map_.find(v);
    if (it == map_.end() || !map_.count(it->second)) {
      throw malformed_involution("vertex map is not a self-map of the vertices at " +
                                 std::to_string(v));
    }
    if (map_.at(it->second) != v) {
      throw malformed_involution("vertex map is not involutive at " + std::to_string(v));
    }
  }
  inv.validate();
  return inv;
}

Involution Involution::identity(SimplicialComplex carrier) {
  return Involution(std::move(carrier), std::vector<std::pair<Vertex, Vertex>>{});
}

void Involution::validate() const {
  for (const auto& s : carrier_.all_simplices()) {
    if (!carrier_.contains(image(s))) {
      throw malformed_involution("image of " + to_string(s) + " is not a simplex");
    }
  }
}

Simplex Involution::image(const Simplex& s) const {
  Simplex t;
  t.reserve(s.size());
  for (Vertex v : s) t.push_back(map_.at(v));
  std::sort(t.begin(), t.end());
  return t;
}

bool Involution::is_trivial() const {
  return std::all_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.first == kv.second; });
}

std::vector<std::pair<Vertex, Vertex>> Involution::swaps() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [a, b] : map_) {
    if (a < b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<complexes::Matrix> induced_involution(const Involution& inv) {
  const auto h = complexes::cohomology(inv.carrier());
  return complexes::induced_map(inv.carrier(), h, inv.carrier(), h, inv.vertex_map());
}

SplitCohomology split_involution(const Involution& inv) {
  SplitCohomology split;
  const auto maps = induced_involution(inv);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    split.symmetric.set(static_cast<int>(k), exactla::eigenspace_dim(maps[k], 1));
    split.antisymmetric.set(static_cast<int>(k), exactla::eigenspace_dim(maps[k], -1));
  }
  return split;
}

namespace {

Vertex orbit_label(const Involution& inv, Vertex v) { return std::min(v, inv(v)); }

Simplex orbit_image(const Involution& inv, const Simplex& s) {
  Simplex t;
  for (Vertex v : s) t.push_back(orbit_label(inv, v));
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

void require_regular(const Involution& inv) {
  std::map<Simplex, Simplex> first_preimage;
  for (const auto& s : inv.carrier().all_simplices()) {
    Simplex img = orbit_image(inv, s);
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
      throw non_regular_action("simplex " + to_string(s) + " contains two vertices of one orbit", s);
    }
    auto [it, inserted] = first_preimage.emplace(std::move(img), s);
    if (!inserted && it->second != s && it->second != inv.image(s)) {
      throw non_regular_action("simplices " + to_string(it->second) + " and " + to_string(s) +
                                   " lie in different orbits but have the same quotient image",
                               s);
    }
  }
}

bool is_regular(const Involution& inv) {
  try {
    require_regular(inv);
    return true;
  } catch (const non_regular_action&) {
    return false;
  }
}

SimplicialComplex quotient_complex(const Involution& inv) {
  require_regular(inv);
  std::vector<Simplex> images;
  for (const auto& s : inv.carrier().all_simplices()) images.push_back(orbit_image(inv, s));
  return SimplicialComplex::closure_of(images);
}

GradedDims antisym_of_fixed_set(const SimplicialComplex& k, const Involution& inv) {
  if (!(inv.carrier() == k)) {
    throw malformed_involution("involution is not defined on the given complex");
  }
  return split_involution(inv).antisymmetric;
}

}  // namespace orbitseq::equivariant
