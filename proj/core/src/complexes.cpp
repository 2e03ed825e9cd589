#include "orbitseq/complexes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace orbitseq::complexes {

// ---------------------------------------------------------------- GradedDims

GradedDims::GradedDims(std::initializer_list<std::size_t> by_degree) {
  int k = 0;
  for (std::size_t d : by_degree) set(k++, d);
}

GradedDims GradedDims::from_vector(const std::vector<std::size_t>& by_degree) {
  GradedDims g;
  for (std::size_t k = 0; k < by_degree.size(); ++k) g.set(static_cast<int>(k), by_degree[k]);
  return g;
}

std::size_t GradedDims::operator[](int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDims::set(int degree, std::size_t value) {
  if (value == 0) {
    dims_.erase(degree);
  } else {
    dims_[degree] = value;
  }
}

void GradedDims::add(int degree, std::size_t value) { set(degree, (*this)[degree] + value); }

int GradedDims::top_degree() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

std::vector<std::size_t> GradedDims::to_vector(std::optional<int> up_to) const {
  const int top = up_to.value_or(top_degree());
  std::vector<std::size_t> v;
  for (int k = 0; k <= top; ++k) v.push_back((*this)[k]);
  return v;
}

long long GradedDims::evaluate(long long t) const {
  long long total = 0;
  for (const auto& [k, d] : dims_) {
    long long term = static_cast<long long>(d);
    for (int i = 0; i < k; ++i) term *= t;
    total += term;
  }
  return total;
}

std::string GradedDims::polynomial(const std::string& variable) const {
  if (dims_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, d] : dims_) {
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << d;
      continue;
    }
    if (d != 1) out << d;
    out << variable;
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

// ---------------------------------------------------------------- simplices

Simplex normalize(Simplex s) {
  if (s.empty()) throw malformed_complex("empty simplex");
  std::sort(s.begin(), s.end());
  if (s.front() < 0) throw malformed_complex("negative vertex label in " + to_string(s));
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw malformed_complex("repeated vertex in " + to_string(s));
  }
  return s;
}

std::string to_string(const Simplex& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  out << '}';
  return out.str();
}

namespace {

std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> faces;
  if (s.size() < 2) return faces;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) f.push_back(s[j]);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::map<Simplex, int> sorted) {
  for (auto& [s, unused] : sorted) {
    const std::size_t k = s.size() - 1;
    if (by_dim_.size() <= k) {
      by_dim_.resize(k + 1);
      index_.resize(k + 1);
    }
    index_[k].emplace(s, by_dim_[k].size());
    by_dim_[k].push_back(s);
  }
  // Map iteration visits each layer in lexicographic order.
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::map<Simplex, int> all;
  for (auto& s : simplices) all.emplace(normalize(std::move(s)), 0);
  for (const auto& [s, unused] : all) {
    for (const auto& f : facets_of(s)) {
      if (!all.count(f)) {
        throw malformed_complex("face " + to_string(f) + " of " + to_string(s) +
                                " is missing (complex not closed under faces)");
      }
    }
  }
  return SimplicialComplex(std::move(all));
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Simplex>& simplices) {
  std::map<Simplex, int> all;
  std::vector<Simplex> pending;
  for (const auto& s : simplices) pending.push_back(normalize(s));
  while (!pending.empty()) {
    Simplex s = std::move(pending.back());
    pending.pop_back();
    if (all.count(s)) continue;
    for (auto& f : facets_of(s)) pending.push_back(std::move(f));
    all.emplace(std::move(s), 0);
  }
  return SimplicialComplex(std::move(all));
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return by_dim_[k].size();
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dimension()) return none;
  return by_dim_[k];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k > dimension()) return std::nullopt;
  auto it = index_[k].find(s);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> vs;
  for (const auto& s : simplices(0)) vs.push_back(s.front());
  return vs;
}

Vertex SimplicialComplex::max_vertex() const {
  return empty() ? -1 : by_dim_[0].back().front();
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& layer : by_dim_) {
    for (const auto& s : layer) {
      if (!other.contains(s)) return false;
    }
  }
  return true;
}

SimplicialPair::SimplicialPair(SimplicialComplex total, SimplicialComplex sub)
    : total_(std::move(total)), sub_(std::move(sub)) {
  for (const auto& s : sub_.all_simplices()) {
    if (!total_.contains(s)) {
      throw malformed_pair("simplex " + to_string(s) + " of the subcomplex is not in the complex");
    }
  }
}

// ---------------------------------------------------------------- cochains

Matrix coboundary_matrix(const SimplicialComplex& x, int k) {
  Matrix d(x.count(k + 1), x.count(k));
  const auto& cofaces = x.simplices(k + 1);
  for (std::size_t row = 0; row < cofaces.size(); ++row) {
    const auto faces = facets_of(cofaces[row]);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      d(row, *x.index_of(faces[i])) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

CochainComplex cochains(const SimplicialComplex& x) {
  CochainComplex c;
  for (int k = 0; k <= x.dimension(); ++k) {
    c.dims.push_back(x.count(k));
    c.coboundaries.push_back(coboundary_matrix(x, k));
  }
  return c;
}

namespace {

/// Per degree, the indices (in total's ordering) of simplices outside sub.
std::vector<std::vector<std::size_t>> relative_support(const SimplicialPair& p) {
  std::vector<std::vector<std::size_t>> support;
  for (int k = 0; k <= p.total().dimension(); ++k) {
    std::vector<std::size_t> idx;
    const auto& layer = p.total().simplices(k);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (!p.sub().contains(layer[i])) idx.push_back(i);
    }
    support.push_back(std::move(idx));
  }
  return support;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  }
  return out;
}

const std::vector<std::size_t>& support_at(const std::vector<std::vector<std::size_t>>& s, int k) {
  static const std::vector<std::size_t> none;
  return (k < 0 || k >= static_cast<int>(s.size())) ? none : s[k];
}

}  // namespace

CochainComplex relative_cochains(const SimplicialPair& p) {
  const auto support = relative_support(p);
  CochainComplex c;
  for (int k = 0; k <= p.total().dimension(); ++k) {
    c.dims.push_back(support[k].size());
    c.coboundaries.push_back(
        submatrix(coboundary_matrix(p.total(), k), support_at(support, k + 1), support[k]));
  }
  return c;
}

// ---------------------------------------------------------------- cohomology

CohomologyResult cohomology(const CochainComplex& c) {
  CohomologyResult result;
  const std::size_t top = c.dims.size();
  for (std::size_t k = 0; k < top; ++k) {
    DegreeCohomology d;
    d.cochain_dim = c.dims[k];
    d.cocycle_basis = exactla::kernel_basis(c.coboundaries[k]);
    if (k > 0) {
      const Matrix& incoming = c.coboundaries[k - 1];
      for (std::size_t col : exactla::independent_columns(incoming)) {
        d.coboundary_basis.push_back(incoming.column(col));
      }
    }
    // Complete the coboundary basis to a cocycle basis, scanning kernel
    // vectors in order; the kernel vectors that become pivots are the
    // representatives.
    const std::size_t nb = d.coboundary_basis.size();
    std::vector<Vector> columns = d.coboundary_basis;
    columns.insert(columns.end(), d.cocycle_basis.begin(), d.cocycle_basis.end());
    for (std::size_t col : exactla::independent_columns(Matrix::from_columns(d.cochain_dim, columns))) {
      if (col >= nb) d.representatives.push_back(columns[col]);
    }
    result.dims.set(static_cast<int>(k), d.representatives.size());
    result.degrees.push_back(std::move(d));
  }
  return result;
}

CohomologyResult cohomology(const SimplicialComplex& x) { return cohomology(cochains(x)); }

CohomologyResult relative_cohomology(const SimplicialPair& p) {
  return cohomology(relative_cochains(p));
}

Vector CohomologyResult::class_of(int k, const Vector& cocycle) const {
  if (k < 0 || k >= static_cast<int>(degrees.size())) {
    if (!cocycle.empty()) throw std::invalid_argument("cochain given in a degree with no cochains");
    return {};
  }
  const auto& d = degrees[k];
  std::vector<Vector> columns = d.representatives;
  columns.insert(columns.end(), d.coboundary_basis.begin(), d.coboundary_basis.end());
  const auto s = exactla::solve(Matrix::from_columns(d.cochain_dim, columns), cocycle);
  if (!s.found) {
    throw std::invalid_argument("vector is not a cocycle in degree " + std::to_string(k));
  }
  return Vector(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(d.representatives.size()));
}

namespace {

const std::vector<Vector>& representatives_at(const CohomologyResult& h, int k) {
  static const std::vector<Vector> none;
  return (k < 0 || k >= static_cast<int>(h.degrees.size())) ? none : h.degrees[k].representatives;
}

Matrix columns_or_empty(std::size_t rows, const std::vector<Vector>& cols) {
  return cols.empty() ? Matrix(rows, 0) : Matrix::from_columns(rows, cols);
}

}  // namespace

lesolve::ExactSequenceTemplate pair_long_exact_sequence(const SimplicialPair& p) {
  const auto& x = p.total();
  const auto& a = p.sub();
  const auto support = relative_support(p);
  const CohomologyResult h_rel = relative_cohomology(p);
  const CohomologyResult h_x = cohomology(x);
  const CohomologyResult h_a = cohomology(a);

  std::vector<lesolve::Slot> slots{lesolve::Slot::zero()};
  std::vector<std::optional<Matrix>> maps;
  maps.emplace_back(Matrix(h_rel.dim(0), 0));

  const int top = x.dimension();
  for (int k = 0; k <= top; ++k) {
    const std::string deg = std::to_string(k);
    slots.push_back({"H^" + deg + "(X,A)", h_rel.dim(k), k});
    slots.push_back({"H^" + deg + "(X)", h_x.dim(k), k});
    slots.push_back({"H^" + deg + "(A)", h_a.dim(k), k});

    // H^k(X,A) -> H^k(X): extend relative cocycles by zero.
    std::vector<Vector> cols;
    for (const auto& r : representatives_at(h_rel, k)) {
      Vector v(x.count(k));
      for (std::size_t i = 0; i < r.size(); ++i) v[support[k][i]] = r[i];
      cols.push_back(h_x.class_of(k, v));
    }
    maps.emplace_back(columns_or_empty(h_x.dim(k), cols));

    // H^k(X) -> H^k(A): restrict.
    cols.clear();
    for (const auto& z : representatives_at(h_x, k)) {
      Vector v(a.count(k));
      const auto& layer = a.simplices(k);
      for (std::size_t i = 0; i < layer.size(); ++i) v[i] = z[*x.index_of(layer[i])];
      cols.push_back(h_a.class_of(k, v));
    }
    maps.emplace_back(columns_or_empty(h_a.dim(k), cols));

    // H^k(A) -> H^{k+1}(X,A): extend by zero, apply delta on X, restrict to
    // the relative support.
    cols.clear();
    const std::size_t next_dim = h_rel.dim(k + 1);
    if (k < top) {
      const Matrix delta = coboundary_matrix(x, k);
      for (const auto& z : representatives_at(h_a, k)) {
        Vector v(x.count(k));
        const auto& layer = a.simplices(k);
        for (std::size_t i = 0; i < layer.size(); ++i) v[*x.index_of(layer[i])] = z[i];
        const Vector dv = delta.apply(v);
        Vector rel(support[k + 1].size());
        for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = dv[support[k + 1][i]];
        cols.push_back(h_rel.class_of(k + 1, rel));
      }
      maps.emplace_back(columns_or_empty(next_dim, cols));
    } else {
      maps.emplace_back(Matrix(0, h_a.dim(k)));
    }
  }
  slots.push_back(lesolve::Slot::zero());
  return lesolve::ExactSequenceTemplate(std::move(slots), std::move(maps));
}

// ---------------------------------------------------------------- maps

Matrix cochain_pullback(const SimplicialComplex& x, const SimplicialComplex& y,
                        const VertexMap& f, int k) {
  Matrix m(x.count(k), y.count(k));
  const auto& layer = x.simplices(k);
  for (std::size_t row = 0; row < layer.size(); ++row) {
    const Simplex& s = layer[row];
    std::vector<Vertex> image;
    image.reserve(s.size());
    for (Vertex v : s) {
      auto it = f.find(v);
      if (it == f.end()) {
        throw non_simplicial_map("vertex " + std::to_string(v) + " has no image");
      }
      image.push_back(it->second);
    }
    // Sign of the permutation sorting the image; degenerate images pull back to 0.
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] > image[j]) sign = -sign;
      }
    }
    Simplex sorted = image;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto target = y.index_of(sorted);
    if (!target) {
      throw non_simplicial_map("image " + to_string(sorted) + " of " + to_string(s) +
                               " is not a simplex of the target");
    }
    if (sorted.size() == s.size()) m(row, *target) = sign;
  }
  return m;
}

std::vector<Matrix> induced_map(const SimplicialComplex& x, const SimplicialComplex& y,
                                const VertexMap& f) {
  return induced_map(x, cohomology(x), y, cohomology(y), f);
}

std::vector<Matrix> induced_map(const SimplicialComplex& x, const CohomologyResult& hx,
                                const SimplicialComplex& y, const CohomologyResult& hy,
                                const VertexMap& f) {
  // Validate every simplex, including those in degrees above dim y.
  for (int k = 0; k <= x.dimension(); ++k) (void)cochain_pullback(x, y, f, k);

  const int top = std::max(x.dimension(), y.dimension());
  std::vector<Matrix> maps;
  for (int k = 0; k <= top; ++k) {
    const auto& reps = representatives_at(hy, k);
    Matrix m(hx.dim(k), reps.size());
    if (!reps.empty() && hx.dim(k) > 0) {
      const Matrix pull = cochain_pullback(x, y, f, k);
      for (std::size_t c = 0; c < reps.size(); ++c) {
        const Vector coords = hx.class_of(k, pull.apply(reps[c]));
        for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
      }
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

GradedDims kunneth_poly(const GradedDims& p, const GradedDims& q) {
  GradedDims out;
  for (const auto& [a, pa] : p.entries()) {
    for (const auto& [b, qb] : q.entries()) out.add(a + b, pa * qb);
  }
  return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& x, const SimplicialComplex& y) {
  const Vertex shift = x.max_vertex() + 1;
  std::vector<Simplex> all = x.all_simplices();
  for (auto s : y.all_simplices()) {
    for (auto& v : s) v += shift;
    all.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(std::move(all));
}

}  // namespace orbitseq::complexes
