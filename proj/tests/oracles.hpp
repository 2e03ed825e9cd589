#pragma once

// Test-only reference computations. Nothing here calls the library's
// elimination code: ranks come from Leibniz determinants of minors, and
// Betti numbers from homology (boundary maps, not coboundaries) over F_p.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "orbitseq/exactla.hpp"

namespace oracle {

using orbitseq::exactla::Matrix;
using orbitseq::exactla::Rational;

inline Rational leibniz_det(const Matrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      Rational entry = m(rows[i], cols[perm[i]]);
      entry.canonicalize();
      term *= entry;
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Largest k with a nonzero k x k minor. Exponential; keep inputs tiny.
inline std::size_t rank_by_minors(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.rows(), k, rs);
    subsets(m.cols(), k, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        if (leibniz_det(m, r, c) != 0) return k;
      }
    }
  }
  return 0;
}

constexpr std::int64_t kPrime = 1'000'000'007;

inline std::int64_t inverse_mod(std::int64_t a) {
  std::int64_t result = 1, base = ((a % kPrime) + kPrime) % kPrime, e = kPrime - 2;
  while (e) {
    if (e & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return result;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse_mod(a[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = ((a[r][k] - f * a[rank][k]) % kPrime + kPrime) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

using Simplex = std::vector<int>;

/// Betti numbers of the chain complex spanned by `cells` (a face-closed set,
/// or a relative set of the form total minus sub), degrees 0..top.
inline std::vector<std::size_t> betti_mod_p(const std::set<Simplex>& cells, int top) {
  std::map<int, std::vector<Simplex>> by_dim;
  for (const auto& s : cells) by_dim[static_cast<int>(s.size()) - 1].push_back(s);
  auto index_in = [&](int k, const Simplex& s) -> std::ptrdiff_t {
    const auto& v = by_dim[k];
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? -1 : it - v.begin();
  };
  // boundary_rank[k] = rank of d_k : C_k -> C_{k-1}
  std::vector<std::size_t> boundary_rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& ck = by_dim[k];
    const auto& cl = by_dim[k - 1];
    if (ck.empty() || cl.empty()) continue;
    std::vector<std::vector<std::int64_t>> d(cl.size(), std::vector<std::int64_t>(ck.size(), 0));
    for (std::size_t j = 0; j < ck.size(); ++j) {
      for (std::size_t i = 0; i < ck[j].size(); ++i) {
        Simplex face = ck[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto row = index_in(k - 1, face);
        if (row >= 0) d[row][j] = (i % 2 == 0) ? 1 : kPrime - 1;
      }
    }
    boundary_rank[k] = rank_mod_p(std::move(d));
  }
  std::vector<std::size_t> betti;
  for (int k = 0; k <= top; ++k) {
    betti.push_back(by_dim[k].size() - boundary_rank[k] - boundary_rank[k + 1]);
  }
  return betti;
}

}  // namespace oracle
