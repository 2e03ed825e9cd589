#include "orbitseq/gysin.hpp"

#include <algorithm>
#include <sstream>

namespace orbitseq::gysin {

using lesolve::Slot;

void GysinInput::validate() const {
  if (!(j_involution.carrier() == fixed_circle_set)) {
    throw malformed_input("the involution is not defined on the fixed-set complex");
  }
  if (degree_bound < 0) {
    throw malformed_input("degree bound must be nonnegative");
  }
  for (const auto& [k, d] : known_total) {
    if (k < 0 || k > degree_bound) {
      throw malformed_input("H^" + std::to_string(k) + "(M) given outside degrees 0.." +
                            std::to_string(degree_bound));
    }
  }
}

GysinTerms compute_terms(const GysinInput& g) {
  g.validate();
  GysinTerms t;
  t.orbit = complexes::cohomology(g.orbit_pair.total()).dims;
  t.relative = complexes::relative_cohomology(g.orbit_pair).dims;
  t.antisymmetric = equivariant::antisym_of_fixed_set(g.fixed_circle_set, g.j_involution);
  for (const auto& [s, d] : t.relative.entries()) t.middle.add(s + 3, d);
  for (const auto& [s, d] : t.antisymmetric.entries()) t.middle.add(s + 2, d);
  return t;
}

namespace {

std::string deg(int k) { return std::to_string(k); }

Slot total_slot(int i, int degree_bound, const std::map<int, std::size_t>& known) {
  Slot s{"H^" + deg(i) + "(M)", std::nullopt, i};
  if (i < 0 || i > degree_bound) {
    s.dim = 0;
  } else if (auto it = known.find(i); it != known.end()) {
    s.dim = it->second;
  }
  return s;
}

template <typename MiddleLabel>
lesolve::ExactSequenceTemplate build(const GradedDims& orbit, const GradedDims& middle,
                                     int degree_bound, const std::map<int, std::size_t>& known,
                                     MiddleLabel middle_label) {
  const int last = std::max({degree_bound + 1, orbit.top_degree(), middle.top_degree()});
  std::vector<Slot> slots;
  for (int i = -1; i <= last; ++i) {
    slots.push_back(total_slot(i, degree_bound, known));
    slots.push_back(Slot{middle_label(i), middle[i], i});
    slots.push_back(Slot{"H^" + deg(i + 1) + "(M/S3)", orbit[i + 1], i + 1});
  }
  return lesolve::ExactSequenceTemplate(std::move(slots));
}

}  // namespace

lesolve::ExactSequenceTemplate gysin_sequence(const GysinTerms& terms, int degree_bound,
                                              const std::map<int, std::size_t>& known_total) {
  return build(terms.orbit, terms.middle, degree_bound, known_total, [](int i) {
    return "H^" + deg(i - 3) + "(M/S3,Sigma/S3) + H^" + deg(i - 2) + "(M^S1)^-Z2";
  });
}

lesolve::ExactSequenceTemplate reduced_sequence(const SimplicialPair& orbit_pair, int degree_bound,
                                                const std::map<int, std::size_t>& known_total) {
  const GradedDims orbit = complexes::cohomology(orbit_pair.total()).dims;
  GradedDims middle;
  const GradedDims relative = complexes::relative_cohomology(orbit_pair).dims;
  for (const auto& [s, d] : relative.entries()) {
    middle.add(s + 3, d);
  }
  return build(orbit, middle, degree_bound, known_total,
               [](int i) { return "H^" + deg(i - 3) + "(M/S3,A)"; });
}

E2Rows e2_rows(const GysinTerms& terms) {
  return {terms.orbit, GradedDims{}, terms.antisymmetric, terms.relative};
}

E2Rows e2_rows(const GysinInput& g) { return e2_rows(compute_terms(g)); }

DualityReport duality_report(const GysinTerms& terms) {
  DualityReport r;
  for (const auto& [s, d] : terms.antisymmetric.entries()) r.degrees.push_back(s);
  r.obstructed = !r.degrees.empty();
  std::ostringstream text;
  if (r.obstructed) {
    text << "duality: obstructed (exotic term nonzero in fixed-set degree";
    if (r.degrees.size() > 1) text << 's';
    for (std::size_t i = 0; i < r.degrees.size(); ++i) text << (i ? ", " : " ") << r.degrees[i];
    text << ')';
  } else {
    text << "duality: not obstructed (exotic term vanishes)";
  }
  r.text = text.str();
  return r;
}

DualityReport duality_report(const GysinInput& g) { return duality_report(compute_terms(g)); }

GysinReport assemble(const GysinInput& g) {
  GysinTerms terms = compute_terms(g);
  auto sequence = gysin_sequence(terms, g.degree_bound, g.known_total);
  auto solve = lesolve::solve_dims(sequence);

  std::vector<std::vector<std::size_t>> profiles;
  for (std::size_t a = 0; a < solve.assignments.size(); ++a) {
    const auto dims = solve.completed(sequence, a);
    std::vector<std::size_t> profile;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const auto& slot = sequence.slots()[i];
      // Total-space slots are the first of each triple.
      if (i % 3 == 0 && slot.degree && *slot.degree >= 0 && *slot.degree <= g.degree_bound) {
        profile.push_back(dims[i]);
      }
    }
    profiles.push_back(std::move(profile));
  }
  std::sort(profiles.begin(), profiles.end());
  profiles.erase(std::unique(profiles.begin(), profiles.end()), profiles.end());

  GysinReport report{std::move(sequence), terms, std::move(solve), std::move(profiles),
                     e2_rows(terms), duality_report(terms), g.degree_bound};
  return report;
}

std::vector<GradedDims> GysinReport::poincare_polynomials() const {
  std::vector<GradedDims> out;
  for (const auto& p : total_profiles) out.push_back(GradedDims::from_vector(p));
  return out;
}

}  // namespace orbitseq::gysin
