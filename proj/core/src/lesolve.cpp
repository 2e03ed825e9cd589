#include "orbitseq/lesolve.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace orbitseq::lesolve {

using exactla::Matrix;

namespace {

std::string slot_name(const std::vector<Slot>& slots, std::size_t i) {
  return "slot " + std::to_string(i) + " (" + slots[i].label + ")";
}

}  // namespace

ExactSequenceTemplate::ExactSequenceTemplate(std::vector<Slot> slots)
    : ExactSequenceTemplate(std::move(slots), {}) {}

ExactSequenceTemplate::ExactSequenceTemplate(std::vector<Slot> slots,
                                             std::vector<std::optional<Matrix>> maps)
    : slots_(std::move(slots)), maps_(std::move(maps)) {
  if (slots_.empty()) {
    throw malformed_template("exact sequence template has no slots");
  }
  if (slots_.front().dim != std::size_t{0} || slots_.back().dim != std::size_t{0}) {
    throw malformed_template("exact sequence template must start and end with a zero slot");
  }
  const std::size_t arrows = slots_.size() - 1;
  if (maps_.empty()) {
    maps_.resize(arrows);
  } else if (maps_.size() != arrows) {
    throw malformed_template("expected " + std::to_string(arrows) + " maps, got " +
                             std::to_string(maps_.size()));
  }
  for (std::size_t i = 0; i < arrows; ++i) {
    const auto& from = slots_[i].dim;
    const auto& to = slots_[i + 1].dim;
    auto& map = maps_[i];
    if (!map) {
      // Arrows touching a known zero slot have only one possible matrix.
      if (from && to && (*from == 0 || *to == 0)) map = Matrix(*to, *from);
      continue;
    }
    if ((from && map->cols() != *from) || (to && map->rows() != *to)) {
      throw malformed_template("map " + slot_name(slots_, i) + " -> " +
                               slot_name(slots_, i + 1) + " has shape " +
                               std::to_string(map->rows()) + "x" +
                               std::to_string(map->cols()));
    }
  }
}

bool ExactSequenceTemplate::all_known() const {
  return std::all_of(slots_.begin(), slots_.end(), [](const Slot& s) { return s.dim.has_value(); });
}

bool ExactSequenceTemplate::all_maps_present() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const auto& m) { return m.has_value(); });
}

ExactSequenceTemplate ExactSequenceTemplate::with_dim(std::size_t slot,
                                                      std::optional<std::size_t> dim) const {
  auto slots = slots_;
  slots.at(slot).dim = dim;
  return ExactSequenceTemplate(std::move(slots));
}

bool same_shape(const ExactSequenceTemplate& a, const ExactSequenceTemplate& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.slots()[i].dim != b.slots()[i].dim || a.slots()[i].degree != b.slots()[i].degree) {
      return false;
    }
  }
  return true;
}

std::vector<PositionVerdict> check_exact(const ExactSequenceTemplate& t) {
  if (!t.all_known()) {
    throw malformed_template("check_exact needs every slot dimension known");
  }
  const auto& slots = t.slots();
  const auto& maps = t.maps();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!maps[i]) {
      throw malformed_template("no map given for " + slot_name(slots, i) + " -> " +
                               slot_name(slots, i + 1));
    }
  }

  std::vector<PositionVerdict> verdicts;
  verdicts.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::size_t dim = *slots[i].dim;
    const Matrix incoming = i == 0 ? Matrix(dim, 0) : *maps[i - 1];
    const Matrix outgoing = i + 1 == slots.size() ? Matrix(0, dim) : *maps[i];

    PositionVerdict v;
    v.position = i;
    v.composite_zero = (outgoing * incoming).is_zero();
    v.image_rank = exactla::rank(incoming);
    const auto kernel = exactla::kernel_basis(outgoing);
    v.kernel_dim = kernel.size();
    const Matrix stacked = incoming.hstack(Matrix::from_columns(dim, kernel));
    v.exact = v.composite_zero && exactla::rank(stacked) == v.image_rank;
    verdicts.push_back(v);
  }
  return verdicts;
}

bool all_exact(const std::vector<PositionVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.exact; });
}

namespace {

class RankEnumerator {
 public:
  explicit RankEnumerator(const std::vector<Slot>& slots)
      : slots_(slots), ranks_(slots.size() - 1), dims_(slots.size()) {}

  void run() { visit(0, 0); }

  const std::vector<std::vector<std::size_t>>& rank_solutions() const { return rank_solutions_; }
  const std::set<std::vector<std::size_t>>& unknown_solutions() const { return unknown_solutions_; }

 private:
  void visit(std::size_t slot, std::size_t incoming) {
    const std::size_t last = slots_.size() - 1;
    if (const auto& known = slots_[slot].dim) {
      if (*known < incoming) return;
      const std::size_t outgoing = *known - incoming;
      dims_[slot] = *known;
      if (slot == last) {
        if (outgoing == 0) record();
        return;
      }
      ranks_[slot] = outgoing;
      visit(slot + 1, outgoing);
      return;
    }
    // Unknown slots are never at the ends and are followed by a known slot.
    const std::size_t bound = *slots_[slot + 1].dim;
    for (std::size_t outgoing = 0; outgoing <= bound; ++outgoing) {
      dims_[slot] = incoming + outgoing;
      ranks_[slot] = outgoing;
      visit(slot + 1, outgoing);
    }
  }

  void record() {
    rank_solutions_.push_back(ranks_);
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (!slots_[i].dim) unknown.push_back(dims_[i]);
    }
    unknown_solutions_.insert(std::move(unknown));
  }

  const std::vector<Slot>& slots_;
  std::vector<std::size_t> ranks_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> rank_solutions_;
  std::set<std::vector<std::size_t>> unknown_solutions_;
};

}  // namespace

SolveReport solve_dims(const ExactSequenceTemplate& t) {
  const auto& slots = t.slots();
  for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
    if (!slots[i].dim && !slots[i + 1].dim) {
      throw unbounded_template("adjacent unknown slots " + slot_name(slots, i) + " and " +
                               slot_name(slots, i + 1) + " leave the rank between them unbounded");
    }
  }

  RankEnumerator enumerator(slots);
  enumerator.run();

  SolveReport report;
  report.consistent = !enumerator.rank_solutions().empty();
  report.assignments.assign(enumerator.unknown_solutions().begin(),
                            enumerator.unknown_solutions().end());

  std::size_t unknown_index = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].dim) continue;
    UnknownSlot u{i, {}};
    std::set<std::size_t> values;
    for (const auto& a : report.assignments) values.insert(a[unknown_index]);
    u.feasible.assign(values.begin(), values.end());
    report.unknowns.push_back(std::move(u));
    ++unknown_index;
  }

  if (report.consistent) {
    const std::size_t arrows = slots.size() - 1;
    report.ranks.assign(arrows, RankRange{});
    const auto& first = enumerator.rank_solutions().front();
    for (std::size_t a = 0; a < arrows; ++a) report.ranks[a] = {first[a], first[a]};
    for (const auto& ranks : enumerator.rank_solutions()) {
      for (std::size_t a = 0; a < arrows; ++a) {
        report.ranks[a].min = std::min(report.ranks[a].min, ranks[a]);
        report.ranks[a].max = std::max(report.ranks[a].max, ranks[a]);
      }
    }
  }
  return report;
}

std::vector<std::size_t> SolveReport::completed(const ExactSequenceTemplate& t,
                                                std::size_t index) const {
  const auto& assignment = assignments.at(index);
  std::vector<std::size_t> dims;
  dims.reserve(t.size());
  std::size_t next = 0;
  for (const auto& slot : t.slots()) {
    dims.push_back(slot.dim ? *slot.dim : assignment[next++]);
  }
  return dims;
}

bool alternating_sum_check(const ExactSequenceTemplate& t) {
  if (!t.all_known()) {
    throw malformed_template("alternating_sum_check needs every slot dimension known");
  }
  long long sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto d = static_cast<long long>(*t.slots()[i].dim);
    sum += (i % 2 == 0) ? d : -d;
  }
  return sum == 0;
}

}  // namespace orbitseq::lesolve
