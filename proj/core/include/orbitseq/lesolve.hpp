#pragma once

// Bounded exact sequences: map-level exactness checks and dimension-only
// solving by enumeration of the ranks of the arrows.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitseq/exactla.hpp"

namespace orbitseq::lesolve {

class malformed_template : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two adjacent unknown slots leave the rank between them unconstrained, so
/// the feasible set is infinite.
class unbounded_template : public malformed_template {
 public:
  using malformed_template::malformed_template;
};

struct Slot {
  std::string label;
  std::optional<std::size_t> dim;  // nullopt = unknown
  std::optional<int> degree;

  static Slot zero(std::string label = "0") { return Slot{std::move(label), 0, std::nullopt}; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// slot_0 -> slot_1 -> ... -> slot_{m-1}, with zero slots at both ends.
/// maps()[i] (when present) is the matrix of slot_i -> slot_{i+1}, shaped
/// dim(slot_{i+1}) x dim(slot_i).
class ExactSequenceTemplate {
 public:
  explicit ExactSequenceTemplate(std::vector<Slot> slots);
  ExactSequenceTemplate(std::vector<Slot> slots,
                        std::vector<std::optional<exactla::Matrix>> maps);

  const std::vector<Slot>& slots() const noexcept { return slots_; }
  const std::vector<std::optional<exactla::Matrix>>& maps() const noexcept { return maps_; }
  std::size_t size() const noexcept { return slots_.size(); }

  bool all_known() const;
  bool all_maps_present() const;

  /// Copy with one slot's dimension replaced (maps are dropped).
  ExactSequenceTemplate with_dim(std::size_t slot, std::optional<std::size_t> dim) const;

 private:
  std::vector<Slot> slots_;
  std::vector<std::optional<exactla::Matrix>> maps_;
};

/// Slot-by-slot equality of dimensions and degree annotations; labels ignored.
bool same_shape(const ExactSequenceTemplate& a, const ExactSequenceTemplate& b);

struct PositionVerdict {
  std::size_t position = 0;
  bool exact = false;
  bool composite_zero = false;
  std::size_t image_rank = 0;   // rank of the incoming map
  std::size_t kernel_dim = 0;   // nullity of the outgoing map
};

/// Exactness at every slot: image(incoming) = kernel(outgoing). Requires all
/// dimensions known and every map present; throws malformed_template otherwise.
std::vector<PositionVerdict> check_exact(const ExactSequenceTemplate& t);
bool all_exact(const std::vector<PositionVerdict>& verdicts);

struct RankRange {
  std::size_t min = 0;
  std::size_t max = 0;
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

struct UnknownSlot {
  std::size_t slot = 0;
  std::vector<std::size_t> feasible;  // ascending
  bool unique() const noexcept { return feasible.size() == 1; }
};

struct SolveReport {
  bool consistent = false;
  std::vector<UnknownSlot> unknowns;          // in slot order
  std::vector<RankRange> ranks;               // one per arrow; empty if inconsistent
  std::vector<std::vector<std::size_t>> assignments;  // distinct joint values of the unknowns, sorted

  /// Full dimension vector of the template under assignments[index].
  std::vector<std::size_t> completed(const ExactSequenceTemplate& t, std::size_t index) const;
};

/// Every nonnegative integer assignment of the unknown dimensions for which
/// some choice of arrow ranks r_i satisfies dim(slot_i) = r_{i-1} + r_i with
/// zero rank at both ends. Infeasibility is reported, not thrown.
SolveReport solve_dims(const ExactSequenceTemplate& t);

/// Sum of (-1)^i dim(slot_i) vanishes. Requires all dimensions known.
bool alternating_sum_check(const ExactSequenceTemplate& t);

}  // namespace orbitseq::lesolve
