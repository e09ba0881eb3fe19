#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsmt/proposition.hpp"

namespace dsmt {

/// Default cap on the atom count accepted by `enumerate_hyperpower`. The
/// universe size is the Dedekind number (3, 6, 20, 168, 7581, ...) and the
/// quotient tables are quadratic in it.
inline constexpr std::size_t kDefaultHyperpowerGuard = 4;
inline constexpr std::size_t kHardHyperpowerLimit = 6;

/// Every element of ⟨a0..a(n-1)⟩, including BOTTOM and TOP, sorted by
/// `LinearExtensionLess{n}` (so BOTTOM first, TOP last).
///
/// Throws std::invalid_argument when n exceeds `guard` (itself capped at
/// kHardHyperpowerLimit).
std::vector<Proposition> enumerate_hyperpower(std::size_t n, std::size_t guard = kDefaultHyperpowerGuard);

/// Pairs of propositions declared equal.
struct ConstraintSet {
  std::vector<std::pair<Proposition, Proposition>> pairs;
};

/// True iff no constraint mentions BOTTOM or TOP.
bool is_insulated(const ConstraintSet& gamma);

/// Index of an equivalence class inside a `Quotient`.
struct ClassId {
  std::uint32_t value = 0;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// A finite pre-Boolean algebra: a universe of free propositions closed under
/// meet and join, partitioned by the least congruence containing a constraint
/// set.
///
/// Classes are numbered along a linear extension of the quotient order, and
/// each class is represented by its least element (the meet of its members,
/// which a congruence class of a finite lattice always contains).
class Quotient {
 public:
  std::size_t size() const noexcept { return reps_.size(); }
  std::size_t atom_count() const noexcept { return atom_count_; }

  std::span<const Proposition> universe() const noexcept { return universe_; }
  std::span<const Proposition> representatives() const noexcept { return reps_; }
  const Proposition& representative(ClassId c) const { return reps_.at(c.value); }

  std::optional<ClassId> find(const Proposition& p) const;
  /// Throws std::out_of_range when p is not in the universe.
  ClassId class_of(const Proposition& p) const;
  /// Members sorted in universe order.
  std::vector<Proposition> members(ClassId c) const;

  ClassId meet(ClassId a, ClassId b) const { return meet_[index(a, b)]; }
  ClassId join(ClassId a, ClassId b) const { return join_[index(a, b)]; }
  bool leq(ClassId a, ClassId b) const { return meet(a, b) == a; }

  std::optional<ClassId> bottom() const noexcept { return bottom_; }
  std::optional<ClassId> top() const noexcept { return top_; }

  /// Classes of BOTTOM and TOP (when present) are singletons, and no meet of
  /// two non-BOTTOM classes is BOTTOM, no join of two non-TOP classes is TOP.
  bool insulated() const noexcept { return insulated_; }

  friend bool operator==(const Quotient& a, const Quotient& b) {
    return a.universe_ == b.universe_ && a.class_of_ == b.class_of_;
  }

 private:
  friend Quotient quotient(std::vector<Proposition> universe, const ConstraintSet& gamma);

  std::size_t index(ClassId a, ClassId b) const { return std::size_t{a.value} * reps_.size() + b.value; }

  std::size_t atom_count_ = 0;
  std::vector<Proposition> universe_;
  std::unordered_map<Proposition, std::size_t, PropositionHash> position_;
  std::vector<ClassId> class_of_;
  std::vector<Proposition> reps_;
  std::vector<ClassId> meet_;
  std::vector<ClassId> join_;
  std::optional<ClassId> bottom_;
  std::optional<ClassId> top_;
  bool insulated_ = true;
};

/// Least congruence on `universe` containing every pair of `gamma`.
///
/// The universe must be closed under meet and join (e.g. the output of
/// `enumerate_hyperpower`, possibly without BOTTOM and TOP). Throws
/// std::invalid_argument when a constraint mentions a proposition outside it
/// or when it is not closed.
Quotient quotient(std::vector<Proposition> universe, const ConstraintSet& gamma);

/// Convenience: the shared algebra handle used by the belief layer.
using Algebra = std::shared_ptr<const Quotient>;

inline Algebra make_algebra(std::vector<Proposition> universe, const ConstraintSet& gamma = {}) {
  return std::make_shared<const Quotient>(quotient(std::move(universe), gamma));
}

}  // namespace dsmt
