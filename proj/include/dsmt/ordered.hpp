#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsmt/prebool.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt::ordered {

// Ordered atoms a0 < a1 < ... < a(n-1). An element of the ordered algebra is
// modelled by a non-empty increasing subset of the triangle
// T = {(i, j) : i <= j}: closed under lowering i and raising j.

/// An increasing subset of the triangle, stored column-wise: for each j the
/// largest i with (i, j) in the set, or nothing. Thresholds never exceed j,
/// are non-decreasing in j once defined, and at least one is defined.
class Staircase {
 public:
  /// Validates the invariants above; nullopt when they fail (including the
  /// empty set).
  static std::optional<Staircase> from_thresholds(std::vector<int> thresholds);

  /// The increasing set generated by the single pair (lo, hi), lo <= hi:
  /// {(i, j) : i <= lo, j >= hi}.
  static Staircase generator(std::size_t lo, std::size_t hi, std::size_t n);

  std::size_t size() const noexcept { return thresholds_.size(); }

  /// Largest i with (i, j) in the set.
  std::optional<std::size_t> threshold(std::size_t j) const;
  const std::vector<int>& raw_thresholds() const noexcept { return thresholds_; }

  bool contains(std::size_t i, std::size_t j) const;
  bool subset_of(const Staircase& other) const;

  /// Members as (i, j) pairs, column by column.
  std::vector<std::pair<std::size_t, std::size_t>> cells() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase&, const Staircase&) = default;

 private:
  explicit Staircase(std::vector<int> t) : thresholds_(std::move(t)) {}

  friend std::optional<Staircase> stair_meet(const Staircase&, const Staircase&);
  friend Staircase stair_join(const Staircase&, const Staircase&);

  std::vector<int> thresholds_;  // -1 = no cell in this column
};

/// Γ = {(ai ∧ aj ∧ ak, ai ∧ ak) : i <= j <= k}, the discarding constraints of a
/// total order. Requires n >= 1.
ConstraintSet order_constraints(std::size_t n);

/// θ̆x = {(i, j) : i <= x <= j}. Throws std::out_of_range unless x < n.
Staircase point(std::size_t x, std::size_t n);

/// Intersection (pointwise min); nullopt when empty.
std::optional<Staircase> stair_meet(const Staircase& a, const Staircase& b);
/// Union (pointwise max).
Staircase stair_join(const Staircase& a, const Staircase& b);

/// The ⌣ morphism: each clause σ maps to point(min σ) ∩ point(max σ), the
/// generator (min σ, max σ), and disjunction maps to union.
///
/// Throws std::invalid_argument for BOTTOM, TOP or atoms >= n.
Staircase smile(const Proposition& p, std::size_t n);

/// Every non-empty increasing subset of the triangle over n atoms, enumerated
/// as threshold sequences, in lexicographic order.
std::vector<Staircase> enumerate_staircases(std::size_t n);

/// Default cap for `verify_isomorphism`.
inline constexpr std::size_t kIsomorphismGuard = 4;

struct IsomorphismReport {
  std::size_t atom_count = 0;
  std::size_t class_count = 0;          // classes of ⟨Θ⟩∖{⊥,⊤} modulo the order constraints
  std::size_t image_count = 0;          // distinct smile images
  std::size_t increasing_subsets = 0;   // independent pair-set enumeration
  bool well_defined = true;             // class(p) = class(q) ⇒ smile(p) = smile(q)
  bool injective = true;                // smile(p) = smile(q) ⇒ class(p) = class(q)
  bool onto = true;                     // images = all increasing subsets
  bool meet_preserved = true;
  bool join_preserved = true;
  bool order_reflected = true;          // containment of images ⇔ quotient order, and the generator criterion
  std::vector<std::string> counterexamples;

  bool passed() const noexcept {
    return well_defined && injective && onto && meet_preserved && join_preserved && order_reflected &&
           class_count == increasing_subsets && image_count == increasing_subsets;
  }
};

/// Builds the quotient of the free algebra without ⊥ and ⊤ by
/// `order_constraints(n)` and checks, by exhaustion, that smile is a
/// bijective (∧, ∨)-morphism onto the increasing subsets of the triangle.
///
/// Throws std::invalid_argument when n is 0 or exceeds `guard`.
IsomorphismReport verify_isomorphism(std::size_t n, std::size_t guard = kIsomorphismGuard);

/// `j:t(j)` per column, `j:-` for empty columns.
std::string dump(const Staircase& s);

/// ASCII picture, second coordinate j growing upward and first coordinate i
/// to the right: '#' member, '.' triangle cell outside the set.
std::string render(const Staircase& s);

}  // namespace dsmt::ordered
