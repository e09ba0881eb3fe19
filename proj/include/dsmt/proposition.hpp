#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dsmt {

/// A conjunction of atoms, stored as a bitmask over atom indices (bit i = atom i).
/// The empty clause is the empty conjunction, i.e. true.
using Clause = std::uint64_t;

inline constexpr std::size_t kMaxAtoms = 64;

constexpr Clause clause_of(std::initializer_list<unsigned> atoms) {
  Clause c = 0;
  for (unsigned a : atoms) c |= Clause{1} << a;
  return c;
}

/// Lexicographic order on the sorted atom-index lists of two clauses,
/// e.g. {} < {0} < {0,1} < {0,1,2} < {0,2} < {1}.
bool clause_less(Clause a, Clause b) noexcept;

/// An element of the free hyperpower set: a disjunction of conjunctions of
/// atoms kept in canonical form, an antichain of clauses (no clause contains
/// another) sorted by `clause_less`.
///
/// BOTTOM has no clause; TOP has the single empty clause. Two propositions are
/// logically equal iff their canonical forms are identical, so `==` is equality
/// in the free distributive lattice.
class Proposition {
 public:
  /// BOTTOM.
  Proposition() = default;

  static Proposition bottom() { return {}; }
  static Proposition top();
  static Proposition atom(unsigned index);

  /// Canonicalizes an arbitrary clause family: drops duplicates and every
  /// clause that strictly contains another member. A family containing the
  /// empty clause therefore collapses to TOP.
  static Proposition from_clauses(std::vector<Clause> clauses);

  std::span<const Clause> clauses() const noexcept { return clauses_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }

  bool is_bottom() const noexcept { return clauses_.empty(); }
  bool is_top() const noexcept { return clauses_.size() == 1 && clauses_[0] == 0; }

  /// Union of all atoms mentioned.
  Clause support() const noexcept;

  /// One past the highest atom index mentioned (0 for the constants).
  std::size_t atom_span() const noexcept;

  friend bool operator==(const Proposition&, const Proposition&) = default;

  /// Structural total order: lexicographic over the clause sequences, each
  /// clause compared with `clause_less`. Used for containers and sorted dumps.
  friend std::strong_ordering operator<=>(const Proposition& a, const Proposition& b);

 private:
  explicit Proposition(std::vector<Clause> canonical) : clauses_(std::move(canonical)) {}

  std::vector<Clause> clauses_;
};

struct PropositionHash {
  std::size_t operator()(const Proposition& p) const noexcept;
};

/// φ(Σ): the disjunction over σ ∈ Σ of the conjunction of the atoms of σ.
inline Proposition varphi(std::vector<Clause> family) {
  return Proposition::from_clauses(std::move(family));
}

/// Conjunction: the canonicalized family of pairwise clause unions.
Proposition meet(const Proposition& p, const Proposition& q);

/// Disjunction: the canonicalized union of both clause families.
Proposition join(const Proposition& p, const Proposition& q);

/// p ⊂ q, i.e. meet(p, q) == p.
///
/// Decided directly on canonical forms: p ≤ q iff every clause of p contains
/// (as an atom set) some clause of q. A conjunction implies a disjunction of
/// conjunctions exactly when it implies one of the disjuncts, and a
/// conjunction of atoms implies another exactly when its atom set is larger.
bool leq(const Proposition& p, const Proposition& q);

/// Number of subsets S of {0..n-1} that satisfy p when the atoms of S are
/// set true. Strictly monotone in the lattice order, so sorting by it (ties
/// broken structurally) gives a linear extension of `leq`. Requires n <= 24
/// and every mentioned atom < n.
std::uint64_t satisfying_count(const Proposition& p, std::size_t n);

/// Deterministic total order extending `leq` over propositions on n atoms:
/// satisfying count first, structural order second.
struct LinearExtensionLess {
  std::size_t atom_count;
  bool operator()(const Proposition& a, const Proposition& b) const;
};

}  // namespace dsmt
