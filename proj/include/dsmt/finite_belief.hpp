#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "dsmt/error.hpp"
#include "dsmt/expression.hpp"
#include "dsmt/prebool.hpp"

namespace dsmt::finite {

/// How total mass is accounted for.
enum class MassConvention {
  /// Σ over the algebra minus {⊥, ⊤} is 1: neither ⊥ nor ⊤ carries mass.
  exhaustive,
  /// Σ over the whole algebra is 1 and m(⊥) = 0; ⊤ may carry mass.
  standard,
};

/// Absolute tolerance used by the mass checks: 1e-12 for floating point,
/// exact for everything else (e.g. rationals).
template <class T>
T mass_tolerance() {
  if constexpr (std::is_floating_point_v<T>) {
    return T(1e-12);
  } else {
    return T(0);
  }
}

/// A basic belief assignment over the classes of a finite pre-Boolean algebra.
/// Only non-zero masses are stored.
template <class T = double>
class BasicBba {
 public:
  using Masses = std::map<ClassId, T>;

  /// Validates non-negativity, total mass 1 and the convention's exclusions.
  BasicBba(Algebra algebra, Masses masses, MassConvention convention = MassConvention::exhaustive)
      : algebra_(std::move(algebra)), masses_(std::move(masses)), convention_(convention) {
    if (!algebra_) throw std::invalid_argument("bba: null algebra");
    T total(0);
    for (auto it = masses_.begin(); it != masses_.end();) {
      if (it->first.value >= algebra_->size()) throw std::out_of_range("bba: class index outside the algebra");
      if (it->second < T(0)) throw NumericError("bba: negative mass on " + describe(it->first));
      if (it->second == T(0)) {
        it = masses_.erase(it);
        continue;
      }
      total += it->second;
      ++it;
    }
    auto forbid = [&](std::optional<ClassId> c, const char* name) {
      if (c && masses_.count(*c)) throw NumericError(std::string("bba: ") + name + " carries mass");
    };
    forbid(algebra_->bottom(), "bottom");
    if (convention_ == MassConvention::exhaustive) forbid(algebra_->top(), "top");
    const T diff = total > T(1) ? total - T(1) : T(1) - total;
    if (diff > mass_tolerance<T>()) throw NumericError("bba: total mass differs from 1");
  }

  /// All mass on one class.
  static BasicBba point(Algebra algebra, ClassId c, MassConvention convention = MassConvention::exhaustive) {
    return BasicBba(std::move(algebra), Masses{{c, T(1)}}, convention);
  }

  const Algebra& algebra() const noexcept { return algebra_; }
  const Masses& masses() const noexcept { return masses_; }
  MassConvention convention() const noexcept { return convention_; }

  T mass(ClassId c) const {
    const auto it = masses_.find(c);
    return it == masses_.end() ? T(0) : it->second;
  }

  T total() const {
    T s(0);
    for (const auto& [c, v] : masses_) s += v;
    return s;
  }

 private:
  std::string describe(ClassId c) const { return format_proposition(algebra_->representative(c)); }

  Algebra algebra_;
  Masses masses_;
  MassConvention convention_;
};

using Bba = BasicBba<double>;

/// Bel(φ) = Σ_{ψ ≤ φ} m(ψ), ordered in the quotient.
template <class T>
T bel(const BasicBba<T>& m, ClassId phi) {
  if (phi.value >= m.algebra()->size()) throw std::out_of_range("bel: unknown class");
  T sum(0);
  for (const auto& [c, v] : m.masses())
    if (m.algebra()->leq(c, phi)) sum += v;
  return sum;
}

/// Bel over every class, indexed by ClassId::value.
template <class T>
std::vector<T> bel_all(const BasicBba<T>& m) {
  std::vector<T> out(m.algebra()->size(), T(0));
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = bel(m, ClassId{i});
  return out;
}

/// Inverts `bel_all` by sweeping the classes in ClassId order, which is a
/// linear extension of the quotient order:
///   m(φ) = Bel(φ) − Σ_{ψ < φ} m(ψ).
/// A recovered mass below −tolerance signals inconsistent input; values
/// within tolerance of zero are dropped.
template <class T>
BasicBba<T> bba_from_bel(Algebra algebra, const std::vector<T>& bel_values,
                         MassConvention convention = MassConvention::exhaustive) {
  if (!algebra) throw std::invalid_argument("bba_from_bel: null algebra");
  if (bel_values.size() != algebra->size()) {
    throw std::invalid_argument("bba_from_bel: belief must be given on every class");
  }
  const std::size_t n = algebra->size();
  std::vector<T> recovered(n, T(0));
  for (std::uint32_t i = 0; i < n; ++i) {
    T below(0);
    for (std::uint32_t j = 0; j < i; ++j)
      if (algebra->leq(ClassId{j}, ClassId{i})) below += recovered[j];
    recovered[i] = bel_values[i] - below;
    if (recovered[i] < -mass_tolerance<T>()) {
      throw NumericError("bba_from_bel: inconsistent belief, negative mass recovered at " +
                         format_proposition(algebra->representative(ClassId{i})));
    }
  }
  typename BasicBba<T>::Masses masses;
  for (std::uint32_t i = 0; i < n; ++i)
    if (recovered[i] > mass_tolerance<T>()) masses.emplace(ClassId{i}, recovered[i]);
  return BasicBba<T>(std::move(algebra), std::move(masses), convention);
}

/// Conjunctive combination: (m1 ⊕ m2)(φ) = Σ_{ψ1 ∧ ψ2 = φ} m1(ψ1) m2(ψ2).
/// No renormalization; on an insulated algebra the total stays 1.
template <class T>
BasicBba<T> fuse(const BasicBba<T>& m1, const BasicBba<T>& m2) {
  const Algebra& a = m1.algebra();
  if (a != m2.algebra() && !(*a == *m2.algebra())) throw std::invalid_argument("fuse: bbas live on different algebras");
  if (!a->insulated()) throw std::invalid_argument("fuse: algebra does not have the insulation property");
  typename BasicBba<T>::Masses out;
  for (const auto& [c1, v1] : m1.masses())
    for (const auto& [c2, v2] : m2.masses()) out[a->meet(c1, c2)] += v1 * v2;
  const auto convention = m1.convention() == m2.convention() ? m1.convention() : MassConvention::standard;
  return BasicBba<T>(a, std::move(out), convention);
}

/// Lines `<expr> <mass>`: the mass is the last whitespace-separated token.
/// Expressions landing in the same class accumulate. Blank lines and `#`
/// comments are skipped.
Bba read_bba(std::istream& in, Algebra algebra, MassConvention convention = MassConvention::exhaustive);

/// One line per non-zero class: representative, then the mass with round-trip precision.
void write_bba(std::ostream& out, const Bba& m);

}  // namespace dsmt::finite
