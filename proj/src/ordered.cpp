#include "dsmt/ordered.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "dsmt/expression.hpp"

namespace dsmt::ordered {

namespace {

std::size_t lowest_atom(Clause c) { return static_cast<std::size_t>(std::countr_zero(c)); }
std::size_t highest_atom(Clause c) { return static_cast<std::size_t>(63 - std::countl_zero(c)); }

void enumerate_thresholds(std::size_t n, std::vector<int>& t, std::vector<Staircase>& out) {
  const std::size_t j = t.size();
  if (j == n) {
    if (auto s = Staircase::from_thresholds(t)) out.push_back(std::move(*s));
    return;
  }
  const int prev = t.empty() ? -1 : t.back();
  for (int v = prev; v <= static_cast<int>(j); ++v) {
    t.push_back(v);
    enumerate_thresholds(n, t, out);
    t.pop_back();
  }
}

// Pair-set route: triangle cells numbered column by column, a subset is a
// bitmask. Shares nothing with the threshold representation except the final
// conversion.
struct Triangle {
  explicit Triangle(std::size_t n) : n(n) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) cells.emplace_back(i, j);
  }

  std::size_t bit(std::size_t i, std::size_t j) const { return j * (j + 1) / 2 + i; }

  bool increasing(std::uint64_t set) const {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (!((set >> k) & 1U)) continue;
      const auto [i, j] = cells[k];
      if (i > 0 && !((set >> bit(i - 1, j)) & 1U)) return false;
      if (j + 1 < n && !((set >> bit(i, j + 1)) & 1U)) return false;
    }
    return true;
  }

  std::vector<int> thresholds(std::uint64_t set) const {
    std::vector<int> t(n, -1);
    for (std::size_t k = 0; k < cells.size(); ++k)
      if ((set >> k) & 1U) t[cells[k].second] = std::max(t[cells[k].second], static_cast<int>(cells[k].first));
    return t;
  }

  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
};

}  // namespace

std::optional<Staircase> Staircase::from_thresholds(std::vector<int> thresholds) {
  bool any = false;
  int prev = -1;
  for (std::size_t j = 0; j < thresholds.size(); ++j) {
    const int t = thresholds[j];
    if (t < -1 || t > static_cast<int>(j) || t < prev) return std::nullopt;
    any |= t >= 0;
    prev = t;
  }
  if (!any) return std::nullopt;
  return Staircase(std::move(thresholds));
}

Staircase Staircase::generator(std::size_t lo, std::size_t hi, std::size_t n) {
  if (lo > hi || hi >= n) throw std::out_of_range("staircase generator outside the triangle");
  std::vector<int> t(n, -1);
  for (std::size_t j = hi; j < n; ++j) t[j] = static_cast<int>(lo);
  return Staircase(std::move(t));
}

std::optional<std::size_t> Staircase::threshold(std::size_t j) const {
  const int t = thresholds_.at(j);
  if (t < 0) return std::nullopt;
  return static_cast<std::size_t>(t);
}

bool Staircase::contains(std::size_t i, std::size_t j) const {
  return j < thresholds_.size() && static_cast<int>(i) <= thresholds_[j];
}

bool Staircase::subset_of(const Staircase& other) const {
  if (size() != other.size()) return false;
  for (std::size_t j = 0; j < size(); ++j)
    if (thresholds_[j] > other.thresholds_[j]) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Staircase::cells() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < size(); ++j)
    for (int i = 0; i <= thresholds_[j]; ++i) out.emplace_back(static_cast<std::size_t>(i), j);
  return out;
}

ConstraintSet order_constraints(std::size_t n) {
  if (n == 0) throw std::invalid_argument("order_constraints: need at least one atom");
  if (n > kMaxAtoms) throw std::invalid_argument("order_constraints: too many atoms");
  ConstraintSet gamma;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j)
      for (unsigned k = j; k < n; ++k)
        gamma.pairs.emplace_back(Proposition::from_clauses({clause_of({i, j, k})}),
                                 Proposition::from_clauses({clause_of({i, k})}));
  return gamma;
}

Staircase point(std::size_t x, std::size_t n) {
  if (x >= n) throw std::out_of_range("point: atom index out of range");
  return Staircase::generator(x, x, n);
}

std::optional<Staircase> stair_meet(const Staircase& a, const Staircase& b) {
  if (a.size() != b.size()) throw std::invalid_argument("stair_meet: size mismatch");
  std::vector<int> t(a.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::min(a.thresholds_[j], b.thresholds_[j]);
  if (std::all_of(t.begin(), t.end(), [](int v) { return v < 0; })) return std::nullopt;
  return Staircase(std::move(t));
}

Staircase stair_join(const Staircase& a, const Staircase& b) {
  if (a.size() != b.size()) throw std::invalid_argument("stair_join: size mismatch");
  std::vector<int> t(a.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::max(a.thresholds_[j], b.thresholds_[j]);
  return Staircase(std::move(t));
}

Staircase smile(const Proposition& p, std::size_t n) {
  if (p.is_bottom() || p.is_top()) throw std::invalid_argument("smile: bottom and top have no staircase");
  if (p.atom_span() > n) throw std::invalid_argument("smile: proposition mentions atoms beyond n");
  std::optional<Staircase> acc;
  for (Clause c : p.clauses()) {
    Staircase s = Staircase::generator(lowest_atom(c), highest_atom(c), n);
    acc = acc ? stair_join(*acc, s) : std::move(s);
  }
  return *acc;
}

std::vector<Staircase> enumerate_staircases(std::size_t n) {
  std::vector<Staircase> out;
  std::vector<int> t;
  enumerate_thresholds(n, t, out);
  return out;
}

IsomorphismReport verify_isomorphism(std::size_t n, std::size_t guard) {
  if (n == 0 || n > guard) {
    throw std::invalid_argument(fmt::format("verify_isomorphism: n={} outside [1, {}]", n, guard));
  }
  IsomorphismReport r;
  r.atom_count = n;
  auto note = [&r](bool& flag, std::string msg) {
    flag = false;
    if (r.counterexamples.size() < 32) r.counterexamples.push_back(std::move(msg));
  };

  std::vector<Proposition> universe = enumerate_hyperpower(n, std::max(guard, n));
  std::erase_if(universe, [](const Proposition& p) { return p.is_bottom() || p.is_top(); });
  const Quotient q = quotient(universe, order_constraints(n));
  r.class_count = q.size();

  std::map<ClassId, Staircase> image_of_class;
  std::map<Staircase, ClassId> class_of_image;
  for (const auto& p : q.universe()) {
    const ClassId c = q.class_of(p);
    const Staircase s = smile(p, n);
    if (auto [it, fresh] = image_of_class.emplace(c, s); !fresh && it->second != s) {
      note(r.well_defined, "smile differs inside the class of " + format_proposition(q.representative(c)) + ": " +
                               format_proposition(p));
    }
    if (auto [it, fresh] = class_of_image.emplace(s, c); !fresh && it->second != c) {
      note(r.injective, "classes of " + format_proposition(q.representative(it->second)) + " and " +
                            format_proposition(q.representative(c)) + " share the staircase " + dump(s));
    }
  }
  r.image_count = class_of_image.size();

  const std::span<const Proposition> u = q.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Staircase si = smile(u[i], n);
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Staircase sj = smile(u[j], n);
      const auto m = stair_meet(si, sj);
      if (!m || *m != smile(meet(u[i], u[j]), n)) {
        note(r.meet_preserved, "meet of " + format_proposition(u[i]) + " and " + format_proposition(u[j]));
      }
      if (stair_join(si, sj) != smile(join(u[i], u[j]), n)) {
        note(r.join_preserved, "join of " + format_proposition(u[i]) + " and " + format_proposition(u[j]));
      }
    }
  }

  // Containment of images against the quotient order, and against the
  // generator criterion: every clause (m, M) of the smaller side is dominated
  // by a clause (m', M') of the larger with m <= m' and M >= M'.
  for (std::uint32_t a = 0; a < q.size(); ++a) {
    for (std::uint32_t b = 0; b < q.size(); ++b) {
      const Proposition& pa = q.representative(ClassId{a});
      const Proposition& pb = q.representative(ClassId{b});
      const bool contained = smile(pa, n).subset_of(smile(pb, n));
      const bool dominated = std::all_of(pa.clauses().begin(), pa.clauses().end(), [&](Clause k) {
        return std::any_of(pb.clauses().begin(), pb.clauses().end(), [&](Clause l) {
          return lowest_atom(k) <= lowest_atom(l) && highest_atom(k) >= highest_atom(l);
        });
      });
      if (contained != q.leq(ClassId{a}, ClassId{b}) || contained != dominated) {
        note(r.order_reflected, "order mismatch between " + format_proposition(pa) + " and " + format_proposition(pb));
      }
    }
  }

  const Triangle tri(n);
  std::set<Staircase> increasing;
  const std::uint64_t subsets = std::uint64_t{1} << tri.cells.size();
  for (std::uint64_t set = 1; set < subsets; ++set) {
    if (!tri.increasing(set)) continue;
    auto s = Staircase::from_thresholds(tri.thresholds(set));
    if (!s) {
      note(r.onto, fmt::format("increasing pair set {:#x} has no staircase form", set));
      continue;
    }
    increasing.insert(std::move(*s));
  }
  r.increasing_subsets = increasing.size();
  for (const auto& s : increasing)
    if (!class_of_image.count(s)) note(r.onto, "increasing subset not reached by smile: " + dump(s));
  for (const auto& [s, c] : class_of_image)
    if (!increasing.count(s)) note(r.onto, "smile image is not increasing: " + dump(s));
  return r;
}

std::string dump(const Staircase& s) {
  std::string out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto t = s.threshold(j);
    out += t ? fmt::format("{}:{}\n", j, *t) : fmt::format("{}:-\n", j);
  }
  return out;
}

std::string render(const Staircase& s) {
  std::string out;
  for (std::size_t row = s.size(); row-- > 0;) {
    out += fmt::format("{:>2} ", row);
    for (std::size_t i = 0; i <= row; ++i) out += s.contains(i, row) ? '#' : '.';
    out += '\n';
  }
  out += "   ";
  for (std::size_t i = 0; i < s.size(); ++i) out += static_cast<char>('0' + i % 10);
  out += '\n';
  return out;
}

}  // namespace dsmt::ordered
