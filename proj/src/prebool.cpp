#include "dsmt/prebool.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dsmt {

namespace {

void enumerate_antichains(const std::vector<Clause>& masks, std::size_t next, std::vector<Clause>& chosen,
                          std::vector<Proposition>& out) {
  if (next == masks.size()) {
    out.push_back(Proposition::from_clauses(chosen));
    return;
  }
  enumerate_antichains(masks, next + 1, chosen, out);
  const Clause m = masks[next];
  const bool comparable = std::any_of(chosen.begin(), chosen.end(), [m](Clause c) {
    return (c & ~m) == 0 || (m & ~c) == 0;
  });
  if (!comparable) {
    chosen.push_back(m);
    enumerate_antichains(masks, next + 1, chosen, out);
    chosen.pop_back();
  }
}

void sort_linear_extension(std::vector<Proposition>& props, std::size_t n) {
  std::vector<std::pair<std::uint64_t, std::size_t>> keys(props.size());
  for (std::size_t i = 0; i < props.size(); ++i) keys[i] = {satisfying_count(props[i], n), i};
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return props[a.second] < props[b.second];
  });
  std::vector<Proposition> sorted;
  sorted.reserve(props.size());
  for (const auto& k : keys) sorted.push_back(std::move(props[k.second]));
  props = std::move(sorted);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // keep the smaller index as root so roots are deterministic
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Proposition> enumerate_hyperpower(std::size_t n, std::size_t guard) {
  guard = std::min(guard, kHardHyperpowerLimit);
  if (n > guard) {
    throw std::invalid_argument("enumerate_hyperpower: n=" + std::to_string(n) + " exceeds the size guard " +
                                std::to_string(guard));
  }
  std::vector<Clause> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), Clause{0});
  std::vector<Clause> chosen;
  std::vector<Proposition> out;
  enumerate_antichains(masks, 0, chosen, out);
  sort_linear_extension(out, n);
  return out;
}

bool is_insulated(const ConstraintSet& gamma) {
  return std::none_of(gamma.pairs.begin(), gamma.pairs.end(), [](const auto& pr) {
    return pr.first.is_bottom() || pr.first.is_top() || pr.second.is_bottom() || pr.second.is_top();
  });
}

std::optional<ClassId> Quotient::find(const Proposition& p) const {
  const auto it = position_.find(p);
  if (it == position_.end()) return std::nullopt;
  return class_of_[it->second];
}

ClassId Quotient::class_of(const Proposition& p) const {
  if (auto c = find(p)) return *c;
  throw std::out_of_range("proposition is not in the algebra's universe");
}

std::vector<Proposition> Quotient::members(ClassId c) const {
  std::vector<Proposition> out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (class_of_[i] == c) out.push_back(universe_[i]);
  return out;
}

Quotient quotient(std::vector<Proposition> universe, const ConstraintSet& gamma) {
  Quotient q;
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  for (const auto& p : universe) q.atom_count_ = std::max(q.atom_count_, p.atom_span());
  sort_linear_extension(universe, q.atom_count_);
  q.universe_ = std::move(universe);

  const std::size_t u = q.universe_.size();
  for (std::size_t i = 0; i < u; ++i) q.position_.emplace(q.universe_[i], i);

  auto position = [&](const Proposition& p, const char* what) {
    const auto it = q.position_.find(p);
    if (it == q.position_.end()) throw std::invalid_argument(std::string("quotient: ") + what);
    return it->second;
  };

  std::vector<std::size_t> meet_u(u * u), join_u(u * u);
  for (std::size_t i = 0; i < u; ++i) {
    for (std::size_t j = i; j < u; ++j) {
      const std::size_t m = position(meet(q.universe_[i], q.universe_[j]), "universe not closed under meet");
      const std::size_t s = position(join(q.universe_[i], q.universe_[j]), "universe not closed under join");
      meet_u[i * u + j] = meet_u[j * u + i] = m;
      join_u[i * u + j] = join_u[j * u + i] = s;
    }
  }

  UnionFind uf(u);
  for (const auto& [lhs, rhs] : gamma.pairs) {
    uf.unite(position(lhs, "constraint mentions a proposition outside the universe"),
             position(rhs, "constraint mentions a proposition outside the universe"));
  }

  // Congruence closure: every element must act like its root under meet and
  // join with any third element; merge until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < u; ++i) {
      const std::size_t r = uf.find(i);
      if (r == i) continue;
      for (std::size_t k = 0; k < u; ++k) {
        changed |= uf.unite(meet_u[i * u + k], meet_u[r * u + k]);
        changed |= uf.unite(join_u[i * u + k], join_u[r * u + k]);
      }
    }
  }

  // Least element of each class; roots are visited in universe order.
  std::vector<std::size_t> least(u, u);
  for (std::size_t i = 0; i < u; ++i) {
    const std::size_t r = uf.find(i);
    least[r] = least[r] == u ? i : meet_u[least[r] * u + i];
  }
  std::vector<std::size_t> class_heads;
  for (std::size_t r = 0; r < u; ++r) {
    if (least[r] == u) continue;
    if (uf.find(least[r]) != r) throw std::logic_error("quotient: class is not closed under meet");
    class_heads.push_back(least[r]);
  }
  // universe positions follow a linear extension, so sorting the least
  // elements by position numbers the classes along the quotient order
  std::sort(class_heads.begin(), class_heads.end());

  std::vector<ClassId> class_of_root(u);
  for (std::size_t c = 0; c < class_heads.size(); ++c) {
    class_of_root[uf.find(class_heads[c])] = ClassId{static_cast<std::uint32_t>(c)};
    q.reps_.push_back(q.universe_[class_heads[c]]);
  }
  q.class_of_.resize(u);
  for (std::size_t i = 0; i < u; ++i) q.class_of_[i] = class_of_root[uf.find(i)];

  const std::size_t n_classes = class_heads.size();
  q.meet_.resize(n_classes * n_classes);
  q.join_.resize(n_classes * n_classes);
  for (std::size_t a = 0; a < n_classes; ++a) {
    for (std::size_t b = 0; b < n_classes; ++b) {
      q.meet_[a * n_classes + b] = q.class_of_[meet_u[class_heads[a] * u + class_heads[b]]];
      q.join_[a * n_classes + b] = q.class_of_[join_u[class_heads[a] * u + class_heads[b]]];
    }
  }

  q.bottom_ = q.find(Proposition::bottom());
  q.top_ = q.find(Proposition::top());

  auto singleton = [&](std::optional<ClassId> c) {
    return !c || std::count(q.class_of_.begin(), q.class_of_.end(), *c) == 1;
  };
  q.insulated_ = singleton(q.bottom_) && singleton(q.top_);
  for (std::size_t a = 0; a < n_classes && q.insulated_; ++a) {
    for (std::size_t b = 0; b < n_classes; ++b) {
      const ClassId ca{static_cast<std::uint32_t>(a)}, cb{static_cast<std::uint32_t>(b)};
      if (q.bottom_ && ca != *q.bottom_ && cb != *q.bottom_ && q.meet(ca, cb) == *q.bottom_) q.insulated_ = false;
      if (q.top_ && ca != *q.top_ && cb != *q.top_ && q.join(ca, cb) == *q.top_) q.insulated_ = false;
    }
  }
  return q;
}

}  // namespace dsmt
