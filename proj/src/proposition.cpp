#include "dsmt/proposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace dsmt {

bool clause_less(Clause a, Clause b) noexcept {
  if (a == b) return false;
  // Both lists agree on every index below the lowest differing bit d. The
  // clause holding d places it where the other one holds its next index,
  // which is larger than d, or nothing at all (then it is a proper prefix).
  const int d = std::countr_zero(a ^ b);
  const Clause above = ~Clause{0} << d << 1;
  const bool a_has = (a >> d) & 1U;
  const Clause lacking = a_has ? b : a;
  const bool lacking_continues = (lacking & above) != 0;
  // holder < lacking iff lacking continues past d
  return a_has ? lacking_continues : !lacking_continues;
}

Proposition Proposition::top() { return Proposition(std::vector<Clause>{0}); }

Proposition Proposition::atom(unsigned index) {
  if (index >= kMaxAtoms) throw std::out_of_range("atom index " + std::to_string(index) + " exceeds 63");
  return Proposition(std::vector<Clause>{Clause{1} << index});
}

Proposition Proposition::from_clauses(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end(), [](Clause a, Clause b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

  std::vector<Clause> kept;
  kept.reserve(clauses.size());
  for (Clause c : clauses) {
    // smaller clauses come first, so only already-kept ones can be subsets of c
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [c](Clause k) { return (k & ~c) == 0; });
    if (!absorbed) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), clause_less);
  return Proposition(std::move(kept));
}

Clause Proposition::support() const noexcept {
  Clause s = 0;
  for (Clause c : clauses_) s |= c;
  return s;
}

std::size_t Proposition::atom_span() const noexcept {
  const Clause s = support();
  return s == 0 ? 0 : static_cast<std::size_t>(64 - std::countl_zero(s));
}

std::strong_ordering operator<=>(const Proposition& a, const Proposition& b) {
  const std::size_t n = std::min(a.clauses_.size(), b.clauses_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.clauses_[i] == b.clauses_[i]) continue;
    return clause_less(a.clauses_[i], b.clauses_[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.clauses_.size() <=> b.clauses_.size();
}

std::size_t PropositionHash::operator()(const Proposition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.clause_count();
  for (Clause c : p.clauses()) {
    h ^= std::hash<Clause>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Proposition meet(const Proposition& p, const Proposition& q) {
  std::vector<Clause> out;
  out.reserve(p.clause_count() * q.clause_count());
  for (Clause a : p.clauses())
    for (Clause b : q.clauses()) out.push_back(a | b);
  return Proposition::from_clauses(std::move(out));
}

Proposition join(const Proposition& p, const Proposition& q) {
  std::vector<Clause> out(p.clauses().begin(), p.clauses().end());
  out.insert(out.end(), q.clauses().begin(), q.clauses().end());
  return Proposition::from_clauses(std::move(out));
}

bool leq(const Proposition& p, const Proposition& q) {
  const auto qc = q.clauses();
  return std::all_of(p.clauses().begin(), p.clauses().end(), [qc](Clause a) {
    return std::any_of(qc.begin(), qc.end(), [a](Clause b) { return (b & ~a) == 0; });
  });
}

std::uint64_t satisfying_count(const Proposition& p, std::size_t n) {
  if (n > 24) throw std::invalid_argument("satisfying_count: at most 24 atoms");
  if (p.atom_span() > n) throw std::invalid_argument("satisfying_count: proposition mentions atoms beyond n");
  std::uint64_t count = 0;
  const Clause end = Clause{1} << n;
  for (Clause s = 0; s < end; ++s) {
    for (Clause c : p.clauses()) {
      if ((c & ~s) == 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

bool LinearExtensionLess::operator()(const Proposition& a, const Proposition& b) const {
  const auto ca = satisfying_count(a, atom_count);
  const auto cb = satisfying_count(b, atom_count);
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace dsmt
