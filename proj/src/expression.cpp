#include "dsmt/expression.hpp"

#include <cctype>
#include <istream>
#include <ostream>

#include "dsmt/error.hpp"

namespace dsmt {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t atom_count) : text_(text), atom_count_(atom_count) {}

  Proposition parse() {
    Proposition p = disjunction();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Proposition disjunction() {
    Proposition p = conjunction();
    while (accept('|')) p = join(p, conjunction());
    return p;
  }

  Proposition conjunction() {
    Proposition p = primary();
    while (accept('&')) p = meet(p, primary());
    return p;
  }

  Proposition primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      Proposition p = disjunction();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return word(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  Proposition word(std::string_view w) {
    if (w == "bot") return Proposition::bottom();
    if (w == "top") return Proposition::top();
    if (w.size() < 2 || w[0] != 'a') fail("unknown atom '" + std::string(w) + "'");
    std::size_t index = 0;
    for (char c : w.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("unknown atom '" + std::string(w) + "'");
      index = index * 10 + static_cast<std::size_t>(c - '0');
      if (index >= kMaxAtoms) break;
    }
    if (index >= atom_count_) {
      fail("atom '" + std::string(w) + "' out of range for " + std::to_string(atom_count_) + " atoms");
    }
    return Proposition::atom(static_cast<unsigned>(index));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t atom_count_;
  std::size_t pos_ = 0;
};

std::string format_clause(Clause c) {
  std::string out;
  bool first = true;
  for (unsigned i = 0; c != 0; ++i, c >>= 1) {
    if (!(c & 1U)) continue;
    out = first ? "a" + std::to_string(i) : "(" + out + " & a" + std::to_string(i) + ")";
    first = false;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Proposition parse_proposition(std::string_view text, std::size_t atom_count) {
  return Parser(text, atom_count).parse();
}

std::string format_proposition(const Proposition& p) {
  if (p.is_bottom()) return "bot";
  if (p.is_top()) return "top";
  std::string out;
  bool first = true;
  for (Clause c : p.clauses()) {
    out = first ? format_clause(c) : "(" + out + " | " + format_clause(c) + ")";
    first = false;
  }
  return out;
}

ConstraintSet read_constraints(std::istream& in, std::size_t atom_count) {
  ConstraintSet gamma;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos || body.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("expected exactly one '=' in constraint", line_no);
    }
    try {
      gamma.pairs.emplace_back(parse_proposition(body.substr(0, eq), atom_count),
                               parse_proposition(body.substr(eq + 1), atom_count));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return gamma;
}

void write_constraints(std::ostream& out, const ConstraintSet& gamma) {
  for (const auto& [lhs, rhs] : gamma.pairs) out << format_proposition(lhs) << " = " << format_proposition(rhs) << '\n';
}

void write_universe(std::ostream& out, std::span<const Proposition> props) {
  for (const auto& p : props) out << format_proposition(p) << '\n';
}

}  // namespace dsmt
