#include "dsmt/finite_belief.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>

namespace dsmt::finite {

Bba read_bba(std::istream& in, Algebra algebra, MassConvention convention) {
  if (!algebra) throw std::invalid_argument("read_bba: null algebra");
  Bba::Masses masses;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const auto split = body.find_last_of(" \t");
    if (split == std::string_view::npos) throw ParseError("expected '<expr> <mass>'", line_no);
    const std::string_view number = body.substr(split + 1);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc{} || ptr != number.data() + number.size()) {
      throw ParseError("malformed mass '" + std::string(number) + "'", line_no);
    }
    Proposition p;
    try {
      p = parse_proposition(body.substr(0, split), algebra->atom_count());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    const auto c = algebra->find(p);
    if (!c) throw ParseError("proposition outside the algebra: " + format_proposition(p), line_no);
    masses[*c] += value;
  }
  return Bba(std::move(algebra), std::move(masses), convention);
}

void write_bba(std::ostream& out, const Bba& m) {
  for (const auto& [c, v] : m.masses()) {
    out << format_proposition(m.algebra()->representative(c)) << ' ' << fmt::format("{}", v) << '\n';
  }
}

}  // namespace dsmt::finite
