#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "dsmt/prebool.hpp"
#include "dsmt/proposition.hpp"

namespace dsmt {

// Text form of propositions:
//
//   expr := atom | '(' expr '&' expr ')' | '(' expr '|' expr ')'
//   atom := 'a' digits            (a0 .. a<n-1>)
//
// Whitespace is ignored. The reader also accepts unparenthesized chains with
// '&' binding tighter than '|', and the constants `bot` and `top`. The writer
// emits the strict fully parenthesized form, clauses nested to the left in
// canonical order.

/// Throws ParseError (line 0) on malformed text or an atom index >= atom_count.
Proposition parse_proposition(std::string_view text, std::size_t atom_count);

std::string format_proposition(const Proposition& p);

/// One `<expr> = <expr>` per line; blank lines and `#` comments are skipped.
/// Errors carry the 1-based line number.
ConstraintSet read_constraints(std::istream& in, std::size_t atom_count);

void write_constraints(std::ostream& out, const ConstraintSet& gamma);

/// One canonical proposition per line, in the order given.
void write_universe(std::ostream& out, std::span<const Proposition> props);

}  // namespace dsmt
