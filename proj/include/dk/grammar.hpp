#pragma once

// Shared term-list grammar for the presented algebras.
//
//   element := term ('+' term)*
//   term    := '0' | '1' | factor+
//   factor  := letter ('^' digits)?
//
// Whitespace is ignored everywhere.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dk/rewrite.hpp"

namespace dk::grammar {

  // Expands every term to its (unreduced) word; "0" terms are dropped and
  // "1" becomes the empty word.  Throws ParseError.
  std::vector<rewrite::Word> parse_terms(std::string_view        text,
                                         rewrite::Alphabet const& alphabet);

  // Run-length spelling, "1" for the empty word.
  std::string format_word(std::string_view w);

  // Joins already formatted terms with " + ", "0" if there are none.
  std::string join_terms(std::vector<std::string> const& terms);

}  // namespace dk::grammar
