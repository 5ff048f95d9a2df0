#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lambday/term.hpp"
#include "lambday/type.hpp"

namespace lambday {

// Surface grammar
//
//   type    := atom ('->' type)?            right associative
//   atom    := 'o' | '(' type ')'
//   input   := ('[' x ':' type (',' x ':' type)* ']')? term
//   term    := '\' x ':' type '.' term | app
//   app     := primary+ ('\' ...)?          left associative; a trailing
//                                            lambda extends to the right
//   primary := x | '(' term ')' | 'Y{' type '}' | 'Omega{' type '}'
//            | '#' n '{' type '}'            numeral n at that type
//
// `--` starts a comment that runs to the end of the line.

Type parse_type(std::string_view text);
Term parse_term(std::string_view text);
/// Parses with additional free-variable declarations.
Term parse_term(std::string_view text, const Context& context);

struct PrintOptions {
  /// Print recognised numerals as #m{T}.
  bool numeral_sugar = true;
  /// Prefix `[x:T, ...] ` declaring the free variables.
  bool context_prefix = true;
};

std::string to_string(const Term& term, const PrintOptions& options = {});

/// m if `term` is literally \f:a->a. \x:a. f^m x; a receives the type.
std::optional<std::size_t> match_numeral(const Term& term,
                                         Type* alpha = nullptr);

/// Tagged-tree serialization: one JSON object per node with the fields
/// `kind`, `type` and `children` (plus `name`, `index`, `binder` or
/// `subscript` where the kind needs them).
std::string to_tree(const Term& term);
Term from_tree(std::string_view text);

}  // namespace lambday
