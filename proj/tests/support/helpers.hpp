#pragma once

#include <string_view>

#include "lambday/syntax.hpp"
#include "lambday/term.hpp"

namespace lambday::testing {

inline Term T(std::string_view text) { return parse_term(text); }
inline Type Ty(std::string_view text) { return parse_type(text); }

inline const Type kO = Type::ground();
inline const Type kOO = Type::arrow(kO, kO);
inline const Type kNat = Type::numeral(kO);

}  // namespace lambday::testing
