#pragma once

#include <string>
#include <string_view>

#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

// Parses the text form produced by render(), plus the obvious extras:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('⊙' | '*') unary)*
//   unary  := '-' unary | atom ('^' n)?
//   atom   := integer | L | L^k | L^(k/2) | [name] | [name@space] | [mu_n:name]
//           | Y(g1+g2) | Y(0) | '(' expr ')'
// Symbols are resolved against the registry as seen from `space` and rewritten
// (Z2 covers, aliases) on the way in. Throws Error(Parse) with the offset.
Motive parse_motive(std::string_view text, const Registry& reg, const std::string& space);

}  // namespace motivic
