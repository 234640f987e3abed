#pragma once

#include <string>

#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

// Canonical text: terms in normal-form order joined by " + " / " - ", factors
// joined by " ⊙ ". Bundle components print as Y(g1+g2) with generator names
// from the registry; the registry-free overload uses e1, e2, ...
std::string render(const Motive& m, const Registry& reg);
std::string render(const Motive& m);

std::string render_symbol(const Symbol& s);

}  // namespace motivic
