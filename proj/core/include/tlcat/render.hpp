#pragma once

#include <string>
#include <string_view>

#include "tlcat/diagram.hpp"
#include "tlcat/morphism.hpp"

namespace tlcat {

// Each arc gets a letter, shown next to both of its endpoints; a vacant node
// is drawn as 'o'.  Morphisms are rendered one term per block with its
// coefficient on top.
std::string render_ascii(const Diagram& d);
std::string render_ascii(const Morphism& f);

// A standalone SVG document (no external references).  Terms of a morphism
// are laid out left to right.
std::string render_svg(const Diagram& d);
std::string render_svg(const Morphism& f);

// Accepts either a morphism ("M<-N : ...") or a single diagram.
Morphism parse_diagram_or_morphism(std::string_view text);

}  // namespace tlcat
