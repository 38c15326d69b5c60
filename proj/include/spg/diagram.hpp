#pragma once

#include <string>

#include "spg/construction1.hpp"
#include "spg/construction2.hpp"

namespace spg {

/// Fixed-width two-row renderings of interpolation sets and the
/// correspondence sets removed around them; removed symbols are bracketed.
std::string diagram_interp(const SymbolUniverse& base, const Interp1Record& rec);
std::string diagram_resemblers(const SymbolUniverse& base, const Interp1Record& rec);
std::string diagram_interp(const SymbolUniverse& base, const Interp2Record& rec);
std::string diagram_resemblers(const SymbolUniverse& base, const Interp2Record& rec);

std::string render_diagrams(const SymbolUniverse& base, const std::vector<Interp1Record>& records);
std::string render_diagrams(const SymbolUniverse& base, const std::vector<Interp2Record>& records);

}  // namespace spg
