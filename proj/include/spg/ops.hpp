#pragma once

#include <vector>

#include "spg/family.hpp"

namespace spg {

/// Build a face from 1-based base symbols (plain/bipartite universes).
FaceSet face_from_symbols(const SymbolUniverse& u, const std::vector<int>& symbols);
/// Build a doubled face from (row, symbol) pairs.
FaceSet face_from_cells(const SymbolUniverse& u, const std::vector<std::pair<int, int>>& cells);

/// D(C) = [2] x C. Input face lives over a plain or bipartite universe; the
/// result lives over its doubled version.
FaceSet double_set(const SymbolUniverse& u, const FaceSet& c);

/// Vertical projection: the base symbols whose column is touched. Input over
/// a doubled universe; result over the base version.
FaceSet project(const SymbolUniverse& u, const FaceSet& s);

/// Columns present in both rows. Result over the base version.
FaceSet both_rows_columns(const SymbolUniverse& u, const FaceSet& s);

int width(const SymbolUniverse& u, const FaceSet& s);
int awidth(const SymbolUniverse& u, const FaceSet& s);
int bwidth(const SymbolUniverse& u, const FaceSet& s);

/// 1-based indices of the layers containing a superset of c, ascending.
std::vector<int> active_layers(const LayerFamily& family, const FaceSet& c);

/// True if some set in the collection contains c.
bool is_active(const std::vector<FaceSet>& collection, const FaceSet& c);

}  // namespace spg
