#include "spg/ops.hpp"

#include "spg/error.hpp"

namespace spg {

FaceSet face_from_symbols(const SymbolUniverse& u, const std::vector<int>& symbols) {
  FaceSet f;
  for (int s : symbols) f.set(u.slot_of(s));
  return f;
}

FaceSet face_from_cells(const SymbolUniverse& u, const std::vector<std::pair<int, int>>& cells) {
  FaceSet f;
  for (auto [row, sym] : cells) f.set(u.slot_of(row, sym));
  return f;
}

FaceSet double_set(const SymbolUniverse& u, const FaceSet& c) {
  if (u.is_doubled()) fail(Errc::InvalidUniverse, "doubling a face of a doubled universe");
  FaceSet out;
  c.for_each([&](int slot) {
    out.set(2 * slot);
    out.set(2 * slot + 1);
  });
  return out;
}

FaceSet project(const SymbolUniverse& u, const FaceSet& s) {
  if (!u.is_doubled()) fail(Errc::InvalidUniverse, "projecting a face of a plain universe");
  FaceSet out;
  s.for_each([&](int slot) { out.set(slot / 2); });
  return out;
}

FaceSet both_rows_columns(const SymbolUniverse& u, const FaceSet& s) {
  if (!u.is_doubled()) fail(Errc::InvalidUniverse, "row analysis of a plain universe face");
  FaceSet out;
  for (int i = 0; i < u.base_symbols(); ++i)
    if (s.test(2 * i) && s.test(2 * i + 1)) out.set(i);
  return out;
}

int width(const SymbolUniverse& u, const FaceSet& s) { return project(u, s).count(); }

int awidth(const SymbolUniverse& u, const FaceSet& s) {
  if (!(u.is_doubled() && u.is_bipartite()))
    fail(Errc::InvalidUniverse, "A-width requires a doubled bipartite universe");
  return static_cast<int>((project(u, s) & u.base_version().a_mask()).count());
}

int bwidth(const SymbolUniverse& u, const FaceSet& s) {
  if (!(u.is_doubled() && u.is_bipartite()))
    fail(Errc::InvalidUniverse, "B-width requires a doubled bipartite universe");
  return width(u, s) - awidth(u, s);
}

bool is_active(const std::vector<FaceSet>& collection, const FaceSet& c) {
  for (const auto& e : collection)
    if (c.subset_of(e)) return true;
  return false;
}

std::vector<int> active_layers(const LayerFamily& family, const FaceSet& c) {
  if (!c.subset_of(family.universe.full_mask()))
    fail(Errc::InvalidUniverse, "face does not fit the family universe");
  std::vector<int> out;
  for (int k = 0; k < family.layer_count(); ++k)
    if (is_active(family.layers[static_cast<size_t>(k)], c)) out.push_back(k + 1);
  return out;
}

}  // namespace spg
