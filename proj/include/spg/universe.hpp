#pragma once

#include <string>

#include "spg/bits.hpp"
#include "spg/error.hpp"

namespace spg {

enum class UniverseKind { Plain, Doubled, Bipartite, DoubledBipartite };

/// A symbol universe. Base symbols are 1..n; bipartite kinds split them into
/// class A = 1..nA and class B = nA+1..n. Doubled kinds carry symbols (row, i)
/// with row in {1,2}, encoded in slot 2*(i-1)+(row-1) so that face sets stay
/// fixed-width bit masks.
class SymbolUniverse {
 public:
  SymbolUniverse() = default;

  static SymbolUniverse plain(int n) { return SymbolUniverse(UniverseKind::Plain, n, 0); }
  static SymbolUniverse doubled(int n) { return SymbolUniverse(UniverseKind::Doubled, n, 0); }
  static SymbolUniverse bipartite(int nA, int nB) {
    return SymbolUniverse(UniverseKind::Bipartite, nA, nB);
  }
  static SymbolUniverse doubled_bipartite(int nA, int nB) {
    return SymbolUniverse(UniverseKind::DoubledBipartite, nA, nB);
  }

  UniverseKind kind() const { return kind_; }
  bool is_doubled() const {
    return kind_ == UniverseKind::Doubled || kind_ == UniverseKind::DoubledBipartite;
  }
  bool is_bipartite() const {
    return kind_ == UniverseKind::Bipartite || kind_ == UniverseKind::DoubledBipartite;
  }

  /// Count of base symbols n (ignoring doubling).
  int base_symbols() const { return nA_ + nB_; }
  int class_a_size() const { return nA_; }
  int class_b_size() const { return nB_; }
  int slots() const { return is_doubled() ? 2 * base_symbols() : base_symbols(); }

  int slot_of(int symbol) const {
    check(!is_doubled(), "plain symbol in doubled universe");
    check(symbol >= 1 && symbol <= base_symbols(), "symbol out of range");
    return symbol - 1;
  }
  int slot_of(int row, int symbol) const {
    check(is_doubled(), "doubled symbol in plain universe");
    check(row == 1 || row == 2, "row must be 1 or 2");
    check(symbol >= 1 && symbol <= base_symbols(), "symbol out of range");
    return 2 * (symbol - 1) + (row - 1);
  }
  int symbol_of_slot(int slot) const { return is_doubled() ? slot / 2 + 1 : slot + 1; }
  int row_of_slot(int slot) const {
    check(is_doubled(), "row of plain slot");
    return slot % 2 + 1;
  }

  bool symbol_in_a(int symbol) const { return symbol <= nA_; }

  /// Mask of every valid slot.
  Bits full_mask() const {
    Bits b;
    for (int i = 0; i < slots(); ++i) b.set(i);
    return b;
  }
  /// Slots carrying class-A symbols (bipartite kinds only).
  Bits a_mask() const {
    check(is_bipartite(), "class mask of non-bipartite universe");
    Bits b;
    if (is_doubled()) {
      for (int i = 0; i < 2 * nA_; ++i) b.set(i);
    } else {
      for (int i = 0; i < nA_; ++i) b.set(i);
    }
    return b;
  }
  Bits b_mask() const { return full_mask() - a_mask(); }

  SymbolUniverse doubled_version() const {
    if (is_doubled()) fail(Errc::InvalidUniverse, "universe already doubled");
    return is_bipartite() ? doubled_bipartite(nA_, nB_) : doubled(base_symbols());
  }
  SymbolUniverse base_version() const {
    if (!is_doubled()) fail(Errc::InvalidUniverse, "universe not doubled");
    return is_bipartite() ? bipartite(nA_, nB_) : plain(base_symbols());
  }

  bool operator==(const SymbolUniverse& o) const = default;

  std::string describe() const {
    switch (kind_) {
      case UniverseKind::Plain: return "plain(" + std::to_string(base_symbols()) + ")";
      case UniverseKind::Doubled: return "doubled(" + std::to_string(base_symbols()) + ")";
      case UniverseKind::Bipartite:
        return "bipartite(" + std::to_string(nA_) + "," + std::to_string(nB_) + ")";
      case UniverseKind::DoubledBipartite:
        return "doubled_bipartite(" + std::to_string(nA_) + "," + std::to_string(nB_) + ")";
    }
    return "?";
  }

 private:
  SymbolUniverse(UniverseKind k, int nA, int nB) : kind_(k), nA_(nA), nB_(nB) {
    if (nA_ < 0 || nB_ < 0 || base_symbols() < 1) fail(Errc::InvalidUniverse, "empty universe");
    if (is_bipartite() && (nA_ == 0 || nB_ == 0))
      fail(Errc::InvalidUniverse, "bipartite universe needs both classes nonempty");
    if (slots() > Bits::kCapacity)
      fail(Errc::InvalidUniverse, "universe exceeds " + std::to_string(Bits::kCapacity) +
                                      " slots; rebuild with a larger Bits capacity");
  }

  static void check(bool ok, const char* what) {
    if (!ok) fail(Errc::InvalidUniverse, what);
  }

  UniverseKind kind_ = UniverseKind::Plain;
  int nA_ = 1;
  int nB_ = 0;
};

/// Face sets are plain bit masks; the owning structure carries the universe.
using FaceSet = Bits;

}  // namespace spg
