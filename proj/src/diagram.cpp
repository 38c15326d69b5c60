#include "spg/diagram.hpp"

#include <sstream>

namespace spg {

namespace {

std::string symbols_of(const SymbolUniverse& u, const Bits& b, int bracket_symbol = -1) {
  std::ostringstream out;
  bool first = true;
  b.for_each([&](int slot) {
    if (!first) out << " ";
    first = false;
    int sym = u.symbol_of_slot(slot);
    if (sym == bracket_symbol)
      out << "[" << sym << "]";
    else
      out << sym;
  });
  if (bracket_symbol >= 0 && !b.test(u.slot_of(bracket_symbol))) {
    if (!first) out << " ";
    out << "[" << bracket_symbol << "]";
  }
  return out.str();
}

void pad_to(std::string& s, size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
}

std::string two_rows(const std::string& tag, std::string row1, std::string row2,
                     const std::string& note1, const std::string& note2) {
  size_t w = std::max(row1.size(), row2.size());
  pad_to(row1, w);
  pad_to(row2, w);
  std::ostringstream out;
  out << tag << "\n";
  out << "  row1 | " << row1 << " |  " << note1 << "\n";
  out << "  row2 | " << row2 << " |  " << note2 << "\n";
  return out.str();
}

}  // namespace

std::string diagram_interp(const SymbolUniverse& base, const Interp1Record& rec) {
  std::ostringstream r1, r2;
  r1 << "f=" << rec.f << " | P: " << symbols_of(base, rec.P);
  r2 << "g=" << rec.g << " | P: " << symbols_of(base, rec.P);
  std::string out = two_rows("I[" + std::to_string(rec.k) + "]  (width d+1)", r1.str(), r2.str(),
                             "= F, a set of layer " + std::to_string(rec.k),
                             "= G, a set of layer " + std::to_string(rec.k + 1));
  out += "  pi   | U: " + symbols_of(base, rec.U) + "\n";
  return out;
}

std::string diagram_resemblers(const SymbolUniverse& base, const Interp1Record& rec) {
  std::ostringstream out;
  rec.P.for_each([&](int slot) {
    int a = base.symbol_of_slot(slot);
    Bits core = rec.P;
    core.reset(slot);
    std::string row = "f=" + std::to_string(rec.f) + " g=" + std::to_string(rec.g) +
                      " | P\\a: " + symbols_of(base, core) + " [" + std::to_string(a) + "]";
    out << two_rows("R[" + std::to_string(rec.k) + ", a=" + std::to_string(a) +
                        "]  (correspondence set, removed)",
                    row, row, "", "");
  });
  return out.str();
}

std::string diagram_interp(const SymbolUniverse& base, const Interp2Record& rec) {
  std::string where = "(" + std::to_string(rec.j) + "," + std::to_string(rec.k) + ")";
  std::ostringstream r1, r2;
  if (!rec.end) {
    r1 << "f=" << rec.f << " | P: " << symbols_of(base, rec.P)
       << " | Q: " << symbols_of(base, rec.Q);
    r2 << "g=" << rec.g << " | P: " << symbols_of(base, rec.P)
       << " | Q: " << symbols_of(base, rec.Q);
    std::string out =
        two_rows("I" + where + "  (mid-section, width d+1)", r1.str(), r2.str(),
                 "= F+Q in layer " + where,
                 "= G+Q in layer (" + std::to_string(rec.j) + "," + std::to_string(rec.k + 1) + ")");
    out += "  A-part U: " + symbols_of(base, rec.U) + "\n";
    return out;
  }
  r1 << "f=" << rec.f << " | P: " << symbols_of(base, rec.P)
     << " | Q: " << symbols_of(base, rec.Q);
  r2 << "     | P: " << symbols_of(base, rec.P) << " | Q: " << symbols_of(base, rec.Q)
     << " | h=" << rec.h;
  std::string out = two_rows(
      "I" + where + "  (end-of-section, width d+1)", r1.str(), r2.str(),
      "= F+Q in layer " + where, "= P+H in layer (" + std::to_string(rec.j + 1) + ",1)");
  out += "  A-part U: " + symbols_of(base, rec.U) + "\n";
  return out;
}

std::string diagram_resemblers(const SymbolUniverse& base, const Interp2Record& rec) {
  std::ostringstream out;
  std::string where = "(" + std::to_string(rec.j) + "," + std::to_string(rec.k) + ")";
  rec.P.for_each([&](int slot) {
    int a = base.symbol_of_slot(slot);
    Bits core = rec.P;
    core.reset(slot);
    std::string second = rec.end ? "h=" + std::to_string(rec.h) : "g=" + std::to_string(rec.g);
    std::string row = "f=" + std::to_string(rec.f) + " " + second + " | P\\a: " +
                      symbols_of(base, core) + " [" + std::to_string(a) + "] | Q: " +
                      symbols_of(base, rec.Q);
    out << two_rows("R" + where + " a=" + std::to_string(a) + "  (type a, removed)", row, row, "",
                    "");
  });
  if (rec.end) {
    rec.Q.for_each([&](int slot) {
      int b = base.symbol_of_slot(slot);
      Bits core = rec.Q;
      core.reset(slot);
      std::string row = "f=" + std::to_string(rec.f) + " h=" + std::to_string(rec.h) +
                        " | P: " + symbols_of(base, rec.P) + " | Q\\b: " + symbols_of(base, core) +
                        " [" + std::to_string(b) + "]";
      out << two_rows("R" + where + " b=" + std::to_string(b) + "  (type b, removed)", row, row,
                      "", "");
    });
  }
  return out.str();
}

template <class Rec>
static std::string render_all(const SymbolUniverse& base, const std::vector<Rec>& records) {
  std::ostringstream out;
  for (const auto& rec : records) {
    out << diagram_interp(base, rec);
    out << diagram_resemblers(base, rec);
    out << "\n";
  }
  return out.str();
}

std::string render_diagrams(const SymbolUniverse& base, const std::vector<Interp1Record>& records) {
  return render_all(base, records);
}
std::string render_diagrams(const SymbolUniverse& base, const std::vector<Interp2Record>& records) {
  return render_all(base, records);
}

}  // namespace spg
