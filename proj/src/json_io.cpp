#include "spg/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spg/error.hpp"

namespace spg {

Json universe_to_json(const SymbolUniverse& u) {
  Json j;
  switch (u.kind()) {
    case UniverseKind::Plain: j["kind"] = "plain"; break;
    case UniverseKind::Doubled: j["kind"] = "doubled"; break;
    case UniverseKind::Bipartite: j["kind"] = "bipartite"; break;
    case UniverseKind::DoubledBipartite: j["kind"] = "doubled_bipartite"; break;
  }
  if (u.is_bipartite()) {
    j["nA"] = u.class_a_size();
    j["nB"] = u.class_b_size();
  } else {
    j["n"] = u.base_symbols();
  }
  return j;
}

SymbolUniverse universe_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "plain") return SymbolUniverse::plain(j.at("n").get<int>());
  if (kind == "doubled") return SymbolUniverse::doubled(j.at("n").get<int>());
  if (kind == "bipartite")
    return SymbolUniverse::bipartite(j.at("nA").get<int>(), j.at("nB").get<int>());
  if (kind == "doubled_bipartite")
    return SymbolUniverse::doubled_bipartite(j.at("nA").get<int>(), j.at("nB").get<int>());
  fail(Errc::Io, "unknown universe kind '" + kind + "'");
}

Json face_to_json(const SymbolUniverse& u, const FaceSet& f) {
  Json arr = Json::array();
  f.for_each([&](int slot) {
    if (u.is_doubled())
      arr.push_back(std::to_string(u.row_of_slot(slot)) + ":" +
                    std::to_string(u.symbol_of_slot(slot)));
    else
      arr.push_back(u.symbol_of_slot(slot));
  });
  return arr;
}

FaceSet face_from_json(const SymbolUniverse& u, const Json& j) {
  FaceSet f;
  for (const auto& e : j) {
    if (e.is_string()) {
      const std::string s = e.get<std::string>();
      auto colon = s.find(':');
      if (colon == std::string::npos) fail(Errc::Io, "doubled symbol must look like 'row:i'");
      int row = std::stoi(s.substr(0, colon));
      int sym = std::stoi(s.substr(colon + 1));
      f.set(u.slot_of(row, sym));
    } else {
      f.set(u.slot_of(e.get<int>()));
    }
  }
  return f;
}

Json family_to_json(const LayerFamily& family) {
  Json j;
  j["universe"] = universe_to_json(family.universe);
  j["d"] = family.d;
  Json layers = Json::array();
  for (const auto& layer : family.layers) {
    auto sorted = layer;
    std::sort(sorted.begin(), sorted.end(),
              [](const Bits& a, const Bits& b) { return a.canonical_less(b); });
    Json jl = Json::array();
    for (const auto& member : sorted) jl.push_back(face_to_json(family.universe, member));
    layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(layers);
  if (family.sectioned()) j["sections"] = family.sections;
  return j;
}

LayerFamily family_from_json(const Json& j) {
  LayerFamily family;
  family.universe = universe_from_json(j.at("universe"));
  family.d = j.at("d").get<int>();
  for (const auto& jl : j.at("layers")) {
    std::vector<FaceSet> layer;
    layer.reserve(jl.size());
    for (const auto& jf : jl) layer.push_back(face_from_json(family.universe, jf));
    family.layers.push_back(std::move(layer));
  }
  if (j.contains("sections")) family.sections = j.at("sections").get<std::vector<int>>();
  family.validate();
  return family;
}

Json incidence_to_json(const PolytopeIncidence& p) {
  Json j;
  j["n"] = p.n;
  j["d"] = p.d;
  SymbolUniverse u = SymbolUniverse::plain(p.n);
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(face_to_json(u, v));
  j["vertices"] = std::move(verts);
  return j;
}

PolytopeIncidence incidence_from_json(const Json& j) {
  PolytopeIncidence p;
  p.n = j.at("n").get<int>();
  p.d = j.at("d").get<int>();
  SymbolUniverse u = SymbolUniverse::plain(p.n);
  for (const auto& jv : j.at("vertices")) p.vertices.push_back(face_from_json(u, jv));
  p.validate();
  return p;
}

std::string dot_export(const SubsetPartitionGraph& g) {
  std::ostringstream out;
  out << "graph spg {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"";
    const auto& col = g.vertices[static_cast<size_t>(v)];
    for (size_t i = 0; i < col.size(); ++i) {
      if (i) out << " ";
      out << face_to_json(g.universe, col[i]).dump();
    }
    out << "\"];\n";
  }
  for (auto [v, w] : g.edges) out << "  v" << v << " -- v" << w << ";\n";
  out << "}\n";
  return out.str();
}

void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::Io, "cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::Io, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(Errc::Io, "failed writing " + path);
}

}  // namespace spg
