#include "spg/construction1.hpp"

#include <algorithm>
#include <unordered_set>

#include "spg/child_index.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/ops.hpp"
#include "spg/rng.hpp"

namespace spg {

void Pipeline1Config::validate() const {
  if (n < 2 || d < 2 || d > n) fail(Errc::Domain, "need 2 <= d <= n");
  if (m < 3) fail(Errc::Domain, "need m >= 3");
}

LayerFamily merge_layers(const LayerFamily& V, int m) {
  if (m < 1) fail(Errc::Domain, "need m >= 1");
  const int ell = V.layer_count();
  if (ell < m)
    fail(Errc::TooFewLayers, "cannot merge " + std::to_string(ell) + " layers in groups of " +
                                 std::to_string(m));
  const int delta = ell / m;
  LayerFamily W;
  W.universe = V.universe;
  W.d = V.d;
  W.layers.resize(static_cast<size_t>(delta));
  for (int i = 0; i < ell; ++i) {
    int block = std::min(i / m, delta - 1);  // the last block absorbs the remainder
    auto& dst = W.layers[static_cast<size_t>(block)];
    const auto& src = V.layers[static_cast<size_t>(i)];
    dst.insert(dst.end(), src.begin(), src.end());
  }
  return W;
}

LayerFamily double_family(const LayerFamily& W) {
  LayerFamily X;
  X.universe = W.universe.doubled_version();
  X.d = 2 * W.d;
  X.layers.reserve(W.layers.size());
  for (const auto& layer : W.layers) {
    std::vector<FaceSet> out;
    out.reserve(layer.size());
    for (const auto& c : layer) out.push_back(double_set(W.universe, c));
    X.layers.push_back(std::move(out));
  }
  X.sections = W.sections;
  return X;
}

namespace {

int single_extra_symbol(const SymbolUniverse& base, const Bits& container, const Bits& part) {
  Bits extra = container - part;
  return base.symbol_of_slot(extra.next(0));
}

/// Two-row doubled set with the given rows.
FaceSet rows_to_doubled(const Bits& row1, const Bits& row2) {
  FaceSet out;
  row1.for_each([&](int slot) { out.set(2 * slot); });
  row2.for_each([&](int slot) { out.set(2 * slot + 1); });
  return out;
}

}  // namespace

Interp1Output choose_interpolations(const LayerFamily& W, const LayerFamily& X,
                                    const Pipeline1Config& cfg) {
  const int delta = W.layer_count();
  if (delta < 2) fail(Errc::TooFewLayers, "interpolation needs at least 2 merged layers");
  const SymbolUniverse& base = W.universe;

  std::vector<ChildIndex> layer_index;
  layer_index.reserve(W.layers.size());
  for (const auto& layer : W.layers) layer_index.push_back(ChildIndex::build(layer));

  Rng rng = Rng(cfg.seed).fork("c1-interp");
  SeparationThresholds thresholds;
  thresholds.pairwise_intersection_max = cfg.effective_separation_bound();
  std::vector<int> sizes(static_cast<size_t>(delta - 1), W.d - 1);

  auto draw_records = [&](Rng& prng) -> std::vector<Interp1Record> {
    std::vector<FaceSet> ps;
    for (int s : sizes) {
      Bits b;
      for (int slot : prng.sample(base.full_mask().slots(), s)) b.set(slot);
      ps.push_back(b);
    }
    std::vector<Interp1Record> records;
    std::unordered_set<Bits, BitsHash> used_interps;
    for (int k = 1; k <= delta - 1; ++k) {
      const FaceSet& P = ps[static_cast<size_t>(k - 1)];
      auto pick = [&](int layer0, int exclude_symbol) -> std::pair<int, FaceSet> {
        auto span = layer_index[static_cast<size_t>(layer0)].containers(P);
        std::vector<std::pair<int, FaceSet>> cands;
        for (int32_t mi : span) {
          const FaceSet& E = W.layers[static_cast<size_t>(layer0)][static_cast<size_t>(mi)];
          int sym = single_extra_symbol(base, E, P);
          if (sym != exclude_symbol) cands.emplace_back(sym, E);
        }
        if (cands.empty())
          fail(Errc::ConstructionFailure,
               "no container of P in layer " + std::to_string(layer0 + 1) +
                   "; the merged family lost covering");
        return cands[prng.below(cands.size())];
      };

      Interp1Record rec;
      rec.k = k;
      rec.P = P;
      bool placed = false;
      for (size_t attempt = 0; attempt < 64 && !placed; ++attempt) {
        auto [g, G] = pick(k, -1);
        auto [f, F] = pick(k - 1, g);
        rec.g = g;
        rec.G = G;
        rec.f = f;
        rec.F = F;
        rec.U = P | Bits::single(base.slot_of(f)) | Bits::single(base.slot_of(g));
        rec.I = rows_to_doubled(F, G);
        if (!used_interps.count(rec.I)) placed = true;
      }
      if (!placed)
        fail(Errc::ConstructionFailure,
             "could not draw a fresh interpolation set for layer " + std::to_string(k));
      used_interps.insert(rec.I);
      records.push_back(std::move(rec));
    }
    return records;
  };

  // the U sets must pairwise meet in at most d-2 symbols: implied by the
  // P bound only when the drawn f, g stay clear of the other records' sets,
  // so strict mode rejects on both
  auto violations = [&](const std::vector<Interp1Record>& records) {
    std::vector<FaceSet> ps, us;
    for (const auto& r : records) {
      ps.push_back(r.P);
      us.push_back(r.U);
    }
    auto log = separation_violations(ps, thresholds);
    SeparationThresholds ut;
    ut.pairwise_intersection_max = W.d - 2;
    for (auto v : separation_violations(us, ut)) {
      v.constraint = "u-intersection";
      log.push_back(std::move(v));
    }
    return log;
  };

  Interp1Output out;
  Rng prng = rng.fork("p-family");
  std::vector<Interp1Record> records;
  if (cfg.strict) {
    if (cfg.effective_separation_bound() < 0)
      fail(Errc::SeparationInfeasible, "pairwise-intersection: bound below zero");
    size_t attempt = 0;
    for (;; ++attempt) {
      if (attempt >= std::max<size_t>(1, cfg.retry_budget)) {
        fail(Errc::SeparationInfeasible,
             "retry budget exhausted while separating the interpolation data");
      }
      records = draw_records(prng);
      if (violations(records).empty()) break;
    }
  } else {
    records = draw_records(prng);
    out.separation_log = violations(records);
  }

  out.Y = X;
  for (const auto& rec : records)
    out.Y.layers[static_cast<size_t>(rec.k - 1)].push_back(rec.I);
  out.records = std::move(records);
  return out;
}

Removal1Output resembler_removal(const LayerFamily& Y, const std::vector<Interp1Record>& records) {
  const SymbolUniverse base = Y.universe.base_version();
  std::unordered_set<Bits, BitsHash> targets;
  for (const auto& rec : records) {
    rec.P.for_each([&](int a_slot) {
      Bits core = rec.P;
      core.reset(a_slot);
      core.set(base.slot_of(rec.f));
      core.set(base.slot_of(rec.g));
      targets.insert(double_set(base, core));
    });
  }

  Removal1Output out;
  out.Z.universe = Y.universe;
  out.Z.d = Y.d;
  out.Z.sections = Y.sections;
  for (size_t k = 0; k < Y.layers.size(); ++k) {
    std::vector<FaceSet> kept;
    kept.reserve(Y.layers[k].size());
    for (const auto& member : Y.layers[k]) {
      if (targets.count(member)) {
        out.removed.push_back(member);
      } else {
        kept.push_back(member);
      }
    }
    if (kept.empty())
      fail(Errc::DegenerateLayer, "removal emptied layer " + std::to_string(k + 1));
    out.Z.layers.push_back(std::move(kept));
  }
  return out;
}

Pipeline1Result pipeline1(const Pipeline1Config& cfg, const CheckOptions& check) {
  cfg.validate();
  Pipeline1Result res;
  res.config = cfg;

  res.V = build_disjoint_covering_designs(cfg.n, cfg.d, Rng(cfg.seed).fork("c1-designs").base_seed(),
                                          cfg.covering)
              .to_layer_family();
  res.ell = res.V.layer_count();

  res.W = merge_layers(res.V, cfg.m);
  res.delta = res.W.layer_count();
  if (res.delta != res.ell / cfg.m)
    fail(Errc::ConstructionFailure, "merge produced an unexpected layer count");
  {
    auto cov = check_covering_family(res.W, CoveringVariant::m_covering(cfg.m), check);
    if (!cov.passed)
      fail(Errc::ConstructionFailure, "merged family lost m-covering; cannot interpolate");
  }

  res.X = double_family(res.W);
  auto interp = choose_interpolations(res.W, res.X, cfg);
  res.Y = std::move(interp.Y);
  res.records = std::move(interp.records);
  res.separation_log = std::move(interp.separation_log);
  res.separation_clean = res.separation_log.empty();

  auto removal = resembler_removal(res.Y, res.records);
  res.Z = std::move(removal.Z);
  res.removed = std::move(removal.removed);
  res.Z.validate();

  // the linking sets D(G_k) must survive for strong adjacency
  {
    std::unordered_set<Bits, BitsHash> gone(res.removed.begin(), res.removed.end());
    for (const auto& rec : res.records) {
      if (gone.count(double_set(res.W.universe, rec.G)))
        res.linking_violations.push_back("D(G) for layer " + std::to_string(rec.k));
    }
    if (!res.linking_violations.empty()) {
      if (cfg.strict)
        fail(Errc::ConstructionFailure,
             "a linking set was removed despite enforced separation: " +
                 res.linking_violations.front());
      res.separation_clean = false;
    }
  }

  if (!cfg.strict) res.waived.push_back("pairwise-intersection bound enforced only by logging");
  res.waived.push_back("asymptotic smallness hypotheses unchecked at this scale");

  res.reports.push_back(check_endpoint_count(res.Z, check));
  res.reports.push_back(check_adjacency(res.Z, check));
  res.reports.push_back(check_strong_adjacency(res.Z, check));
  res.reports.push_back(check_dimension_reduction(res.Z, check));
  res.reports.push_back(check_width_covering(res.Z, check));
  return res;
}

nlohmann::json Pipeline1Result::stats_json() const {
  nlohmann::json j;
  j["n"] = config.n;
  j["d"] = config.d;
  j["m"] = config.m;
  j["seed"] = config.seed;
  j["mode"] = config.strict ? "strict" : "relaxed";
  j["ell"] = ell;
  j["delta"] = delta;
  j["merge_identity"] = (delta == ell / config.m);
  j["interpolations"] = records.size();
  j["removed"] = removed.size();
  j["members"] = Z.member_count();
  auto g = as_graph(Z);
  j["diameter"] = g.diameter();
  auto hr = g.hirsch_ratio();
  j["hirsch_ratio"] = {{"num", hr.num}, {"den", hr.den}, {"value", hr.value()}};
  j["separation_clean"] = separation_clean;
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : separation_log)
    viols.push_back({{"constraint", v.constraint},
                     {"indices", v.indices},
                     {"value", v.value},
                     {"bound", v.bound}});
  j["separation_violations"] = viols;
  j["linking_violations"] = linking_violations;
  j["waived"] = waived;
  return j;
}

nlohmann::json records1_to_json(const SymbolUniverse& base,
                                const std::vector<Interp1Record>& records) {
  nlohmann::json arr = nlohmann::json::array();
  const SymbolUniverse dbl = base.doubled_version();
  for (const auto& r : records) {
    nlohmann::json j;
    j["k"] = r.k;
    j["P"] = face_to_json(base, r.P);
    j["f"] = r.f;
    j["g"] = r.g;
    j["F"] = face_to_json(base, r.F);
    j["G"] = face_to_json(base, r.G);
    j["U"] = face_to_json(base, r.U);
    j["I"] = face_to_json(dbl, r.I);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<Interp1Record> records1_from_json(const SymbolUniverse& base, const nlohmann::json& j) {
  std::vector<Interp1Record> out;
  const SymbolUniverse dbl = base.doubled_version();
  for (const auto& e : j) {
    Interp1Record r;
    r.k = e.at("k").get<int>();
    r.P = face_from_json(base, e.at("P"));
    r.f = e.at("f").get<int>();
    r.g = e.at("g").get<int>();
    r.F = face_from_json(base, e.at("F"));
    r.G = face_from_json(base, e.at("G"));
    r.U = face_from_json(base, e.at("U"));
    r.I = face_from_json(dbl, e.at("I"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace spg
