#include "spg/construction2.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "spg/child_index.hpp"
#include "spg/construction1.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/ops.hpp"
#include "spg/rng.hpp"

namespace spg {

std::pair<int, int> section_bounds(int d, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) fail(Errc::Domain, "need 0 < epsilon < 1/2");
  if (d < 1) fail(Errc::Domain, "need d >= 1");
  int jl = static_cast<int>(std::ceil(epsilon * d - 1e-9));
  int jr = static_cast<int>(std::floor((1.0 - epsilon) * d + 1e-9));
  jl = std::max(jl, 1);
  return {jl, jr};
}

void SectionedConfig::validate() const {
  if (n < 8 || n % 4 != 0) fail(Errc::Domain, "need n >= 8 with n = 0 mod 4");
  if (m < 1) fail(Errc::Domain, "need m >= 1");
  auto [jl, jr] = section_bounds(d(), epsilon);
  if (jl > jr) fail(Errc::Domain, "the section window is empty at this (d, epsilon)");
}

namespace {

unsigned long long binom_ull(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned long long num = static_cast<unsigned long long>(n - k + i);
    if (r > (cap + 1) / num * static_cast<unsigned long long>(i)) return cap + 1;
    r = r * num / static_cast<unsigned long long>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

Bits shift_slots(const Bits& b, int offset) {
  Bits out;
  b.for_each([&](int slot) { out.set(slot + offset); });
  return out;
}

FaceSet rows_to_doubled(const Bits& row1, const Bits& row2) {
  FaceSet out;
  row1.for_each([&](int slot) { out.set(2 * slot); });
  row2.for_each([&](int slot) { out.set(2 * slot + 1); });
  return out;
}

}  // namespace

SectionedBuild build_sectioned_family(const SectionedConfig& cfg) {
  cfg.validate();
  const int d = cfg.d();
  const int half = cfg.n / 2;
  auto [jl, jr] = section_bounds(d, cfg.epsilon);

  unsigned long long total = 0;
  for (int j = jl; j <= jr; ++j) {
    total += binom_ull(half, d - j, cfg.mesh_budget) * binom_ull(half, j, cfg.mesh_budget);
    if (total > cfg.mesh_budget)
      fail(Errc::BudgetExceeded, "mesh materialization needs more than " +
                                     std::to_string(cfg.mesh_budget) + " sets");
  }

  SectionedBuild out;
  out.jl = jl;
  out.jr = jr;
  out.V.universe = SymbolUniverse::bipartite(half, half);
  out.V.d = d;
  Rng rng(cfg.seed);

  for (int j = jl; j <= jr; ++j) {
    auto designsA = build_disjoint_covering_designs(
        half, d - j, rng.fork("mesh-A", static_cast<uint64_t>(j)).base_seed(), cfg.covering);
    auto designsB = build_disjoint_covering_designs(
        half, j, rng.fork("mesh-B", static_cast<uint64_t>(j)).base_seed(), cfg.covering);
    const int lA = static_cast<int>(designsA.layers.size());
    const int lB = static_cast<int>(designsB.layers.size());
    const int t = std::min(lA, lB);

    std::vector<std::vector<FaceSet>> mesh(static_cast<size_t>(t));
    for (int x = 0; x < lA; ++x) {
      for (int y = 0; y < lB; ++y) {
        auto& layer = mesh[static_cast<size_t>((x + y) % t)];
        for (const auto& ea : designsA.layers[static_cast<size_t>(x)])
          for (const auto& eb : designsB.layers[static_cast<size_t>(y)])
            layer.push_back(ea | shift_slots(eb, half));
      }
    }
    for (auto& layer : mesh) {
      out.V.layers.push_back(std::move(layer));
      out.V.sections.push_back(j);
    }
    out.plan.push_back({j, lA, lB, t, 0});
  }
  out.V.validate();
  return out;
}

LayerFamily merge_within_sections(const LayerFamily& V, int m,
                                  std::optional<std::pair<int, int>> window) {
  if (!V.sectioned()) fail(Errc::InvalidFamily, "merging within sections needs a sectioned family");
  if (m < 1) fail(Errc::Domain, "need m >= 1");

  LayerFamily W;
  W.universe = V.universe;
  W.d = V.d;
  for (const auto& range : V.section_ranges()) {
    const int j = range[0];
    if (window && (j < window->first || j > window->second)) continue;
    const int ell = range[2] - range[1] + 1;
    if (ell < m)
      fail(Errc::TooFewLayers, "section " + std::to_string(j) + " has " + std::to_string(ell) +
                                   " layers, fewer than m = " + std::to_string(m));
    const int delta = ell / m;
    size_t first_new = W.layers.size();
    W.layers.resize(first_new + static_cast<size_t>(delta));
    for (int i = 0; i < ell; ++i) {
      int block = std::min(i / m, delta - 1);
      const auto& src = V.layers[static_cast<size_t>(range[1] + i)];
      auto& dst = W.layers[first_new + static_cast<size_t>(block)];
      dst.insert(dst.end(), src.begin(), src.end());
    }
    for (int b = 0; b < delta; ++b) W.sections.push_back(j);
  }
  if (W.layers.empty()) fail(Errc::TooFewLayers, "no sections survive the window");
  return W;
}

namespace {

struct RecordSlot {
  int j, k;
  bool end;
  int layer0;       // absolute 0-based layer of (j, k)
  int next_layer0;  // layer the bridge lands in
};

std::vector<RecordSlot> record_slots(const LayerFamily& W) {
  std::vector<RecordSlot> slots;
  auto ranges = W.section_ranges();
  for (size_t ri = 0; ri < ranges.size(); ++ri) {
    const int j = ranges[ri][0];
    const int lo = ranges[ri][1], hi = ranges[ri][2];
    for (int l = lo; l < hi; ++l)
      slots.push_back({j, l - lo + 1, false, l, l + 1});
    if (ri + 1 < ranges.size()) {
      if (ranges[ri + 1][0] != j + 1)
        fail(Errc::InvalidFamily, "section numbers must be consecutive for interpolation");
      slots.push_back({j, hi - lo + 1, true, hi, ranges[ri + 1][1]});
    }
  }
  return slots;
}

int single_extra_slot(const Bits& container, const Bits& part) {
  Bits extra = container - part;
  if (extra.count() != 1) fail(Errc::ConstructionFailure, "container does not extend by one symbol");
  return extra.next(0);
}

}  // namespace

Interp2Output choose_interpolations2(const LayerFamily& W, const LayerFamily& X,
                                     const SectionedConfig& cfg) {
  const SymbolUniverse& base = W.universe;
  const int d = cfg.d();
  const Bits a_pool = base.a_mask();
  const Bits b_pool = base.b_mask();

  auto slots = record_slots(W);
  if (slots.empty()) {
    Interp2Output out;
    out.Y = X;
    return out;
  }

  std::vector<ChildIndex> layer_index;
  layer_index.reserve(W.layers.size());
  for (const auto& layer : W.layers) layer_index.push_back(ChildIndex::build(layer));

  std::vector<int> p_sizes, q_sizes;
  for (const auto& s : slots) {
    p_sizes.push_back(d - s.j - 1);
    q_sizes.push_back(s.j);
  }

  SeparationThresholds thresholds;
  thresholds.pairwise_difference_min = cfg.pairwise_diff_min;
  thresholds.four_union_min = cfg.effective_four_union_min();

  Rng rng = Rng(cfg.seed).fork("c2-interp");
  std::vector<FaceSet> ps, qs;
  std::vector<SeparationViolation> log;
  if (cfg.strict) {
    SeparationSpec spec{thresholds, cfg.retry_budget};
    Rng pr = rng.fork("p-family");
    ps = sample_separated_family(a_pool, p_sizes, spec, pr);
    Rng qr = rng.fork("q-family");
    qs = sample_separated_family(b_pool, q_sizes, spec, qr);
  } else {
    Rng pr = rng.fork("p-family");
    auto apool = a_pool.slots();
    for (int s : p_sizes) {
      Bits b;
      for (int slot : pr.sample(apool, s)) b.set(slot);
      ps.push_back(b);
    }
    Rng qr = rng.fork("q-family");
    auto bpool = b_pool.slots();
    for (int s : q_sizes) {
      Bits b;
      for (int slot : qr.sample(bpool, s)) b.set(slot);
      qs.push_back(b);
    }
    for (auto v : separation_violations(ps, thresholds)) {
      v.constraint = "P:" + v.constraint;
      log.push_back(std::move(v));
    }
    for (auto v : separation_violations(qs, thresholds)) {
      v.constraint = "Q:" + v.constraint;
      log.push_back(std::move(v));
    }
  }

  Interp2Output out;
  out.Y = X;
  out.separation_log = std::move(log);
  std::unordered_set<Bits, BitsHash> used_interps;

  for (size_t si = 0; si < slots.size(); ++si) {
    const auto& slot = slots[si];
    Interp2Record rec;
    rec.j = slot.j;
    rec.k = slot.k;
    rec.end = slot.end;
    rec.layer0 = slot.layer0;
    rec.P = ps[si];
    rec.Q = qs[si];
    const Bits pq = rec.P | rec.Q;

    auto pick_extra = [&](int layer0, const Bits& must_be_in,
                          int exclude_slot) -> std::pair<int, FaceSet> {
      auto span = layer_index[static_cast<size_t>(layer0)].containers(pq);
      std::vector<std::pair<int, FaceSet>> cands;
      for (int32_t mi : span) {
        const FaceSet& E = W.layers[static_cast<size_t>(layer0)][static_cast<size_t>(mi)];
        int extra = single_extra_slot(E, pq);
        if (!must_be_in.test(extra))
          fail(Errc::ConstructionFailure, "container extends on the wrong symbol class");
        if (extra != exclude_slot) cands.emplace_back(extra, E);
      }
      if (cands.empty())
        fail(Errc::ConstructionFailure,
             "no container in layer " + std::to_string(layer0 + 1) +
                 "; the sectioned family lost covering");
      return cands[rng.below(cands.size())];
    };

    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      if (!slot.end) {
        auto [g_slot, G_full] = pick_extra(slot.next_layer0, a_pool, -1);
        auto [f_slot, F_full] = pick_extra(slot.layer0, a_pool, g_slot);
        rec.g = base.symbol_of_slot(g_slot);
        rec.f = base.symbol_of_slot(f_slot);
        rec.F = rec.P | Bits::single(f_slot);
        rec.G = rec.P | Bits::single(g_slot);
        rec.U = rec.P | Bits::single(f_slot) | Bits::single(g_slot);
        rec.I = rows_to_doubled(rec.F | rec.Q, rec.G | rec.Q);
      } else {
        auto [f_slot, F_full] = pick_extra(slot.layer0, a_pool, -1);
        auto [h_slot, H_full] = pick_extra(slot.next_layer0, b_pool, -1);
        rec.f = base.symbol_of_slot(f_slot);
        rec.h = base.symbol_of_slot(h_slot);
        rec.F = rec.P | Bits::single(f_slot);
        rec.H = rec.Q | Bits::single(h_slot);
        rec.U = rec.F;
        rec.I = rows_to_doubled(rec.F | rec.Q, rec.P | rec.H);
      }
      if (!used_interps.count(rec.I)) placed = true;
    }
    if (!placed)
      fail(Errc::ConstructionFailure, "could not draw a fresh interpolation set at section " +
                                          std::to_string(slot.j) + ", layer " +
                                          std::to_string(slot.k));
    used_interps.insert(rec.I);
    out.Y.layers[static_cast<size_t>(slot.layer0)].push_back(rec.I);
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::optional<FaceSet> extend_avoiding(const SymbolUniverse& u, int d, int j, const FaceSet& c,
                                       const std::vector<FaceSet>& avoid) {
  const Bits a_mask = u.a_mask();
  const Bits b_mask = u.b_mask();
  FaceSet out = c;
  int in_a = (out & a_mask).count();
  int in_b = out.count() - in_a;
  if (in_a > d - j || in_b > j || out.count() > d - 1) return std::nullopt;
  for (const auto& s : avoid)
    if (s.subset_of(out)) return std::nullopt;

  const int target_a = in_a == d - j ? d - j : d - j - 1;
  while (in_a < target_a) {
    FaceSet cur_a = out & a_mask;
    int added = -1;
    for (int slot = a_mask.next(0); slot >= 0; slot = a_mask.next(slot + 1)) {
      if (out.test(slot)) continue;
      FaceSet grown = cur_a | Bits::single(slot);
      bool dangerous = false;
      for (const auto& s : avoid)
        if (s.subset_of(grown)) dangerous = true;
      if (!dangerous) {
        added = slot;
        break;
      }
    }
    if (added < 0) return std::nullopt;
    out.set(added);
    ++in_a;
  }
  const int target_b = d - 1 - target_a;
  for (int slot = b_mask.next(0); slot >= 0 && in_b < target_b; slot = b_mask.next(slot + 1)) {
    if (out.test(slot)) continue;
    out.set(slot);
    ++in_b;
  }
  if (out.count() != d - 1) return std::nullopt;
  return out;
}

Removal2Set removal_sets2(const LayerFamily& Y, const std::vector<Interp2Record>& records) {
  const SymbolUniverse base = Y.universe.base_version();
  const int d = Y.d / 2;
  Removal2Set out;
  std::unordered_set<Bits, BitsHash> seen_a, seen_b, seen_env;

  for (const auto& rec : records) {
    const Bits f_bit = Bits::single(base.slot_of(rec.f));
    if (!rec.end) {
      const Bits g_bit = Bits::single(base.slot_of(rec.g));
      rec.P.for_each([&](int a_slot) {
        Bits core = rec.P;
        core.reset(a_slot);
        Bits r = core | f_bit | g_bit | rec.Q;
        if (seen_a.insert(r).second) out.resemblers_a.push_back(double_set(base, r));
      });
    } else {
      const Bits h_bit = Bits::single(base.slot_of(rec.h));
      rec.P.for_each([&](int a_slot) {
        Bits core = rec.P;
        core.reset(a_slot);
        Bits r = core | f_bit | rec.Q | h_bit;
        if (seen_a.insert(r).second) out.resemblers_a.push_back(double_set(base, r));
      });
      rec.Q.for_each([&](int b_slot) {
        Bits core = rec.Q;
        core.reset(b_slot);
        Bits r = rec.P | f_bit | core | h_bit;
        if (seen_b.insert(r).second) out.resemblers_b.push_back(double_set(base, r));
      });
    }
  }

  // enveloper scan: every correspondence set whose columns cover some mid U
  std::vector<const Interp2Record*> mids;
  for (const auto& rec : records)
    if (!rec.end) mids.push_back(&rec);
  if (!mids.empty()) {
    for (const auto& layer : Y.layers) {
      for (const auto& member : layer) {
        Bits both = both_rows_columns(Y.universe, member);
        if (both.count() != d) continue;  // not a correspondence set
        for (const auto* rec : mids) {
          if (rec->U.subset_of(both)) {
            if (seen_env.insert(member).second) out.envelopers.push_back(member);
            break;
          }
        }
      }
    }
  }
  return out;
}

Pipeline2Result pipeline2(const SectionedConfig& cfg, const CheckOptions& check) {
  cfg.validate();
  Pipeline2Result res;
  res.config = cfg;

  // strict separation is checked against the record sizes before any heavy
  // materialization: sizes below the difference bound can never comply
  const int d = cfg.d();
  auto [jl, jr] = section_bounds(d, cfg.epsilon);
  res.jl = jl;
  res.jr = jr;
  if (cfg.strict) {
    int min_p = d - jr - 1, min_q = jl;
    int smallest = std::min(min_p, min_q);
    if (smallest < cfg.pairwise_diff_min)
      fail(Errc::SeparationInfeasible,
           "pairwise-difference: record sets of size " + std::to_string(smallest) +
               " can never differ in >= " + std::to_string(cfg.pairwise_diff_min) + " elements");
  }

  auto build = build_sectioned_family(cfg);
  res.V = std::move(build.V);
  res.plan = std::move(build.plan);

  res.W = merge_within_sections(res.V, cfg.m, std::make_pair(jl, jr));
  for (auto& sp : res.plan) sp.delta = sp.ell / cfg.m;
  {
    auto cov = check_sectioned_covering(res.W, cfg.m, check);
    if (!cov.passed)
      fail(Errc::ConstructionFailure, "merged family lost m-sectioned-covering");
  }

  res.X = double_family(res.W);
  auto interp = choose_interpolations2(res.W, res.X, cfg);
  res.Y = std::move(interp.Y);
  res.records = std::move(interp.records);
  res.separation_log = std::move(interp.separation_log);
  res.separation_clean = res.separation_log.empty();

  res.removal = removal_sets2(res.Y, res.records);
  std::unordered_set<Bits, BitsHash> gone;
  for (const auto& r : res.removal.resemblers_a) gone.insert(r);
  for (const auto& r : res.removal.resemblers_b) gone.insert(r);
  for (const auto& r : res.removal.envelopers) gone.insert(r);

  res.Z.universe = res.Y.universe;
  res.Z.d = res.Y.d;
  res.Z.sections = res.Y.sections;
  for (size_t k = 0; k < res.Y.layers.size(); ++k) {
    std::vector<FaceSet> kept;
    kept.reserve(res.Y.layers[k].size());
    for (const auto& member : res.Y.layers[k]) {
      if (gone.count(member)) {
        res.removed.push_back(member);
      } else {
        kept.push_back(member);
      }
    }
    if (kept.empty()) fail(Errc::DegenerateLayer, "removal emptied layer " + std::to_string(k + 1));
    res.Z.layers.push_back(std::move(kept));
  }
  res.Z.validate();

  for (const auto& rec : res.records) {
    Bits link = rec.end ? (rec.P | rec.H) : (rec.G | rec.Q);
    if (gone.count(double_set(res.W.universe, link))) {
      res.linking_violations.push_back(
          "linking set at section " + std::to_string(rec.j) + ", layer " + std::to_string(rec.k));
    }
  }
  if (!res.linking_violations.empty()) {
    if (cfg.strict)
      fail(Errc::ConstructionFailure,
           "a linking set was removed despite enforced separation: " +
               res.linking_violations.front());
    res.separation_clean = false;
  }

  if (cfg.m < 13) res.waived.push_back("m >= 13 (theorem hypothesis)");
  if (cfg.epsilon != 0.25) res.waived.push_back("epsilon = 1/4 (theorem choice)");
  if (!cfg.strict) res.waived.push_back("separation thresholds logged, not enforced");
  res.waived.push_back("asymptotic smallness hypotheses unchecked at this scale");

  res.bound_value = (1.0 - 2.0 * cfg.epsilon) / (48.0 * cfg.m) *
                        (static_cast<double>(cfg.n) * cfg.n) / std::log(cfg.n / 2.0) -
                    1.0;

  res.reports.push_back(check_endpoint_count(res.Z, check));
  res.reports.push_back(check_adjacency(res.Z, check));
  res.reports.push_back(check_strong_adjacency(res.Z, check));
  res.reports.push_back(check_dimension_reduction(res.Z, check));
  return res;
}

nlohmann::json Pipeline2Result::stats_json() const {
  nlohmann::json j;
  j["n"] = config.n;
  j["d"] = config.d();
  j["m"] = config.m;
  j["epsilon"] = config.epsilon;
  j["seed"] = config.seed;
  j["mode"] = config.strict ? "strict" : "desk";
  j["section_window"] = {jl, jr};
  nlohmann::json sections = nlohmann::json::array();
  for (const auto& sp : plan)
    sections.push_back({{"j", sp.j},
                        {"ellA", sp.ellA},
                        {"ellB", sp.ellB},
                        {"ell", sp.ell},
                        {"min_identity", sp.ell == std::min(sp.ellA, sp.ellB)},
                        {"delta", sp.delta}});
  j["sections"] = sections;
  j["layers"] = Z.layer_count();
  j["members"] = Z.member_count();
  j["interpolations"] = records.size();
  j["removed"] = {{"resemblers_a", removal.resemblers_a.size()},
                  {"resemblers_b", removal.resemblers_b.size()},
                  {"envelopers", removal.envelopers.size()},
                  {"actually_removed", removed.size()}};
  auto g = as_graph(Z);
  j["diameter"] = g.diameter();
  auto hr = g.hirsch_ratio();
  j["hirsch_ratio"] = {{"num", hr.num}, {"den", hr.den}, {"value", hr.value()}};
  j["diameter_lower_bound_formula"] = bound_value;
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

nlohmann::json records2_to_json(const SymbolUniverse& base,
                                const std::vector<Interp2Record>& records) {
  nlohmann::json arr = nlohmann::json::array();
  const SymbolUniverse dbl = base.doubled_version();
  for (const auto& r : records) {
    nlohmann::json j;
    j["j"] = r.j;
    j["k"] = r.k;
    j["variant"] = r.end ? "end" : "mid";
    j["layer"] = r.layer0 + 1;
    j["P"] = face_to_json(base, r.P);
    j["Q"] = face_to_json(base, r.Q);
    j["f"] = r.f;
    if (r.end)
      j["h"] = r.h;
    else
      j["g"] = r.g;
    j["F"] = face_to_json(base, r.F);
    if (r.end)
      j["H"] = face_to_json(base, r.H);
    else
      j["G"] = face_to_json(base, r.G);
    j["U"] = face_to_json(base, r.U);
    j["I"] = face_to_json(dbl, r.I);
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<Interp2Record> records2_from_json(const SymbolUniverse& base, const nlohmann::json& j) {
  std::vector<Interp2Record> out;
  const SymbolUniverse dbl = base.doubled_version();
  for (const auto& e : j) {
    Interp2Record r;
    r.j = e.at("j").get<int>();
    r.k = e.at("k").get<int>();
    r.end = e.at("variant").get<std::string>() == "end";
    r.layer0 = e.at("layer").get<int>() - 1;
    r.P = face_from_json(base, e.at("P"));
    r.Q = face_from_json(base, e.at("Q"));
    r.f = e.at("f").get<int>();
    if (r.end) {
      r.h = e.at("h").get<int>();
      r.H = face_from_json(base, e.at("H"));
    } else {
      r.g = e.at("g").get<int>();
      r.G = face_from_json(base, e.at("G"));
    }
    r.F = face_from_json(base, e.at("F"));
    r.U = face_from_json(base, e.at("U"));
    r.I = face_from_json(dbl, e.at("I"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace spg
