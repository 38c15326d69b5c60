#include "spg/properties.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "spg/enumerate.hpp"
#include "spg/error.hpp"
#include "spg/json_io.hpp"
#include "spg/ops.hpp"
#include "spg/rng.hpp"

namespace spg {

const char* property_name(PropertyKind p) {
  switch (p) {
    case PropertyKind::DimensionReduction: return "dimension-reduction";
    case PropertyKind::Adjacency: return "adjacency";
    case PropertyKind::StrongAdjacency: return "strong-adjacency";
    case PropertyKind::EndpointCount: return "endpoint-count";
    case PropertyKind::Covering: return "covering";
    case PropertyKind::MCovering: return "m-covering";
    case PropertyKind::Completeness: return "completeness";
    case PropertyKind::Linkage: return "linkage";
    case PropertyKind::SectionedCovering: return "sectioned-covering";
    case PropertyKind::MSectionedCovering: return "m-sectioned-covering";
    case PropertyKind::Pseudomanifold: return "pseudomanifold";
    case PropertyKind::Normal: return "normal";
    case PropertyKind::WidthCovering: return "width-covering";
  }
  return "?";
}

nlohmann::json VerificationResult::to_json() const {
  nlohmann::json j;
  j["property"] = property_name(property);
  if (property == PropertyKind::MCovering || property == PropertyKind::MSectionedCovering ||
      property == PropertyKind::SectionedCovering)
    j["m"] = m;
  j["mode"] = mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
  j["passed"] = passed;
  j["candidates"] = candidates;
  if (witness) j["witness"] = *witness;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::vector<FaceSet> all_members(const LayerFamily& f) {
  std::vector<FaceSet> out;
  out.reserve(f.member_count());
  for (const auto& layer : f.layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

namespace {

bool canon_less(const Bits& a, const Bits& b) { return a.canonical_less(b); }

template <class F>
void parallel_for(size_t n, int jobs, F body) {
  if (jobs <= 1 || n < 2048) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  size_t threads = std::min<size_t>(static_cast<size_t>(jobs), n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// A family or graph flattened to one member list with vertex ids.
struct Flat {
  const SymbolUniverse* u = nullptr;
  int d = 0;
  std::vector<FaceSet> member;
  std::vector<int32_t> vertex;
  int vertex_count = 0;
  bool path = true;
  const SubsetPartitionGraph* graph = nullptr;

  bool adjacent(int v, int w) const {
    if (v == w) return true;
    if (path) return std::abs(v - w) == 1;
    return graph->has_edge(v, w);
  }
  const char* vertex_key() const { return path ? "layers" : "vertices"; }
  int vertex_out(int v) const { return path ? v + 1 : v; }
  std::vector<std::pair<int, int>> edge_list() const {
    if (!path) return graph->edges;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < vertex_count; ++i) e.emplace_back(i, i + 1);
    return e;
  }
};

Flat flatten(const std::vector<std::vector<FaceSet>>& cols) {
  Flat f;
  f.vertex_count = static_cast<int>(cols.size());
  for (int v = 0; v < f.vertex_count; ++v) {
    for (const auto& m : cols[static_cast<size_t>(v)]) {
      f.member.push_back(m);
      f.vertex.push_back(v);
    }
  }
  return f;
}

Flat flatten(const LayerFamily& fam) {
  Flat f = flatten(fam.layers);
  f.u = &fam.universe;
  f.d = fam.d;
  f.path = true;
  return f;
}

Flat flatten(const SubsetPartitionGraph& g) {
  Flat f = flatten(g.vertices);
  f.u = &g.universe;
  f.d = g.d;
  f.path = false;
  f.graph = &g;
  return f;
}

struct ChildEntry {
  Bits child;
  int32_t member;
};

/// All (|member|-1)-subsets of every member, sorted for grouping.
std::vector<ChildEntry> child_entries(const std::vector<FaceSet>& members) {
  std::vector<ChildEntry> entries;
  entries.reserve(members.size() * 8);
  for (size_t i = 0; i < members.size(); ++i) {
    members[i].for_each([&](int slot) {
      Bits c = members[i];
      c.reset(slot);
      entries.push_back({c, static_cast<int32_t>(i)});
    });
  }
  std::sort(entries.begin(), entries.end(), [](const ChildEntry& a, const ChildEntry& b) {
    if (!(a.child == b.child)) return a.child.word_less(b.child);
    return a.member < b.member;
  });
  return entries;
}

template <class GroupFn>
void scan_groups(const std::vector<ChildEntry>& entries, GroupFn fn) {
  size_t i = 0;
  while (i < entries.size()) {
    size_t j = i + 1;
    while (j < entries.size() && entries[j].child == entries[i].child) ++j;
    if (!fn(i, j)) return;
    i = j;
  }
}

nlohmann::json face_json(const Flat& f, const Bits& b) { return face_to_json(*f.u, b); }

// ---------------------------------------------------------------------------
// endpoint count / adjacency / strong adjacency
// ---------------------------------------------------------------------------

VerificationResult endpoint_count_impl(const Flat& fl) {
  VerificationResult res;
  res.property = PropertyKind::EndpointCount;
  auto entries = child_entries(fl.member);
  size_t groups = 0;
  scan_groups(entries, [&](size_t i, size_t j) {
    ++groups;
    if (j - i > 2) {
      nlohmann::json w;
      w["set"] = face_json(fl, entries[i].child);
      nlohmann::json containers = nlohmann::json::array();
      nlohmann::json where = nlohmann::json::array();
      for (size_t k = i; k < j && k < i + 3; ++k) {
        containers.push_back(face_json(fl, fl.member[static_cast<size_t>(entries[k].member)]));
        where.push_back(fl.vertex_out(fl.vertex[static_cast<size_t>(entries[k].member)]));
      }
      w["containers"] = containers;
      w[fl.vertex_key()] = where;
      w["count"] = j - i;
      res.passed = false;
      res.witness = w;
      return false;
    }
    return true;
  });
  res.candidates = groups;
  return res;
}

VerificationResult adjacency_impl(const Flat& fl) {
  VerificationResult res;
  res.property = PropertyKind::Adjacency;
  auto entries = child_entries(fl.member);
  size_t pairs = 0;
  scan_groups(entries, [&](size_t i, size_t j) {
    for (size_t a = i; a < j && res.passed; ++a) {
      for (size_t b = a + 1; b < j; ++b) {
        ++pairs;
        int va = fl.vertex[static_cast<size_t>(entries[a].member)];
        int vb = fl.vertex[static_cast<size_t>(entries[b].member)];
        if (!fl.adjacent(va, vb)) {
          nlohmann::json w;
          w["pair"] = {face_json(fl, fl.member[static_cast<size_t>(entries[a].member)]),
                       face_json(fl, fl.member[static_cast<size_t>(entries[b].member)])};
          w["shared"] = face_json(fl, entries[i].child);
          w[fl.vertex_key()] = {fl.vertex_out(va), fl.vertex_out(vb)};
          res.passed = false;
          res.witness = w;
          break;
        }
      }
    }
    return res.passed;
  });
  res.candidates = pairs;
  return res;
}

VerificationResult strong_adjacency_impl(const Flat& fl) {
  VerificationResult res = adjacency_impl(fl);
  res.property = PropertyKind::StrongAdjacency;
  if (!res.passed) {
    res.note = "adjacency half violated";
    return res;
  }
  auto edges = fl.edge_list();
  std::vector<char> covered(edges.size(), 0);
  std::unordered_map<int64_t, size_t> edge_index;
  edge_index.reserve(edges.size() * 2);
  for (size_t i = 0; i < edges.size(); ++i)
    edge_index[(static_cast<int64_t>(edges[i].first) << 32) | edges[i].second] = i;

  auto entries = child_entries(fl.member);
  scan_groups(entries, [&](size_t i, size_t j) {
    for (size_t a = i; a < j; ++a) {
      for (size_t b = a + 1; b < j; ++b) {
        int va = fl.vertex[static_cast<size_t>(entries[a].member)];
        int vb = fl.vertex[static_cast<size_t>(entries[b].member)];
        if (va == vb) continue;
        if (va > vb) std::swap(va, vb);
        auto it = edge_index.find((static_cast<int64_t>(va) << 32) | vb);
        if (it != edge_index.end()) covered[it->second] = 1;
      }
    }
    return true;
  });
  for (size_t i = 0; i < edges.size(); ++i) {
    if (!covered[i]) {
      nlohmann::json w;
      w["edge"] = {fl.vertex_out(edges[i].first), fl.vertex_out(edges[i].second)};
      res.passed = false;
      res.witness = w;
      res.note = "edge carries no pair of member sets meeting in d-1 symbols";
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// covering variants
// ---------------------------------------------------------------------------

/// Sorted (child, count) table per layer, for O(log) container-count lookups
/// of (d-1)-sized candidates.
struct LayerChildCounts {
  std::vector<Bits> child;
  std::vector<int32_t> count;

  int lookup(const Bits& c) const {
    auto it = std::lower_bound(child.begin(), child.end(), c,
                               [](const Bits& a, const Bits& b) { return a.word_less(b); });
    if (it == child.end() || !(*it == c)) return 0;
    return count[static_cast<size_t>(it - child.begin())];
  }
};

LayerChildCounts layer_child_counts(const std::vector<FaceSet>& layer) {
  auto entries = child_entries(layer);
  LayerChildCounts t;
  scan_groups(entries, [&](size_t i, size_t j) {
    t.child.push_back(entries[i].child);
    t.count.push_back(static_cast<int32_t>(j - i));
    return true;
  });
  return t;
}

/// C(n, k) capped at `cap`; returns cap+1 on overflow past the cap.
unsigned long long binom_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step
    unsigned long long num = static_cast<unsigned long long>(n - k + i);
    if (r > (cap + 1) / num * static_cast<unsigned long long>(i)) return cap + 1;
    r = r * num / static_cast<unsigned long long>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

Bits random_k_subset_of_slots(Rng& rng, int slots, int k) {
  std::vector<int> pool(static_cast<size_t>(slots));
  for (int i = 0; i < slots; ++i) pool[static_cast<size_t>(i)] = i;
  Bits b;
  for (int i : rng.sample(pool, k)) b.set(i);
  return b;
}

VerificationResult covering_impl(const LayerFamily& f, int m, const CheckOptions& opts) {
  VerificationResult res;
  res.property = m == 1 ? PropertyKind::Covering : PropertyKind::MCovering;
  res.m = m;
  const int k = f.d - 1;
  const int slots = f.universe.slots();

  std::vector<LayerChildCounts> tables;
  tables.reserve(f.layers.size());
  for (const auto& layer : f.layers) tables.push_back(layer_child_counts(layer));

  auto check_candidate = [&](const Bits& c) -> bool {
    for (size_t li = 0; li < tables.size(); ++li) {
      int cnt = tables[li].lookup(c);
      if (cnt < m) {
        nlohmann::json w;
        w["set"] = face_to_json(f.universe, c);
        w["layer"] = li + 1;
        w["count"] = cnt;
        res.passed = false;
        res.witness = w;
        return false;
      }
    }
    return true;
  };

  if (binom_capped(slots, k, opts.candidate_budget) <= opts.candidate_budget) {
    for (const auto& c : all_k_subsets(slots, k)) {
      ++res.candidates;
      if (!check_candidate(c)) break;
    }
  } else {
    res.mode = CheckMode::Sampled;
    res.note = "sampled " + std::to_string(opts.sample_count) + " candidates";
    Rng rng = Rng(opts.seed).fork("covering");
    for (size_t i = 0; i < opts.sample_count; ++i) {
      ++res.candidates;
      if (!check_candidate(random_k_subset_of_slots(rng, slots, k))) break;
    }
  }
  return res;
}

VerificationResult completeness_impl(const LayerFamily& f, const CheckOptions& opts) {
  VerificationResult res;
  res.property = PropertyKind::Completeness;
  const int slots = f.universe.slots();
  unsigned long long expected = binom_capped(slots, f.d, opts.candidate_budget);
  if (expected > opts.candidate_budget)
    fail(Errc::BudgetExceeded, "completeness needs enumeration of C(" + std::to_string(slots) +
                                   "," + std::to_string(f.d) + ") sets, beyond the budget");
  res.candidates = expected;
  if (f.member_count() == expected) return res;

  std::unordered_set<Bits, BitsHash> present;
  present.reserve(f.member_count() * 2);
  for (const auto& layer : f.layers) present.insert(layer.begin(), layer.end());
  for (const auto& c : all_k_subsets(slots, f.d)) {
    if (!present.count(c)) {
      nlohmann::json w;
      w["missing"] = face_to_json(f.universe, c);
      res.passed = false;
      res.witness = w;
      break;
    }
  }
  return res;
}

VerificationResult linkage_impl(const LayerFamily& f) {
  VerificationResult res;
  res.property = PropertyKind::Linkage;
  std::vector<LayerChildCounts> tables;
  tables.reserve(f.layers.size());
  for (const auto& layer : f.layers) tables.push_back(layer_child_counts(layer));
  for (size_t k = 0; k + 1 < tables.size(); ++k) {
    ++res.candidates;
    const auto& a = tables[k].child;
    const auto& b = tables[k + 1].child;
    bool linked = false;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        linked = true;
        break;
      }
      if (a[i].word_less(b[j]))
        ++i;
      else
        ++j;
    }
    if (!linked) {
      nlohmann::json w;
      w["layers"] = {k + 1, k + 2};
      res.passed = false;
      res.witness = w;
      break;
    }
  }
  return res;
}

VerificationResult sectioned_covering_impl(const LayerFamily& f, int m, const CheckOptions& opts) {
  if (!f.universe.is_bipartite() || f.universe.is_doubled())
    fail(Errc::InvalidUniverse, "sectioned covering needs a plain bipartite universe");
  if (!f.sectioned()) fail(Errc::InvalidFamily, "sectioned covering needs a sectioned family");

  VerificationResult res;
  res.property = m == 1 ? PropertyKind::SectionedCovering : PropertyKind::MSectionedCovering;
  res.m = m;
  const int k = f.d - 1;
  const int n = f.universe.base_symbols();
  const Bits a_mask = f.universe.a_mask();
  const auto ranges = f.section_ranges();

  std::vector<LayerChildCounts> tables;
  tables.reserve(f.layers.size());
  for (const auto& layer : f.layers) tables.push_back(layer_child_counts(layer));

  auto check_candidate = [&](const Bits& c) -> bool {
    int in_a = (c & a_mask).count();
    int in_b = c.count() - in_a;
    for (const auto& r : ranges) {
      int j = r[0];
      if (in_a > f.d - j || in_b > j) continue;  // hypothesis unmet: unconstrained
      for (int li = r[1]; li <= r[2]; ++li) {
        int cnt = tables[static_cast<size_t>(li)].lookup(c);
        if (cnt < m) {
          nlohmann::json w;
          w["set"] = face_to_json(f.universe, c);
          w["section"] = j;
          w["layer"] = li + 1;
          w["count"] = cnt;
          res.passed = false;
          res.witness = w;
          return false;
        }
      }
    }
    return true;
  };

  if (binom_capped(n, k, opts.candidate_budget) <= opts.candidate_budget) {
    for (const auto& c : all_k_subsets(n, k)) {
      ++res.candidates;
      if (!check_candidate(c)) break;
    }
  } else {
    res.mode = CheckMode::Sampled;
    res.note = "sampled " + std::to_string(opts.sample_count) + " candidates";
    Rng rng = Rng(opts.seed).fork("sectioned-covering");
    for (size_t i = 0; i < opts.sample_count; ++i) {
      ++res.candidates;
      if (!check_candidate(random_k_subset_of_slots(rng, n, k))) break;
    }
  }
  return res;
}

VerificationResult width_covering_impl(const LayerFamily& f, const CheckOptions& opts) {
  if (!f.universe.is_doubled()) fail(Errc::InvalidUniverse, "width covering needs a doubled family");
  if (f.d % 2 != 0) fail(Errc::Domain, "width covering needs an even-dimension doubled family");
  VerificationResult res;
  res.property = PropertyKind::WidthCovering;
  const int dbase = f.d / 2;
  const int n = f.universe.base_symbols();

  // A set of width <= d-1 is active on a layer iff some member contains both
  // rows of a (d-1)-superset of its projection; D(candidate) itself is the
  // extremal case.
  std::vector<std::vector<Bits>> tables;
  tables.reserve(f.layers.size());
  for (const auto& layer : f.layers) {
    std::vector<Bits> kids;
    for (const auto& member : layer) {
      Bits both = both_rows_columns(f.universe, member);
      int c = both.count();
      if (c == dbase - 1) {
        kids.push_back(both);
      } else if (c >= dbase) {
        both.for_each([&](int slot) {
          Bits child = both;
          child.reset(slot);
          if (child.count() == dbase - 1) kids.push_back(child);
        });
      }
    }
    std::sort(kids.begin(), kids.end(), [](const Bits& a, const Bits& b) { return a.word_less(b); });
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    tables.push_back(std::move(kids));
  }

  auto covered = [&](size_t li, const Bits& c) {
    const auto& kids = tables[li];
    // candidate is covered iff it equals some (dbase-1)-sized both-rows child
    return std::binary_search(kids.begin(), kids.end(), c,
                              [](const Bits& a, const Bits& b) { return a.word_less(b); });
  };
  auto check_candidate = [&](const Bits& c) -> bool {
    for (size_t li = 0; li < tables.size(); ++li) {
      if (!covered(li, c)) {
        nlohmann::json w;
        w["projection"] = face_to_json(f.universe.base_version(), c);
        w["layer"] = li + 1;
        res.passed = false;
        res.witness = w;
        return false;
      }
    }
    return true;
  };

  if (binom_capped(n, dbase - 1, opts.candidate_budget) <= opts.candidate_budget) {
    for (const auto& c : all_k_subsets(n, dbase - 1)) {
      ++res.candidates;
      if (!check_candidate(c)) break;
    }
  } else {
    res.mode = CheckMode::Sampled;
    res.note = "sampled " + std::to_string(opts.sample_count) + " candidates";
    Rng rng = Rng(opts.seed).fork("width-covering");
    for (size_t i = 0; i < opts.sample_count; ++i) {
      ++res.candidates;
      if (!check_candidate(random_k_subset_of_slots(rng, n, dbase - 1))) break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// dimension reduction
// ---------------------------------------------------------------------------

struct LayerMask {
  std::array<uint64_t, 4> w{};
  void set(int i) { w[static_cast<size_t>(i >> 6)] |= (uint64_t{1} << (i & 63)); }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int min_bit() const {
    for (int i = 0; i < 4; ++i)
      if (w[static_cast<size_t>(i)]) return 64 * i + std::countr_zero(w[static_cast<size_t>(i)]);
    return -1;
  }
  int max_bit() const {
    for (int i = 3; i >= 0; --i)
      if (w[static_cast<size_t>(i)]) return 64 * i + 63 - std::countl_zero(w[static_cast<size_t>(i)]);
    return -1;
  }
  bool interval() const {
    int c = count();
    return c == 0 || c == max_bit() - min_bit() + 1;
  }
  std::vector<int> bits() const {
    std::vector<int> out;
    for (int i = 0; i < 256; ++i)
      if ((w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1) out.push_back(i);
    return out;
  }
};

nlohmann::json dr_witness(const SymbolUniverse& u, const Bits& set, const std::vector<int>& active,
                          bool path) {
  nlohmann::json w;
  w["set"] = face_to_json(u, set);
  nlohmann::json act = nlohmann::json::array();
  for (int k : active) act.push_back(path ? k + 1 : k);
  w[path ? "active_layers" : "active_vertices"] = act;
  return w;
}

/// Deterministic per-sample subset of a random member.
Bits sample_candidate(Rng& rng, const std::vector<FaceSet>& members, int max_size, int min_size) {
  const Bits& m = members[static_cast<size_t>(rng.below(members.size()))];
  auto slots = m.slots();
  int hi = std::min<int>(max_size, static_cast<int>(slots.size()));
  int size = min_size + rng.below_int(hi - min_size + 1);
  Bits out;
  for (int s : rng.sample(slots, size)) out.set(s);
  return out;
}

VerificationResult dr_family_sampled(const LayerFamily& f, const CheckOptions& opts) {
  VerificationResult res;
  res.property = PropertyKind::DimensionReduction;
  res.mode = CheckMode::Sampled;
  res.note = "sampled " + std::to_string(opts.sample_count) + " candidates";
  auto members = all_members(f);
  const size_t S = opts.sample_count;
  res.candidates = S;
  std::vector<char> ok(S, 1);
  Rng base(opts.seed);
  parallel_for(S, opts.jobs, [&](size_t i) {
    Rng rng = base.fork("dr", i);
    Bits c = sample_candidate(rng, members, f.d - 1, 0);
    int prev = -2;
    bool contiguous = true;
    for (int k = 0; k < f.layer_count() && contiguous; ++k) {
      if (is_active(f.layers[static_cast<size_t>(k)], c)) {
        if (prev >= 0 && k != prev + 1) contiguous = false;
        prev = k;
      }
    }
    ok[i] = contiguous ? 1 : 0;
  });
  for (size_t i = 0; i < S; ++i) {
    if (!ok[i]) {
      Rng rng = base.fork("dr", i);
      Bits c = sample_candidate(rng, members, f.d - 1, 0);
      std::vector<int> act;
      for (int k = 0; k < f.layer_count(); ++k)
        if (is_active(f.layers[static_cast<size_t>(k)], c)) act.push_back(k);
      res.passed = false;
      res.witness = dr_witness(f.universe, c, act, true);
      break;
    }
  }
  return res;
}

VerificationResult dr_family_impl(const LayerFamily& f, const CheckOptions& opts) {
  if (f.layer_count() > 256) return dr_family_sampled(f, opts);

  std::unordered_map<Bits, LayerMask, BitsHash> activity;
  activity.reserve(4096);
  bool aborted = false;
  for (int k = 0; k < f.layer_count() && !aborted; ++k) {
    for (const auto& member : f.layers[static_cast<size_t>(k)]) {
      if (aborted) break;
      for_each_subset(member, f.d - 1, [&](const Bits& c) {
        if (aborted) return;
        if (activity.size() >= opts.candidate_budget && !activity.count(c)) {
          aborted = true;
          return;
        }
        activity[c].set(k);
      });
    }
  }
  if (aborted) return dr_family_sampled(f, opts);

  VerificationResult res;
  res.property = PropertyKind::DimensionReduction;
  res.candidates = activity.size();
  const Bits* worst = nullptr;
  for (const auto& [c, mask] : activity) {
    if (!mask.interval() && (!worst || c.canonical_less(*worst))) worst = &c;
  }
  if (worst) {
    res.passed = false;
    res.witness = dr_witness(f.universe, *worst, activity[*worst].bits(), true);
  }
  return res;
}

bool induced_connected(const std::vector<std::vector<int>>& adj, const std::vector<int>& active,
                       int* components = nullptr) {
  if (active.empty()) return true;
  std::unordered_set<int> in(active.begin(), active.end());
  std::unordered_set<int> seen;
  int comps = 0;
  for (int root : active) {
    if (seen.count(root)) continue;
    ++comps;
    std::deque<int> queue{root};
    seen.insert(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (in.count(w) && !seen.count(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
  }
  if (components) *components = comps;
  return comps <= 1;
}

VerificationResult dr_graph_impl(const SubsetPartitionGraph& g, const CheckOptions& opts) {
  VerificationResult res;
  res.property = PropertyKind::DimensionReduction;
  auto adj = g.adjacency();
  Flat fl = flatten(g);

  auto active_vertices = [&](const Bits& c) {
    std::vector<int> act;
    int last = -1;
    for (size_t i = 0; i < fl.member.size(); ++i) {
      if (c.subset_of(fl.member[i]) && fl.vertex[i] != last) {
        // members are grouped by vertex, adjacent duplicates collapse
        if (act.empty() || act.back() != fl.vertex[i]) act.push_back(fl.vertex[i]);
        last = fl.vertex[i];
      }
    }
    std::sort(act.begin(), act.end());
    act.erase(std::unique(act.begin(), act.end()), act.end());
    return act;
  };

  auto outcome = for_each_active_candidate(g.vertices, g.d - 1, opts.candidate_budget,
                                           [&](const Bits& c) {
                                             ++res.candidates;
                                             auto act = active_vertices(c);
                                             int comps = 0;
                                             if (!induced_connected(adj, act, &comps)) {
                                               res.passed = false;
                                               auto w = dr_witness(g.universe, c, act, false);
                                               w["components"] = comps;
                                               res.witness = w;
                                               return false;
                                             }
                                             return true;
                                           });
  if (outcome == EnumOutcome::BudgetStopped) {
    // fall back to seeded sampling
    res = VerificationResult{};
    res.property = PropertyKind::DimensionReduction;
    res.mode = CheckMode::Sampled;
    res.note = "sampled " + std::to_string(opts.sample_count) + " candidates";
    res.candidates = opts.sample_count;
    Rng base(opts.seed);
    for (size_t i = 0; i < opts.sample_count; ++i) {
      Rng rng = base.fork("dr-graph", i);
      Bits c = sample_candidate(rng, fl.member, g.d - 1, 0);
      auto act = active_vertices(c);
      int comps = 0;
      if (!induced_connected(adj, act, &comps)) {
        res.passed = false;
        auto w = dr_witness(g.universe, c, act, false);
        w["components"] = comps;
        res.witness = w;
        break;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// pseudomanifold / normality
// ---------------------------------------------------------------------------

VerificationResult pseudomanifold_impl(const SymbolUniverse& u, const std::vector<FaceSet>& members) {
  VerificationResult res;
  res.property = PropertyKind::Pseudomanifold;
  auto entries = child_entries(members);
  scan_groups(entries, [&](size_t i, size_t j) {
    ++res.candidates;
    if (j - i > 2) {
      nlohmann::json w;
      w["set"] = face_to_json(u, entries[i].child);
      nlohmann::json containers = nlohmann::json::array();
      for (size_t k = i; k < j && k < i + 3; ++k)
        containers.push_back(face_to_json(u, members[static_cast<size_t>(entries[k].member)]));
      w["containers"] = containers;
      w["count"] = j - i;
      res.passed = false;
      res.witness = w;
      return false;
    }
    return true;
  });
  return res;
}

/// Star connectivity in the dual graph: facets adjacent when they share a
/// (d-1)-subset.
bool star_connected(const std::vector<FaceSet>& star, int* components) {
  if (star.size() <= 1) {
    if (components) *components = static_cast<int>(star.size());
    return true;
  }
  std::vector<int> parent(star.size());
  for (size_t i = 0; i < star.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto entries = child_entries(star);
  scan_groups(entries, [&](size_t i, size_t j) {
    for (size_t k = i + 1; k < j; ++k) {
      int a = find(entries[i].member);
      int b = find(entries[k].member);
      if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    return true;
  });
  int comps = 0;
  for (size_t i = 0; i < star.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
  if (components) *components = comps;
  return comps <= 1;
}

VerificationResult normal_impl(const SymbolUniverse& u, int d, const std::vector<FaceSet>& members,
                               const CheckOptions& opts) {
  VerificationResult res;
  res.property = PropertyKind::Normal;

  std::unordered_map<Bits, std::vector<int32_t>, BitsHash> stars;
  stars.reserve(4096);
  bool aborted = false;
  for (size_t i = 0; i < members.size() && !aborted; ++i) {
    for_each_subset(members[i], d, [&](const Bits& f) {
      if (aborted || f.empty()) return;
      if (stars.size() >= opts.candidate_budget && !stars.count(f)) {
        aborted = true;
        return;
      }
      stars[f].push_back(static_cast<int32_t>(i));
    });
  }

  auto evaluate = [&](const Bits& face, const std::vector<int32_t>& ids) -> bool {
    std::vector<FaceSet> star;
    star.reserve(ids.size());
    for (int32_t i : ids) star.push_back(members[static_cast<size_t>(i)]);
    int comps = 0;
    if (!star_connected(star, &comps)) {
      nlohmann::json w;
      w["face"] = face_to_json(u, face);
      w["star_size"] = star.size();
      w["components"] = comps;
      res.passed = false;
      res.witness = w;
      return false;
    }
    return true;
  };

  if (!aborted) {
    res.candidates = stars.size();
    const Bits* worst = nullptr;
    for (const auto& [face, ids] : stars) {
      std::vector<FaceSet> star;
      star.reserve(ids.size());
      for (int32_t i : ids) star.push_back(members[static_cast<size_t>(i)]);
      if (!star_connected(star, nullptr) && (!worst || face.canonical_less(*worst))) worst = &face;
    }
    if (worst) evaluate(*worst, stars[*worst]);
    return res;
  }

  res.mode = CheckMode::Sampled;
  res.note = "sampled " + std::to_string(opts.sample_count) + " faces";
  res.candidates = opts.sample_count;
  Rng base(opts.seed);
  for (size_t s = 0; s < opts.sample_count; ++s) {
    Rng rng = base.fork("normal", s);
    Bits face = sample_candidate(rng, members, d, 1);
    std::vector<int32_t> ids;
    for (size_t i = 0; i < members.size(); ++i)
      if (face.subset_of(members[i])) ids.push_back(static_cast<int32_t>(i));
    if (!evaluate(face, ids)) break;
  }
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

VerificationResult check_dimension_reduction(const LayerFamily& f, const CheckOptions& o) {
  return dr_family_impl(f, o);
}
VerificationResult check_dimension_reduction(const SubsetPartitionGraph& g, const CheckOptions& o) {
  return dr_graph_impl(g, o);
}

VerificationResult check_adjacency(const LayerFamily& f, const CheckOptions&) {
  return adjacency_impl(flatten(f));
}
VerificationResult check_adjacency(const SubsetPartitionGraph& g, const CheckOptions&) {
  return adjacency_impl(flatten(g));
}
VerificationResult check_strong_adjacency(const LayerFamily& f, const CheckOptions&) {
  return strong_adjacency_impl(flatten(f));
}
VerificationResult check_strong_adjacency(const SubsetPartitionGraph& g, const CheckOptions&) {
  return strong_adjacency_impl(flatten(g));
}
VerificationResult check_endpoint_count(const LayerFamily& f, const CheckOptions&) {
  return endpoint_count_impl(flatten(f));
}
VerificationResult check_endpoint_count(const SubsetPartitionGraph& g, const CheckOptions&) {
  return endpoint_count_impl(flatten(g));
}

VerificationResult check_covering_family(const LayerFamily& f, const CoveringVariant& variant,
                                         const CheckOptions& o) {
  switch (variant.kind) {
    case CoveringVariant::Kind::Covering: return covering_impl(f, 1, o);
    case CoveringVariant::Kind::MCovering: return covering_impl(f, variant.m, o);
    case CoveringVariant::Kind::Completeness: return completeness_impl(f, o);
    case CoveringVariant::Kind::Linkage: return linkage_impl(f);
  }
  fail(Errc::Domain, "unknown covering variant");
}

VerificationResult check_sectioned_covering(const LayerFamily& f, int m, const CheckOptions& o) {
  if (m < 1) fail(Errc::Domain, "m must be >= 1");
  return sectioned_covering_impl(f, m, o);
}

VerificationResult check_width_covering(const LayerFamily& f, const CheckOptions& o) {
  return width_covering_impl(f, o);
}

VerificationResult check_pseudomanifold(const SymbolUniverse& u, int d,
                                        const std::vector<FaceSet>& members, const CheckOptions&) {
  for (const auto& m : members)
    if (m.count() != d) fail(Errc::InvalidFamily, "pseudomanifold input must be pure of dimension d");
  return pseudomanifold_impl(u, members);
}
VerificationResult check_pseudomanifold(const LayerFamily& f, const CheckOptions& o) {
  return check_pseudomanifold(f.universe, f.d, all_members(f), o);
}

VerificationResult check_normal(const SymbolUniverse& u, int d, const std::vector<FaceSet>& members,
                                const CheckOptions& o) {
  for (const auto& m : members)
    if (m.count() != d) fail(Errc::InvalidFamily, "normality input must be pure of dimension d");
  return normal_impl(u, d, members, o);
}
VerificationResult check_normal(const LayerFamily& f, const CheckOptions& o) {
  return check_normal(f.universe, f.d, all_members(f), o);
}

}  // namespace spg
