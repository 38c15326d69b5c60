#include "spg/covering.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "spg/enumerate.hpp"
#include "spg/error.hpp"
#include "spg/rng.hpp"

namespace spg {

int lambda_lower_bound(int n, int d) {
  if (d < 1 || d > n) fail(Errc::Domain, "need 1 <= d <= n");
  if (n < 2) fail(Errc::Domain, "need n >= 2");
  return static_cast<int>(std::floor((n - d + 1) / std::log(n)));
}

int mesh_lambda_lower_bound(int q, int dim) {
  if (dim < 1 || dim > q) fail(Errc::Domain, "need 1 <= dim <= q");
  if (q < 2) fail(Errc::Domain, "need q >= 2");
  return static_cast<int>(std::floor((q - (dim - 1)) / (3.0 * std::log(q))));
}

int mesh_section_lower_bound(int n) {
  if (n < 4) fail(Errc::Domain, "need n >= 4");
  return static_cast<int>(std::floor((n / 4.0) / (3.0 * std::log(n / 2.0))));
}

LayerFamily CoveringDesignFamily::to_layer_family() const {
  LayerFamily f;
  f.universe = SymbolUniverse::plain(n);
  f.d = d;
  f.layers = layers;
  return f;
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

/// Pool of all d-subsets with child incidence in CSR form.
struct Incidence {
  int n, d;
  std::vector<FaceSet> pool;
  std::vector<Bits> children;             // all (d-1)-subsets
  std::vector<int32_t> set_children;      // pool.size() * d child ids
  std::vector<int32_t> offsets;           // CSR over children
  std::vector<int32_t> containers;        // set ids per child

  Incidence(int n_, int d_) : n(n_), d(d_) {
    pool = all_k_subsets(n, d);
    children = all_k_subsets(n, d - 1);
    std::unordered_map<Bits, int32_t, BitsHash> child_index;
    child_index.reserve(children.size() * 2);
    for (size_t i = 0; i < children.size(); ++i) child_index[children[i]] = static_cast<int32_t>(i);

    set_children.resize(pool.size() * static_cast<size_t>(d));
    std::vector<int32_t> degree(children.size(), 0);
    for (size_t i = 0; i < pool.size(); ++i) {
      int r = 0;
      pool[i].for_each([&](int slot) {
        Bits c = pool[i];
        c.reset(slot);
        int32_t ci = child_index.at(c);
        set_children[i * static_cast<size_t>(d) + static_cast<size_t>(r++)] = ci;
        ++degree[static_cast<size_t>(ci)];
      });
    }
    offsets.assign(children.size() + 1, 0);
    for (size_t c = 0; c < children.size(); ++c) offsets[c + 1] = offsets[c] + degree[c];
    containers.resize(static_cast<size_t>(offsets.back()));
    std::vector<int32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (size_t i = 0; i < pool.size(); ++i)
      for (int r = 0; r < d; ++r) {
        int32_t ci = set_children[i * static_cast<size_t>(d) + static_cast<size_t>(r)];
        containers[static_cast<size_t>(cursor[static_cast<size_t>(ci)]++)] = static_cast<int32_t>(i);
      }
  }

  auto child_ids(size_t set_id) const {
    return std::pair(set_children.begin() + static_cast<long>(set_id) * d,
                     set_children.begin() + static_cast<long>(set_id + 1) * d);
  }
};

struct Attempt {
  std::vector<std::vector<int32_t>> designs;
  std::vector<int32_t> leftover;
};

Attempt run_attempt(const Incidence& inc, const std::vector<uint64_t>& priority) {
  const int d = inc.d;
  std::vector<char> alive(inc.pool.size(), 1);
  std::vector<int32_t> child_remaining(inc.children.size(), 0);
  for (size_t c = 0; c < inc.children.size(); ++c)
    child_remaining[c] = inc.offsets[c + 1] - inc.offsets[c];

  auto feasible = [&] {
    for (auto r : child_remaining)
      if (r == 0) return false;
    return true;
  };

  Attempt a;
  std::vector<int32_t> gain(inc.pool.size());
  std::vector<char> covered(inc.children.size());
  using Item = std::tuple<int32_t, uint64_t, int32_t>;  // (gain, ~priority, id)

  while (feasible()) {
    std::fill(covered.begin(), covered.end(), 0);
    // gains only decrease within a design, so the heap holds one entry per
    // set and stale tops are corrected on pop; the pop order matches an
    // eagerly updated heap exactly
    std::vector<Item> init;
    init.reserve(inc.pool.size());
    for (size_t i = 0; i < inc.pool.size(); ++i) {
      if (!alive[i]) continue;
      gain[i] = d;
      init.emplace_back(d, ~priority[i], static_cast<int32_t>(i));
    }
    std::priority_queue<Item> heap(std::less<Item>{}, std::move(init));
    std::vector<int32_t> picked;
    size_t uncovered = inc.children.size();
    while (uncovered > 0 && !heap.empty()) {
      auto [g, pr, id] = heap.top();
      heap.pop();
      if (!alive[static_cast<size_t>(id)]) continue;
      if (g != gain[static_cast<size_t>(id)]) {
        heap.emplace(gain[static_cast<size_t>(id)], pr, id);
        continue;
      }
      if (g == 0) break;
      picked.push_back(id);
      alive[static_cast<size_t>(id)] = 0;
      auto [cb, ce] = inc.child_ids(static_cast<size_t>(id));
      for (auto it = cb; it != ce; ++it) {
        int32_t ci = *it;
        --child_remaining[static_cast<size_t>(ci)];
        if (covered[static_cast<size_t>(ci)]) continue;
        covered[static_cast<size_t>(ci)] = 1;
        --uncovered;
        for (int32_t o = inc.offsets[static_cast<size_t>(ci)];
             o < inc.offsets[static_cast<size_t>(ci) + 1]; ++o) {
          int32_t tid = inc.containers[static_cast<size_t>(o)];
          if (alive[static_cast<size_t>(tid)]) --gain[static_cast<size_t>(tid)];
        }
      }
    }
    a.designs.push_back(std::move(picked));
  }
  for (size_t i = 0; i < inc.pool.size(); ++i)
    if (alive[i]) a.leftover.push_back(static_cast<int32_t>(i));
  return a;
}

}  // namespace

CoveringDesignFamily build_disjoint_covering_designs(int n, int d, uint64_t seed,
                                                     const CoveringBuildOptions& opts) {
  if (d < 1 || d > n) fail(Errc::Domain, "need 1 <= d <= n");
  if (n < 2) fail(Errc::Domain, "need n >= 2");
  if (binom_ull(n, d, opts.pool_budget) > opts.pool_budget)
    fail(Errc::BudgetExceeded, "C(n,d) enumeration exceeds the pool budget");

  Incidence inc(n, d);

  Attempt best;
  bool have_best = false;
  Rng rng(seed);
  for (int attempt = 0; attempt < std::max(1, opts.attempts); ++attempt) {
    std::vector<uint64_t> priority(inc.pool.size());
    if (attempt == 0) {
      for (size_t i = 0; i < priority.size(); ++i) priority[i] = i;  // canonical ties
    } else {
      Rng r = rng.fork("restart", static_cast<uint64_t>(attempt));
      for (auto& p : priority) p = r.next();
    }
    Attempt a = run_attempt(inc, priority);
    if (!have_best || a.designs.size() > best.designs.size()) {
      best = std::move(a);
      have_best = true;
    }
  }

  if (best.designs.empty())
    fail(Errc::ConstructionFailure, "the pool admits no covering design at all");

  CoveringDesignFamily fam;
  fam.n = n;
  fam.d = d;
  for (const auto& ids : best.designs) {
    std::vector<FaceSet> layer;
    layer.reserve(ids.size());
    for (int32_t id : ids) layer.push_back(inc.pool[static_cast<size_t>(id)]);
    fam.layers.push_back(std::move(layer));
  }
  if (!best.leftover.empty()) {
    fam.leftover_merged = true;
    auto& last = fam.layers.back();
    for (int32_t id : best.leftover) last.push_back(inc.pool[static_cast<size_t>(id)]);
  }
  return fam;
}

}  // namespace spg
