#include "spg/hypergeom.hpp"

#include <algorithm>
#include <cmath>

#include "spg/bits.hpp"
#include "spg/error.hpp"
#include "spg/rng.hpp"

namespace spg {

namespace {

void validate(const HypergeomParams& p) {
  if (p.N < 0 || p.M < 0 || p.n < 0 || p.M > p.N || p.n > p.N)
    fail(Errc::Domain, "hypergeometric parameters need 0 <= M, n <= N");
}

/// Exact C(n, k) for n <= 120 (fits unsigned __int128).
unsigned __int128 choose128(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) /
                                         static_cast<unsigned long long>(i);
  return r;
}

long double lchoose(long long n, long long k) {
  if (k < 0 || k > n) return -1e300L;
  return std::lgammal(static_cast<long double>(n + 1)) -
         std::lgammal(static_cast<long double>(k + 1)) -
         std::lgammal(static_cast<long double>(n - k + 1));
}

long long support_lo(const HypergeomParams& p) { return std::max(0LL, p.n - (p.N - p.M)); }
long long support_hi(const HypergeomParams& p) { return std::min(p.M, p.n); }

}  // namespace

double hypergeom_pmf(const HypergeomParams& p, long long k) {
  validate(p);
  if (k < support_lo(p) || k > support_hi(p)) return 0.0;
  if (p.N <= 120) {
    long double num = static_cast<long double>(choose128(p.M, k)) *
                      static_cast<long double>(choose128(p.N - p.M, p.n - k));
    long double den = static_cast<long double>(choose128(p.N, p.n));
    return static_cast<double>(num / den);
  }
  long double lg = lchoose(p.M, k) + lchoose(p.N - p.M, p.n - k) - lchoose(p.N, p.n);
  return static_cast<double>(std::exp(lg));
}

double tail_bound(const HypergeomParams& p, double t) {
  validate(p);
  if (t < 0) fail(Errc::Domain, "tail bound needs t >= 0");
  return std::exp(-2.0 * t * t * static_cast<double>(p.n));
}

double right_tail_at(const HypergeomParams& p, double x) {
  validate(p);
  long long kmin = static_cast<long long>(std::ceil(x - 1e-9));
  long double s = 0;
  for (long long k = std::max(kmin, support_lo(p)); k <= support_hi(p); ++k)
    s += static_cast<long double>(hypergeom_pmf(p, k));
  return static_cast<double>(s);
}

double left_tail_at(const HypergeomParams& p, double x) {
  validate(p);
  long long kmax = static_cast<long long>(std::floor(x + 1e-9));
  long double s = 0;
  for (long long k = support_lo(p); k <= std::min(kmax, support_hi(p)); ++k)
    s += static_cast<long double>(hypergeom_pmf(p, k));
  return static_cast<double>(s);
}

nlohmann::json ConcentrationReport::to_json() const {
  nlohmann::json j;
  j["N"] = N;
  j["p"] = p;
  j["eps"] = eps;
  j["sizes"] = sizes;
  j["mode"] = mode;
  j["right_threshold"] = right_threshold;
  j["left_threshold"] = left_threshold;
  j["right_tail"] = right_tail;
  j["left_tail"] = left_tail;
  j["right_envelope"] = right_envelope;
  j["left_envelope"] = left_envelope;
  if (mode == "monte_carlo") j["trials"] = trials;
  j["rounding"] = "set sizes are floor(N*p_i)";
  return j;
}

namespace {

void validate_concentration(long long N, const std::vector<double>& p, double eps) {
  if (N < 2) fail(Errc::Domain, "need N >= 2");
  for (double pi : p)
    if (!(pi > 0.0 && pi < 1.0)) fail(Errc::Domain, "need 0 < p_i < 1");
  if (!(eps > 0.0)) fail(Errc::Domain, "need eps > 0");
}

/// Right/left envelope for the l-set intersection tail, by recursion over the
/// intermediate intersection: at each step the extreme terms reuse the
/// (l-1)-set envelope at eps' = eps / (2 p_l) and the middle band costs
/// 2 N eps' e^{-2 ((eps - eps' p_l)/p_l)^2 N p_l}.
double envelope(long long N, const std::vector<double>& p, double eps) {
  if (p.size() == 2) {
    double t = eps / p[1];
    double n = std::floor(static_cast<double>(N) * p[1]);
    return std::exp(-2.0 * t * t * n);
  }
  double pl = p.back();
  std::vector<double> rest(p.begin(), p.end() - 1);
  double eps_prime = eps / (2.0 * pl);
  double t = (eps - eps_prime * pl) / pl;
  double band = 2.0 * static_cast<double>(N) * eps_prime *
                std::exp(-2.0 * t * t * static_cast<double>(N) * pl);
  return 2.0 * envelope(N, rest, eps_prime) + band;
}

}  // namespace

ConcentrationReport concentration_exact(long long N, double p1, double p2, double eps,
                                        long long exact_budget) {
  validate_concentration(N, {p1, p2}, eps);
  if (N > exact_budget)
    fail(Errc::BudgetExceeded, "exact concentration limited to N <= " + std::to_string(exact_budget));
  ConcentrationReport r;
  r.N = N;
  r.p = {p1, p2};
  r.eps = eps;
  r.mode = "exact";
  long long m1 = static_cast<long long>(std::floor(static_cast<double>(N) * p1));
  long long m2 = static_cast<long long>(std::floor(static_cast<double>(N) * p2));
  r.sizes = {m1, m2};
  HypergeomParams hp{N, m1, m2};

  double hi = static_cast<double>(N) * (p1 * p2 + eps);
  double lo = static_cast<double>(N) * (p1 * p2 - eps);
  r.right_threshold = static_cast<long long>(std::floor(hi + 1e-9)) + 1;
  r.left_threshold = static_cast<long long>(std::ceil(lo - 1e-9)) - 1;
  r.right_tail = right_tail_at(hp, static_cast<double>(r.right_threshold));
  r.left_tail = left_tail_at(hp, static_cast<double>(r.left_threshold));
  r.right_envelope = envelope(N, r.p, eps);
  r.left_envelope = r.right_envelope;
  return r;
}

ConcentrationReport concentration_monte_carlo(long long N, const std::vector<double>& p, double eps,
                                              size_t trials, uint64_t seed) {
  validate_concentration(N, p, eps);
  if (p.size() < 2) fail(Errc::Domain, "need at least two sets");
  if (N > Bits::kCapacity) fail(Errc::Domain, "N exceeds the slot capacity");
  ConcentrationReport r;
  r.N = N;
  r.p = p;
  r.eps = eps;
  r.mode = "monte_carlo";
  r.trials = trials;
  double prod = 1.0;
  for (double pi : p) {
    prod *= pi;
    r.sizes.push_back(static_cast<long long>(std::floor(static_cast<double>(N) * pi)));
  }
  double hi = static_cast<double>(N) * (prod + eps);
  double lo = static_cast<double>(N) * (prod - eps);
  r.right_threshold = static_cast<long long>(std::floor(hi + 1e-9)) + 1;
  r.left_threshold = static_cast<long long>(std::ceil(lo - 1e-9)) - 1;

  std::vector<int> pool(static_cast<size_t>(N));
  for (long long i = 0; i < N; ++i) pool[static_cast<size_t>(i)] = static_cast<int>(i);
  Rng rng = Rng(seed).fork("concentration");
  size_t right_hits = 0, left_hits = 0;
  for (size_t t = 0; t < trials; ++t) {
    Bits meet;
    for (size_t i = 0; i < p.size(); ++i) {
      Bits a;
      for (int s : rng.sample(pool, static_cast<int>(r.sizes[i]))) a.set(s);
      meet = i == 0 ? a : (meet & a);
    }
    long long c = meet.count();
    if (c >= r.right_threshold) ++right_hits;
    if (c <= r.left_threshold) ++left_hits;
  }
  r.right_tail = static_cast<double>(right_hits) / static_cast<double>(trials);
  r.left_tail = static_cast<double>(left_hits) / static_cast<double>(trials);
  r.right_envelope = envelope(N, p, eps);
  r.left_envelope = r.right_envelope;
  return r;
}

}  // namespace spg
