#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace spg {

/// Sampling n times without replacement from a population of N with M marked
/// elements.
struct HypergeomParams {
  long long N = 0;
  long long M = 0;
  long long n = 0;
};

/// P(H = k). Exact integer binomials up to N = 120, log-gamma beyond
/// (relative error ~1e-10).
double hypergeom_pmf(const HypergeomParams& p, long long k);

/// e^{-2 t^2 n}: bound on P(H >= (M/N + t) n) and on P(H <= (M/N - t) n).
double tail_bound(const HypergeomParams& p, double t);

/// Exact tails by pmf summation.
double right_tail_at(const HypergeomParams& p, double x);  // P(H >= x)
double left_tail_at(const HypergeomParams& p, double x);   // P(H <= x)

struct ConcentrationReport {
  long long N = 0;
  std::vector<double> p;
  double eps = 0;
  std::vector<long long> sizes;  // floor(N * p_i)
  std::string mode;              // "exact" | "monte_carlo"
  long long right_threshold = 0;  // smallest k counted in the right tail
  long long left_threshold = 0;   // largest k counted in the left tail
  double right_tail = 0;
  double left_tail = 0;
  double right_envelope = 0;  // tail-bound envelope (may exceed 1 at small N)
  double left_envelope = 0;
  size_t trials = 0;

  nlohmann::json to_json() const;
};

/// Exact two-set intersection tails P(|A1 & A2| > N(p1 p2 + eps)) and the
/// left analogue, with the matching exponential envelope.
ConcentrationReport concentration_exact(long long N, double p1, double p2, double eps,
                                        long long exact_budget = 4096);

/// Monte Carlo for 2 or more sets; the envelope follows the recursive
/// decomposition over the intermediate intersection size.
ConcentrationReport concentration_monte_carlo(long long N, const std::vector<double>& p, double eps,
                                              size_t trials, uint64_t seed);

}  // namespace spg
