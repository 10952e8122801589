#pragma once

#include <cstdint>
#include <functional>

#include "bernproc/core.hpp"

namespace bernproc {

struct SupEstimate {
  double value = 0.0;
  enum class Method { Exact, MonteCarlo } method = Method::Exact;
  std::int64_t samples = 0;  // sign patterns for exact, draws for Monte Carlo
  double stderr_est = 0.0;   // 0 for exact
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultExactLimit = 22;

/// E sup_{t in T} sum_{i in J} eps_i t_i by enumeration of all sign patterns
/// over the coordinates J meets.  Throws ExactLimitExceeded when that
/// coordinate count is above `exact_limit`.
SupEstimate bernoulli_sup_exact(const PointSet& T, const IndexSet& J,
                                std::size_t exact_limit = kDefaultExactLimit);

/// Monte-Carlo estimate of the same quantity.  Sample draws are organized in
/// fixed-size chunks; chunk c consumes the (seed, c) random stream, so the
/// result is reproducible bit-for-bit for a given seed.
SupEstimate bernoulli_sup_mc(const PointSet& T, const IndexSet& J, std::int64_t samples,
                             std::uint64_t seed);

/// E sup_t sum_i t_i g_i with independent standard normals.
SupEstimate gaussian_sup_mc(const PointSet& T, std::int64_t samples, std::uint64_t seed);

/// E sup_t | sum_i t_i (delta_i - delta) | with i.i.d. Bernoulli(delta)
/// selectors; requires 0 < delta <= 1/2.
SupEstimate selector_sup_mc(const PointSet& T, double delta, std::int64_t samples,
                            std::uint64_t seed);

/// (E |sum_i t_i eps_i|^p)^(1/p), exact by sign enumeration; p > 0.
double process_moment_norm(const SparseVector& t, double p,
                           std::size_t exact_limit = kDefaultExactLimit);

/// Upper bound on E sup over a convex hull whose representatives t^n satisfy
/// a log(n+2)-moment bound: tail probabilities sum to
/// S(u) = sum_{n<=truncation} u^{-log(n+2)}, and the bound is
/// moment_bound * ( u0 + integral_{u0}^inf S(u) du ) with S(u0) = 1.
double converse_convex_hull_bound(double moment_bound, int truncation);

/// Coordinate maps that are 1-Lipschitz and fix 0, for comparison checks.
std::function<double(double)> clamp_map(double lo, double hi);
std::function<double(double)> abs_map();
std::function<double(double)> soft_threshold_map(double lambda);

/// Applies a coordinate map to every stored entry of every point.  The map
/// must fix 0 so that unstored coordinates are unaffected.
PointSet apply_contraction(const PointSet& T, const std::function<double(double)>& map);

}  // namespace bernproc
