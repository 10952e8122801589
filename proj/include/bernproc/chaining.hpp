#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bernproc/core.hpp"

namespace bernproc {

/// Admissible partition sequence: level 0 is {T}, each level refines the
/// previous, and level n holds at most N_n = 2^(2^n) blocks.  Blocks list
/// point ids (positions in the PointSet order).
struct AdmissibleSequence {
  std::vector<std::vector<std::vector<int>>> levels;
};

/// N_n = 2^(2^n), saturated to avoid overflow at deep levels.
std::uint64_t admissible_cap(int level);

/// Empty when the sequence passes the level-0 shape, refinement/nesting and
/// cardinality checks for a point set of `n_points` points.
std::vector<std::string> check_admissible(const AdmissibleSequence& seq, std::size_t n_points);

/// Greedy upper bound for the gamma_alpha functional together with the
/// admissible sequence that witnesses it.  Blocks are refined by
/// farthest-point center selection (ties by point order) and the sequence
/// is truncated once every block is a singleton; the returned value is
/// sup_t sum_{n<=depth} 2^(n/alpha) diam(A_n(t)).
std::pair<double, AdmissibleSequence> gamma_alpha_upper(const PointSet& T, const Metric& metric,
                                                        double alpha, int depth);

/// Entropy-number style bound sum_n 2^(n/2) e_n(T), where e_n is the covering
/// radius of T by greedy k-center balls centered at points of T; one center
/// at n = 0, 2^(2^n) centers for n >= 1.
double dudley_bound(const PointSet& T, const Metric& metric);

/// min{ a sqrt(log m), a^2 / b } — the unscaled minoration quantity for m
/// points mutually a-separated with sup-norm at most b.
double sudakov_minoration_value(std::int64_t m, double a, double b);

}  // namespace bernproc
