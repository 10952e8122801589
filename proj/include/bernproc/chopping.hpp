#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bernproc/core.hpp"
#include "bernproc/supremum.hpp"

namespace bernproc {

/// Slope-1 ramp on [u, v] vanishing at 0:
/// phi(u,v,x) = min{v, max{x, u}} - min{v, max{0, u}}.  Requires u < v.
double phi(double u, double v, double x);

/// Value grid around x at window scale r^-k and cell scale r^-j:
/// { p r^-j : (ceil(r^k x) - 4) r^(j-k) <= p <= (ceil(r^k x) + 3) r^(j-k) }.
/// Requires j >= k and r >= 4.  The window endpoints do not depend on j.
std::vector<double> grid_levels(double x, int k, int j, int r);

/// Parameters of a chopped process: index set J, anchor point u, window
/// scale k, cell scale j, scale base r (a power of two, >= 4).
struct FunctionalParams {
  IndexSet J;
  SparseVector u;
  int k = 0;
  int j = 0;
  int r = 4;

  FunctionalParams(IndexSet J, SparseVector u, int k, int j, int r);

  /// Same J, u, k, r with the cell scale replaced.
  FunctionalParams with_j(int new_j) const { return {J, u, k, new_j, r}; }

  double cell_width() const;    // r^-j
  double window_width() const;  // r^-k
};

/// A family of per-coordinate chopping grids; each grid holds at least two
/// strictly increasing levels, and consecutive levels name one Bernoulli
/// coordinate (i, p).
class ChoppingGrid {
 public:
  explicit ChoppingGrid(std::map<int, std::vector<double>> levels, int base_r = 4);

  /// The grids (G(u_i, k, j)) for i in params.J.
  static ChoppingGrid from_params(const FunctionalParams& params);

  const std::map<int, std::vector<double>>& levels() const { return levels_; }
  int base() const { return base_; }

  /// One (index, cell ordinal) pair per consecutive level pair.
  std::vector<std::pair<int, int>> coordinates() const;

  /// Canonical distance of the chopped process.
  double distance(const SparseVector& s, const SparseVector& t) const;

  SupEstimate sup_exact(const PointSet& T, std::size_t exact_limit = kDefaultExactLimit) const;
  SupEstimate sup_mc(const PointSet& T, std::int64_t samples, std::uint64_t seed) const;

 private:
  std::map<int, std::vector<double>> levels_;
  int base_;
};

enum class SupMode { Exact, MonteCarlo };

/// F(T, J, u, k, j) = E sup_t X_t(J, u, k, j).  Exact mode enumerates sign
/// patterns over the chopped coordinates that are not identically zero on T
/// and throws ExactLimitExceeded when there are more of them than the limit.
SupEstimate chopped_sup(const PointSet& T, const FunctionalParams& params,
                        SupMode mode = SupMode::Exact, std::int64_t samples = 0,
                        std::uint64_t seed = 0, std::size_t exact_limit = kDefaultExactLimit);

/// Canonical distance d(J,u,k,j)(s,t); never exceeds the restricted l2
/// distance over J.
double chopped_distance(const SparseVector& s, const SparseVector& t,
                        const FunctionalParams& params);

double chopped_diameter(const PointSet& T, const FunctionalParams& params);
double chopped_diameter(const PointSet& T, const std::vector<int>& ids,
                        const FunctionalParams& params);

}  // namespace bernproc
