#include "bernproc/supremum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bernproc/detail/signsum.hpp"
#include "bernproc/rng.hpp"

namespace bernproc {

namespace {

// Row-major coefficient matrix restricted to the coordinates J meets.
struct CoeffMatrix {
  std::vector<int> coords;
  std::vector<std::vector<double>> rows;  // rows[point][coord]
};

CoeffMatrix build_matrix(const PointSet& T, const IndexSet& J) {
  CoeffMatrix m;
  m.coords = J.intersect(T.union_support()).members();
  m.rows.assign(T.size(), std::vector<double>(m.coords.size(), 0.0));
  for (std::size_t p = 0; p < T.size(); ++p) {
    for (std::size_t c = 0; c < m.coords.size(); ++c) {
      m.rows[p][c] = T[p].get(m.coords[c]);
    }
  }
  return m;
}

// Column-major copy for the Monte Carlo inner loop.
std::vector<std::vector<double>> columns_of(const CoeffMatrix& m) {
  std::vector<std::vector<double>> cols(m.coords.size(), std::vector<double>(m.rows.size()));
  for (std::size_t c = 0; c < m.coords.size(); ++c) {
    for (std::size_t p = 0; p < m.rows.size(); ++p) cols[c][p] = m.rows[p][c];
  }
  return cols;
}

}  // namespace

SupEstimate bernoulli_sup_exact(const PointSet& T, const IndexSet& J, std::size_t exact_limit) {
  CoeffMatrix m = build_matrix(T, J);
  const std::size_t raw_coords = m.coords.size();
  if (raw_coords > exact_limit) throw ExactLimitExceeded(raw_coords, exact_limit);
  detail::center_and_dedup_rows(m.rows);
  const double value = detail::enumerate_sign_mean(m.rows, [](double x) { return x; });
  return {value, SupEstimate::Method::Exact,
          static_cast<std::int64_t>(std::uint64_t{1} << raw_coords), 0.0, 0};
}

SupEstimate bernoulli_sup_mc(const PointSet& T, const IndexSet& J, std::int64_t samples,
                             std::uint64_t seed) {
  const CoeffMatrix m = build_matrix(T, J);
  const auto cols = columns_of(m);
  const std::size_t npts = T.size();
  std::vector<double> acc(npts);
  auto [mean, se] = detail::run_mc(samples, seed, [&](RandomStream& rs) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const auto& col : cols) {
      const double s = rs.next_sign();
      for (std::size_t p = 0; p < npts; ++p) acc[p] += s * col[p];
    }
    return *std::max_element(acc.begin(), acc.end());
  });
  return {mean, SupEstimate::Method::MonteCarlo, samples, se, seed};
}

SupEstimate gaussian_sup_mc(const PointSet& T, std::int64_t samples, std::uint64_t seed) {
  const CoeffMatrix m = build_matrix(T, T.union_support());
  const auto cols = columns_of(m);
  const std::size_t npts = T.size();
  std::vector<double> acc(npts);
  auto [mean, se] = detail::run_mc(samples, seed, [&](RandomStream& rs) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const auto& col : cols) {
      const double g = rs.next_normal();
      for (std::size_t p = 0; p < npts; ++p) acc[p] += g * col[p];
    }
    return *std::max_element(acc.begin(), acc.end());
  });
  return {mean, SupEstimate::Method::MonteCarlo, samples, se, seed};
}

SupEstimate selector_sup_mc(const PointSet& T, double delta, std::int64_t samples,
                            std::uint64_t seed) {
  if (!(delta > 0.0 && delta <= 0.5)) throw DomainError("delta must lie in (0, 1/2]");
  const CoeffMatrix m = build_matrix(T, T.union_support());
  const auto cols = columns_of(m);
  const std::size_t npts = T.size();
  std::vector<double> acc(npts);
  auto [mean, se] = detail::run_mc(samples, seed, [&](RandomStream& rs) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const auto& col : cols) {
      const double w = (rs.next_bernoulli(delta) ? 1.0 : 0.0) - delta;
      for (std::size_t p = 0; p < npts; ++p) acc[p] += w * col[p];
    }
    double best = 0.0;
    for (std::size_t p = 0; p < npts; ++p) best = std::max(best, std::abs(acc[p]));
    return best;
  });
  return {mean, SupEstimate::Method::MonteCarlo, samples, se, seed};
}

double process_moment_norm(const SparseVector& t, double p, std::size_t exact_limit) {
  if (!(p > 0.0)) throw DomainError("moment order must be positive");
  const std::size_t bits = t.support_size();
  if (bits > exact_limit) throw ExactLimitExceeded(bits, exact_limit);
  std::vector<std::vector<double>> rows(1);
  rows[0].reserve(bits);
  for (const auto& [i, v] : t.entries()) rows[0].push_back(v);
  const double mean =
      detail::enumerate_sign_mean(rows, [p](double x) { return std::pow(std::abs(x), p); });
  return std::pow(mean, 1.0 / p);
}

double converse_convex_hull_bound(double moment_bound, int truncation) {
  if (moment_bound < 0.0) throw DomainError("moment bound must be non-negative");
  if (truncation < 1) throw DomainError("truncation must be >= 1");
  if (moment_bound == 0.0) return 0.0;

  std::vector<double> exps;
  exps.reserve(static_cast<std::size_t>(truncation));
  for (int n = 1; n <= truncation; ++n) exps.push_back(std::log(static_cast<double>(n) + 2.0));

  const auto tail_sum = [&](double u) {
    double s = 0.0;
    for (double a : exps) s += std::pow(u, -a);
    return s;
  };

  // S is continuous and strictly decreasing on [1, inf) with S(1) >= 1;
  // locate the crossing S(u0) = 1 by bisection.
  double lo = 1.0;
  double hi = 1.0;
  while (tail_sum(hi) > 1.0) hi *= 2.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (tail_sum(mid) > 1.0 ? lo : hi) = mid;
  }
  const double u0 = 0.5 * (lo + hi);

  // Every exponent is at least log(3) > 1, so each tail integral converges:
  // int_{u0}^inf u^{-a} du = u0^{1-a} / (a - 1).
  double integral = 0.0;
  for (double a : exps) integral += std::pow(u0, 1.0 - a) / (a - 1.0);
  return moment_bound * (u0 + integral);
}

std::function<double(double)> clamp_map(double lo, double hi) {
  if (!(lo <= 0.0 && 0.0 <= hi)) throw DomainError("clamp interval must contain 0");
  return [lo, hi](double x) { return std::min(hi, std::max(lo, x)); };
}

std::function<double(double)> abs_map() {
  return [](double x) { return std::abs(x); };
}

std::function<double(double)> soft_threshold_map(double lambda) {
  if (lambda < 0.0) throw DomainError("soft threshold must be non-negative");
  return [lambda](double x) {
    const double mag = std::max(std::abs(x) - lambda, 0.0);
    return x < 0.0 ? -mag : mag;
  };
}

PointSet apply_contraction(const PointSet& T, const std::function<double(double)>& map) {
  std::vector<SparseVector> out;
  out.reserve(T.size());
  for (const auto& p : T.points()) {
    std::vector<std::pair<int, double>> entries;
    entries.reserve(p.entries().size());
    for (const auto& [i, v] : p.entries()) entries.emplace_back(i, map(v));
    out.emplace_back(std::move(entries), p.id());
  }
  return PointSet(std::move(out), T.ambient());
}

}  // namespace bernproc
