#include "bernproc/chopping.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bernproc/detail/signsum.hpp"

namespace bernproc {

namespace {

constexpr std::int64_t kMaxGridLevels = std::int64_t{1} << 22;

bool is_power_of_two(int r) { return r > 0 && (r & (r - 1)) == 0; }

// r^e as a double; exact (ldexp) when r is a power of two.
double ipow(int r, int e) {
  if (is_power_of_two(r)) {
    const int log2r = std::countr_zero(static_cast<unsigned>(r));
    return std::ldexp(1.0, log2r * e);
  }
  return std::pow(static_cast<double>(r), static_cast<double>(e));
}

// ceil(r^k x) following the mathematical ceiling at exact integers; the
// bracketing convention is (p-1) r^-k < x <= p r^-k.
std::int64_t ceil_scaled(double x, int k, int r) {
  const double scaled = x * ipow(r, k);
  if (!(std::abs(scaled) < 9.0e15)) {
    throw CapacityExceeded("grid anchor too large for integer cell indexing");
  }
  return static_cast<std::int64_t>(std::ceil(scaled));
}

struct Window {
  double lo = 0.0;    // (p_k(u) - 4) r^-k
  double hi = 0.0;    // (p_k(u) + 3) r^-k
  double cell = 0.0;  // r^-j
};

Window make_window(double anchor, int k, int j, int r) {
  const std::int64_t pk = ceil_scaled(anchor, k, r);
  const double wk = ipow(r, -k);
  Window w;
  w.lo = static_cast<double>(pk - 4) * wk;
  w.hi = static_cast<double>(pk + 3) * wk;
  w.cell = ipow(r, -j);
  return w;
}

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

// Sum over grid cells of the squared per-cell increment between s and t.
// Only cells overlapping [min, max] of the clipped values contribute.
double squared_cell_increments(const Window& w, double s, double t) {
  double a = clamp(s, w.lo, w.hi);
  double b = clamp(t, w.lo, w.hi);
  if (a == b) return 0.0;
  if (a < b) std::swap(a, b);
  const std::int64_t first = static_cast<std::int64_t>(std::floor(b / w.cell)) + 1;
  const std::int64_t last = static_cast<std::int64_t>(std::ceil(a / w.cell));
  double sum = 0.0;
  for (std::int64_t p = first; p <= last; ++p) {
    const double seg = std::min(a, static_cast<double>(p) * w.cell) -
                       std::max(b, static_cast<double>(p - 1) * w.cell);
    if (seg > 0.0) sum += seg * seg;
  }
  return sum;
}

// Columns of the chopped process over cells that are not identically zero
// on T.  Returns rows[point][active cell].
std::vector<std::vector<double>> chopped_rows(const PointSet& T, const FunctionalParams& params) {
  std::vector<std::vector<double>> rows(T.size());
  const IndexSet coords = params.J.intersect(T.union_support());
  for (int i : coords) {
    const Window w = make_window(params.u.get(i), params.k, params.j, params.r);
    double lo_val = clamp(0.0, w.lo, w.hi);
    double hi_val = lo_val;
    for (const auto& p : T.points()) {
      const double x = clamp(p.get(i), w.lo, w.hi);
      lo_val = std::min(lo_val, x);
      hi_val = std::max(hi_val, x);
    }
    const std::int64_t first = static_cast<std::int64_t>(std::floor(lo_val / w.cell)) + 1;
    const std::int64_t last = static_cast<std::int64_t>(std::ceil(hi_val / w.cell));
    for (std::int64_t p = first; p <= last; ++p) {
      const double cu = static_cast<double>(p - 1) * w.cell;
      const double cv = static_cast<double>(p) * w.cell;
      bool any = false;
      std::vector<double> col(T.size());
      for (std::size_t m = 0; m < T.size(); ++m) {
        col[m] = phi(cu, cv, T[m].get(i));
        any = any || col[m] != 0.0;
      }
      if (!any) continue;
      for (std::size_t m = 0; m < T.size(); ++m) rows[m].push_back(col[m]);
    }
  }
  return rows;
}

std::vector<std::vector<double>> grid_rows(const std::map<int, std::vector<double>>& levels,
                                           const PointSet& T) {
  std::vector<std::vector<double>> rows(T.size());
  for (const auto& [i, lv] : levels) {
    for (std::size_t l = 1; l < lv.size(); ++l) {
      bool any = false;
      std::vector<double> col(T.size());
      for (std::size_t m = 0; m < T.size(); ++m) {
        col[m] = phi(lv[l - 1], lv[l], T[m].get(i));
        any = any || col[m] != 0.0;
      }
      if (!any) continue;
      for (std::size_t m = 0; m < T.size(); ++m) rows[m].push_back(col[m]);
    }
  }
  return rows;
}

SupEstimate exact_from_rows(std::vector<std::vector<double>> rows, std::size_t exact_limit) {
  const std::size_t active = rows.empty() ? 0 : rows[0].size();
  if (active > exact_limit) throw ExactLimitExceeded(active, exact_limit);
  detail::center_and_dedup_rows(rows);
  const double value = detail::enumerate_sign_mean(rows, [](double x) { return x; });
  return {value, SupEstimate::Method::Exact,
          static_cast<std::int64_t>(std::uint64_t{1} << active), 0.0, 0};
}

SupEstimate mc_from_rows(const std::vector<std::vector<double>>& rows, std::int64_t samples,
                         std::uint64_t seed) {
  const std::size_t npts = rows.size();
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::vector<double>> cols(ncols, std::vector<double>(npts));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t m = 0; m < npts; ++m) cols[c][m] = rows[m][c];
  }
  std::vector<double> acc(npts);
  auto [mean, se] = detail::run_mc(samples, seed, [&](RandomStream& rs) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const auto& col : cols) {
      const double s = rs.next_sign();
      for (std::size_t m = 0; m < npts; ++m) acc[m] += s * col[m];
    }
    return *std::max_element(acc.begin(), acc.end());
  });
  return {mean, SupEstimate::Method::MonteCarlo, samples, se, seed};
}

}  // namespace

double phi(double u, double v, double x) {
  if (!(u < v)) throw DomainError("phi requires u < v");
  return std::min(v, std::max(x, u)) - std::min(v, std::max(0.0, u));
}

std::vector<double> grid_levels(double x, int k, int j, int r) {
  if (j < k) throw DomainError("grid requires j >= k");
  if (r < 4) throw DomainError("grid requires r >= 4");
  const std::int64_t pk = ceil_scaled(x, k, r);
  double stretch = ipow(r, j - k);
  if (!(7.0 * stretch + 1.0 <= static_cast<double>(kMaxGridLevels))) {
    throw CapacityExceeded("grid would materialize too many levels");
  }
  const auto scale = static_cast<std::int64_t>(stretch);
  const std::int64_t w = (pk - 4) * scale;
  const std::int64_t v = (pk + 3) * scale;
  const double cell = ipow(r, -j);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(v - w + 1));
  for (std::int64_t p = w; p <= v; ++p) out.push_back(static_cast<double>(p) * cell);
  return out;
}

FunctionalParams::FunctionalParams(IndexSet J_, SparseVector u_, int k_, int j_, int r_)
    : J(std::move(J_)), u(std::move(u_)), k(k_), j(j_), r(r_) {
  if (j < k) throw DomainError("chopped process requires j >= k");
  if (r < 4 || !is_power_of_two(r)) throw DomainError("scale base must be a power of two >= 4");
}

double FunctionalParams::cell_width() const { return ipow(r, -j); }
double FunctionalParams::window_width() const { return ipow(r, -k); }

ChoppingGrid::ChoppingGrid(std::map<int, std::vector<double>> levels, int base_r)
    : levels_(std::move(levels)), base_(base_r) {
  if (base_ < 4) throw DomainError("grid base must be >= 4");
  for (const auto& [i, lv] : levels_) {
    if (i < 0) throw DomainError("grid indices must be non-negative");
    if (lv.size() < 2) throw DomainError("each grid needs at least two levels");
    for (std::size_t l = 1; l < lv.size(); ++l) {
      if (!(lv[l - 1] < lv[l])) throw DomainError("grid levels must be strictly increasing");
    }
  }
}

ChoppingGrid ChoppingGrid::from_params(const FunctionalParams& params) {
  std::map<int, std::vector<double>> levels;
  for (int i : params.J) {
    levels[i] = grid_levels(params.u.get(i), params.k, params.j, params.r);
  }
  return ChoppingGrid(std::move(levels), params.r);
}

std::vector<std::pair<int, int>> ChoppingGrid::coordinates() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, lv] : levels_) {
    for (std::size_t l = 1; l < lv.size(); ++l) out.emplace_back(i, static_cast<int>(l));
  }
  return out;
}

double ChoppingGrid::distance(const SparseVector& s, const SparseVector& t) const {
  double sum = 0.0;
  for (const auto& [i, lv] : levels_) {
    const double si = s.get(i);
    const double ti = t.get(i);
    if (si == ti) continue;
    for (std::size_t l = 1; l < lv.size(); ++l) {
      const double d = phi(lv[l - 1], lv[l], si) - phi(lv[l - 1], lv[l], ti);
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

SupEstimate ChoppingGrid::sup_exact(const PointSet& T, std::size_t exact_limit) const {
  return exact_from_rows(grid_rows(levels_, T), exact_limit);
}

SupEstimate ChoppingGrid::sup_mc(const PointSet& T, std::int64_t samples,
                                 std::uint64_t seed) const {
  return mc_from_rows(grid_rows(levels_, T), samples, seed);
}

SupEstimate chopped_sup(const PointSet& T, const FunctionalParams& params, SupMode mode,
                        std::int64_t samples, std::uint64_t seed, std::size_t exact_limit) {
  const auto rows = chopped_rows(T, params);
  if (mode == SupMode::Exact) return exact_from_rows(std::move(rows), exact_limit);
  return mc_from_rows(rows, samples, seed);
}

double chopped_distance(const SparseVector& s, const SparseVector& t,
                        const FunctionalParams& params) {
  double sum = 0.0;
  std::size_t a = 0;
  std::size_t b = 0;
  const auto& se = s.entries();
  const auto& te = t.entries();
  // Merge walk over the union of supports restricted to J.
  while (a < se.size() || b < te.size()) {
    int i = 0;
    double sv = 0.0;
    double tv = 0.0;
    if (b == te.size() || (a < se.size() && se[a].first < te[b].first)) {
      i = se[a].first;
      sv = se[a].second;
      ++a;
    } else if (a == se.size() || te[b].first < se[a].first) {
      i = te[b].first;
      tv = te[b].second;
      ++b;
    } else {
      i = se[a].first;
      sv = se[a].second;
      tv = te[b].second;
      ++a;
      ++b;
    }
    if (sv == tv || !params.J.contains(i)) continue;
    const Window w = make_window(params.u.get(i), params.k, params.j, params.r);
    sum += squared_cell_increments(w, sv, tv);
  }
  return std::sqrt(sum);
}

double chopped_diameter(const PointSet& T, const FunctionalParams& params) {
  double best = 0.0;
  for (std::size_t a = 0; a < T.size(); ++a) {
    for (std::size_t b = a + 1; b < T.size(); ++b) {
      best = std::max(best, chopped_distance(T[a], T[b], params));
    }
  }
  return best;
}

double chopped_diameter(const PointSet& T, const std::vector<int>& ids,
                        const FunctionalParams& params) {
  double best = 0.0;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      best = std::max(best, chopped_distance(T[static_cast<std::size_t>(ids[a])],
                                             T[static_cast<std::size_t>(ids[b])], params));
    }
  }
  return best;
}

}  // namespace bernproc
