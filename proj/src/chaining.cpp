#include "bernproc/chaining.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace bernproc {

namespace {

// Greedy farthest-point centers among `ids`; the first center is the first
// point in order, each next center maximizes the distance to the chosen ones
// (ties by point order).  Stops early once every remaining point coincides
// with a center.
std::vector<int> farthest_point_centers(const PointSet& T, const std::vector<int>& ids,
                                        const Metric& metric, std::size_t max_centers) {
  std::vector<int> centers;
  if (ids.empty() || max_centers == 0) return centers;
  centers.push_back(ids[0]);
  std::vector<double> dist(ids.size());
  for (std::size_t m = 0; m < ids.size(); ++m) {
    dist[m] = metric(T[static_cast<std::size_t>(ids[m])], T[static_cast<std::size_t>(ids[0])]);
  }
  while (centers.size() < std::min(max_centers, ids.size())) {
    std::size_t best = 0;
    for (std::size_t m = 1; m < ids.size(); ++m) {
      if (dist[m] > dist[best]) best = m;
    }
    if (dist[best] <= 0.0) break;
    centers.push_back(ids[best]);
    for (std::size_t m = 0; m < ids.size(); ++m) {
      dist[m] = std::min(dist[m], metric(T[static_cast<std::size_t>(ids[m])],
                                         T[static_cast<std::size_t>(ids[best])]));
    }
  }
  return centers;
}

// Partition `ids` into one block per center by nearest-center assignment
// (ties to the earliest center).  Blocks inherit the point order.
std::vector<std::vector<int>> assign_to_centers(const PointSet& T, const std::vector<int>& ids,
                                                const std::vector<int>& centers,
                                                const Metric& metric) {
  std::vector<std::vector<int>> blocks(centers.size());
  for (int id : ids) {
    std::size_t best = 0;
    double best_d = metric(T[static_cast<std::size_t>(id)],
                           T[static_cast<std::size_t>(centers[0])]);
    for (std::size_t c = 1; c < centers.size(); ++c) {
      const double d = metric(T[static_cast<std::size_t>(id)],
                              T[static_cast<std::size_t>(centers[c])]);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    blocks[best].push_back(id);
  }
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const auto& b) { return b.empty(); }),
               blocks.end());
  return blocks;
}

double covering_radius(const PointSet& T, const std::vector<int>& centers, const Metric& metric) {
  double radius = 0.0;
  for (std::size_t id = 0; id < T.size(); ++id) {
    double nearest = metric(T[id], T[static_cast<std::size_t>(centers[0])]);
    for (std::size_t c = 1; c < centers.size(); ++c) {
      nearest = std::min(nearest, metric(T[id], T[static_cast<std::size_t>(centers[c])]));
    }
    radius = std::max(radius, nearest);
  }
  return radius;
}

}  // namespace

std::uint64_t admissible_cap(int level) {
  if (level < 0) return 0;
  if (level >= 6) return std::uint64_t{1} << 62;  // saturate: 2^(2^6) overflows
  return std::uint64_t{1} << (std::uint64_t{1} << level);
}

std::vector<std::string> check_admissible(const AdmissibleSequence& seq, std::size_t n_points) {
  std::vector<std::string> issues;
  if (seq.levels.empty()) {
    issues.push_back("sequence has no levels");
    return issues;
  }
  std::vector<int> all(n_points);
  for (std::size_t i = 0; i < n_points; ++i) all[i] = static_cast<int>(i);
  if (seq.levels[0].size() != 1 ||
      std::set<int>(seq.levels[0][0].begin(), seq.levels[0][0].end()) !=
          std::set<int>(all.begin(), all.end())) {
    issues.push_back("level 0 must be the single block {T}");
  }
  for (std::size_t n = 0; n < seq.levels.size(); ++n) {
    if (seq.levels[n].size() > admissible_cap(static_cast<int>(n))) {
      issues.push_back("level " + std::to_string(n) + " exceeds its cardinality cap");
    }
    std::set<int> seen;
    std::size_t count = 0;
    for (const auto& block : seq.levels[n]) {
      for (int id : block) {
        seen.insert(id);
        ++count;
      }
    }
    if (count != n_points || seen.size() != n_points) {
      issues.push_back("level " + std::to_string(n) + " is not a partition of T");
    }
    if (n == 0) continue;
    // Nesting: each block sits inside one parent block.
    for (const auto& block : seq.levels[n]) {
      bool nested = false;
      for (const auto& parent : seq.levels[n - 1]) {
        if (std::includes(parent.begin(), parent.end(), block.begin(), block.end())) {
          nested = true;
          break;
        }
      }
      if (!nested) {
        issues.push_back("level " + std::to_string(n) + " holds a block not nested in level " +
                         std::to_string(n - 1));
      }
    }
  }
  return issues;
}

std::pair<double, AdmissibleSequence> gamma_alpha_upper(const PointSet& T, const Metric& metric,
                                                        double alpha, int depth) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (depth < 1) throw DomainError("depth must be >= 1");

  AdmissibleSequence seq;
  std::vector<int> all(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) all[i] = static_cast<int>(i);
  seq.levels.push_back({all});

  for (int n = 0; n < depth; ++n) {
    const auto& current = seq.levels.back();
    bool all_singleton = true;
    for (const auto& b : current) all_singleton = all_singleton && b.size() <= 1;
    if (all_singleton) break;

    const std::uint64_t budget = admissible_cap(n + 1);
    const std::uint64_t per_block =
        std::max<std::uint64_t>(budget / std::max<std::uint64_t>(current.size(), 1), 2);
    std::vector<std::vector<int>> next;
    for (const auto& block : current) {
      const auto centers = farthest_point_centers(
          T, block, metric, static_cast<std::size_t>(std::min<std::uint64_t>(per_block, 1 << 20)));
      auto pieces = assign_to_centers(T, block, centers, metric);
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    if (next.size() > budget) throw CapacityExceeded("refinement exceeded the level budget");
    seq.levels.push_back(std::move(next));
  }

  // sup over points of the weighted diameter sum along the point's blocks.
  double value = 0.0;
  for (std::size_t id = 0; id < T.size(); ++id) {
    double acc = 0.0;
    for (std::size_t n = 0; n < seq.levels.size(); ++n) {
      for (const auto& block : seq.levels[n]) {
        if (std::find(block.begin(), block.end(), static_cast<int>(id)) != block.end()) {
          acc += std::pow(2.0, static_cast<double>(n) / alpha) * diameter(T, block, metric);
          break;
        }
      }
    }
    value = std::max(value, acc);
  }
  return {value, std::move(seq)};
}

double dudley_bound(const PointSet& T, const Metric& metric) {
  std::vector<int> all(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) all[i] = static_cast<int>(i);
  double bound = 0.0;
  for (int n = 0;; ++n) {
    const std::uint64_t k = n == 0 ? 1 : admissible_cap(n);
    const auto centers = farthest_point_centers(
        T, all, metric, static_cast<std::size_t>(std::min<std::uint64_t>(k, T.size())));
    const double radius = covering_radius(T, centers, metric);
    bound += std::pow(2.0, 0.5 * n) * radius;
    if (radius == 0.0 || k >= T.size()) break;
  }
  return bound;
}

double sudakov_minoration_value(std::int64_t m, double a, double b) {
  if (m < 1) throw DomainError("point count must be >= 1");
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("separation and sup-norm bound must be positive");
  const double logm = std::log(static_cast<double>(m));
  return std::min(a * std::sqrt(logm), a * a / b);
}

}  // namespace bernproc
