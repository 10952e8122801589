#include "bernproc/core.hpp"

#include <algorithm>
#include <cmath>

namespace bernproc {

IndexSet::IndexSet(std::vector<int> members) : members_(std::move(members)) {
  for (int i : members_) {
    if (i < 0) throw DomainError("index sets hold non-negative indices");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSet IndexSet::range(int count) {
  std::vector<int> m(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(i)] = i;
  return IndexSet(std::move(m));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

IndexSet IndexSet::union_with(const IndexSet& other) const {
  std::vector<int> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  IndexSet result;
  result.members_ = std::move(out);
  return result;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  IndexSet result;
  result.members_ = std::move(out);
  return result;
}

SparseVector::SparseVector(std::vector<std::pair<int, double>> entries, std::string id)
    : entries_(std::move(entries)), id_(std::move(id)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, double>> merged;
  merged.reserve(entries_.size());
  for (const auto& [idx, val] : entries_) {
    if (idx < 0) throw DomainError("sparse vector indices must be non-negative");
    if (!merged.empty() && merged.back().first == idx) {
      merged.back().second += val;
    } else {
      merged.emplace_back(idx, val);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& e) { return e.second == 0.0; }),
               merged.end());
  entries_ = std::move(merged);
}

SparseVector SparseVector::unit(int index, double value, std::string id) {
  return SparseVector({{index, value}}, std::move(id));
}

double SparseVector::get(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0.0;
}

IndexSet SparseVector::support() const {
  std::vector<int> idx;
  idx.reserve(entries_.size());
  for (const auto& [i, v] : entries_) idx.push_back(i);
  return IndexSet(std::move(idx));
}

namespace {

// Merge walk over two sorted entry lists; combine(a, b) sees matched
// coefficients (zero where absent).  Never touches indices outside
// the union of the operand supports.
template <typename F>
void merge_entries(const std::vector<std::pair<int, double>>& lhs,
                   const std::vector<std::pair<int, double>>& rhs, F&& combine) {
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < lhs.size() || b < rhs.size()) {
    if (b == rhs.size() || (a < lhs.size() && lhs[a].first < rhs[b].first)) {
      combine(lhs[a].first, lhs[a].second, 0.0);
      ++a;
    } else if (a == lhs.size() || rhs[b].first < lhs[a].first) {
      combine(rhs[b].first, 0.0, rhs[b].second);
      ++b;
    } else {
      combine(lhs[a].first, lhs[a].second, rhs[b].second);
      ++a;
      ++b;
    }
  }
}

}  // namespace

SparseVector SparseVector::plus(const SparseVector& other) const {
  std::vector<std::pair<int, double>> out;
  out.reserve(entries_.size() + other.entries_.size());
  merge_entries(entries_, other.entries_,
                [&](int i, double x, double y) { out.emplace_back(i, x + y); });
  return SparseVector(std::move(out));
}

SparseVector SparseVector::minus(const SparseVector& other) const {
  std::vector<std::pair<int, double>> out;
  out.reserve(entries_.size() + other.entries_.size());
  merge_entries(entries_, other.entries_,
                [&](int i, double x, double y) { out.emplace_back(i, x - y); });
  return SparseVector(std::move(out));
}

SparseVector SparseVector::scaled(double factor) const {
  std::vector<std::pair<int, double>> out;
  out.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.emplace_back(i, v * factor);
  return SparseVector(std::move(out), id_);
}

double SparseVector::l1_norm() const {
  double s = 0.0;
  for (const auto& [i, v] : entries_) s += std::abs(v);
  return s;
}

double SparseVector::l2_norm() const {
  double s = 0.0;
  for (const auto& [i, v] : entries_) s += v * v;
  return std::sqrt(s);
}

double SparseVector::linf_norm() const {
  double s = 0.0;
  for (const auto& [i, v] : entries_) s = std::max(s, std::abs(v));
  return s;
}

PointSet::PointSet(std::vector<SparseVector> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("point set must be non-empty");
  IndexSet ambient;
  for (const auto& p : points_) ambient = ambient.union_with(p.support());
  ambient_ = std::move(ambient);
}

PointSet::PointSet(std::vector<SparseVector> points, IndexSet ambient)
    : points_(std::move(points)), ambient_(std::move(ambient)) {
  if (points_.empty()) throw DomainError("point set must be non-empty");
  for (const auto& p : points_) {
    if (!p.support().is_subset_of(ambient_)) {
      throw DomainError("point support lies outside the ambient index set");
    }
  }
}

IndexSet PointSet::union_support() const {
  IndexSet s;
  for (const auto& p : points_) s = s.union_with(p.support());
  return s;
}

PointSet PointSet::translated(const SparseVector& shift) const {
  std::vector<SparseVector> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.minus(shift));
  return PointSet(std::move(out), ambient_.union_with(shift.support()));
}

PointSet PointSet::scaled(double factor) const {
  std::vector<SparseVector> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.scaled(factor));
  return PointSet(std::move(out), ambient_);
}

double restricted_l2_distance(const SparseVector& s, const SparseVector& t, const IndexSet& J) {
  double sum = 0.0;
  merge_entries(s.entries(), t.entries(), [&](int i, double x, double y) {
    if (J.contains(i)) {
      const double d = x - y;
      sum += d * d;
    }
  });
  return std::sqrt(sum);
}

double linf_distance(const SparseVector& s, const SparseVector& t) {
  double m = 0.0;
  merge_entries(s.entries(), t.entries(),
                [&](int, double x, double y) { m = std::max(m, std::abs(x - y)); });
  return m;
}

double diameter(const PointSet& T, const Metric& metric) {
  double best = 0.0;
  for (std::size_t a = 0; a < T.size(); ++a) {
    for (std::size_t b = a + 1; b < T.size(); ++b) {
      best = std::max(best, metric(T[a], T[b]));
    }
  }
  return best;
}

double diameter(const PointSet& T, const std::vector<int>& ids, const Metric& metric) {
  double best = 0.0;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      best = std::max(best, metric(T[static_cast<std::size_t>(ids[a])],
                                   T[static_cast<std::size_t>(ids[b])]));
    }
  }
  return best;
}

}  // namespace bernproc
