#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bernproc/errors.hpp"

namespace bernproc {

/// Sorted, duplicate-free finite set of non-negative coordinate indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Accepts indices in any order; sorts and deduplicates.
  explicit IndexSet(std::vector<int> members);

  static IndexSet range(int count);

  bool contains(int i) const;
  bool is_subset_of(const IndexSet& other) const;
  IndexSet union_with(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const IndexSet& other) const { return members_ == other.members_; }

 private:
  std::vector<int> members_;
};

/// Finitely supported point of l2(I): a sorted (index, coefficient) list.
/// Zero coefficients are never stored.
class SparseVector {
 public:
  SparseVector() = default;
  /// Entries in any order; sorted, merged and zero-pruned on construction.
  explicit SparseVector(std::vector<std::pair<int, double>> entries, std::string id = "");
  SparseVector(std::initializer_list<std::pair<int, double>> entries)
      : SparseVector(std::vector<std::pair<int, double>>(entries)) {}

  static SparseVector unit(int index, double value = 1.0, std::string id = "");

  double get(int index) const;
  const std::vector<std::pair<int, double>>& entries() const { return entries_; }
  const std::string& id() const { return id_; }
  IndexSet support() const;
  std::size_t support_size() const { return entries_.size(); }

  SparseVector plus(const SparseVector& other) const;
  SparseVector minus(const SparseVector& other) const;
  SparseVector scaled(double factor) const;

  double l1_norm() const;
  double l2_norm() const;
  double linf_norm() const;

  /// Exact coordinate-wise equality (used for deduplication, never for set
  /// membership decisions, which go by point identity).
  bool same_coordinates(const SparseVector& other) const { return entries_ == other.entries_; }

 private:
  std::vector<std::pair<int, double>> entries_;
  std::string id_;
};

/// Finite ordered family of points with an explicit ambient index set.
/// The order is part of the value: enumeration and tie-breaking use it.
class PointSet {
 public:
  /// Ambient defaults to the union of supports.
  explicit PointSet(std::vector<SparseVector> points);
  PointSet(std::vector<SparseVector> points, IndexSet ambient);

  std::size_t size() const { return points_.size(); }
  const SparseVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<SparseVector>& points() const { return points_; }
  const IndexSet& ambient() const { return ambient_; }

  IndexSet union_support() const;
  PointSet translated(const SparseVector& shift) const;
  PointSet scaled(double factor) const;

 private:
  std::vector<SparseVector> points_;
  IndexSet ambient_;
};

using Metric = std::function<double(const SparseVector&, const SparseVector&)>;

/// d_J(s,t) = || s_J - t_J ||_2 over the restricted index set J.
double restricted_l2_distance(const SparseVector& s, const SparseVector& t, const IndexSet& J);

/// max_i |s_i - t_i|.
double linf_distance(const SparseVector& s, const SparseVector& t);

/// Max pairwise distance; 0 for singletons.
double diameter(const PointSet& T, const Metric& metric);

/// Same, over a subset of point ids.
double diameter(const PointSet& T, const std::vector<int>& ids, const Metric& metric);

}  // namespace bernproc
