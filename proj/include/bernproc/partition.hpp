#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bernproc/chopping.hpp"
#include "bernproc/core.hpp"

namespace bernproc {

/// Configured stand-ins for the unnamed universal constants L1..L11 plus a
/// log of measured quantities (functional drops, certificate ratios).  The
/// constants are treated as measured outputs: recorded targets use them, but
/// nothing asserts against a fixed value.
class ConstantLedger {
 public:
  ConstantLedger();  // every constant defaults to 1.0

  double get(const std::string& name) const;
  void set(const std::string& name, double value);
  const std::map<std::string, double>& constants() const { return constants_; }

  /// Names of constants whose configured value is not positive (empty when
  /// the ledger is well formed).
  std::vector<std::string> invalid_entries() const;

  struct Measured {
    std::string name;
    double value = 0.0;
    double target = 0.0;
  };
  void record(std::string name, double value, double target);
  const std::vector<Measured>& measured() const { return measured_; }

 private:
  std::map<std::string, double> constants_;
  std::vector<Measured> measured_;
};

/// Evaluation knobs for functional (chopped expected-supremum) queries inside
/// the split operations: exact enumeration within the limit, seeded Monte
/// Carlo beyond it.  Selection queries may use fewer samples than recorded
/// certificates.
struct SplitConfig {
  std::size_t exact_limit = kDefaultExactLimit;
  std::int64_t cert_samples = 4096;
  std::int64_t select_samples = 512;
  std::uint64_t seed = 0;
};

struct SplitResult {
  std::vector<std::vector<int>> blocks;  // point ids, one list per ball/piece
  std::vector<int> remainder;            // ids not covered (may be empty)
};

/// Greedy functional-decrease covering: up to m-1 balls whose chopped
/// diameter is at most L5 * sigma; ball centers maximize the functional over
/// the remaining sigma-balls (ties by point order).  Every small-diameter
/// subset of the remainder has its functional reduced by sigma * sqrt(log m);
/// the reduction is recorded, not asserted.
SplitResult greedy_functional_split(const PointSet& T, const FunctionalParams& params,
                                    std::uint64_t m, double sigma, const ConstantLedger& ledger,
                                    const SplitConfig& cfg, ConstantLedger* record = nullptr);

/// Two-distance covering: at most m pieces of d(J,u,k,j+1)-diameter sigma,
/// centers by farthest-point selection, with the remainder's reduced
/// functional F(., Jp, up, j+2, j+2) recorded against the drop target
/// sigma * sqrt(log m) / L7.  Requires the d(J,u,k,j+2)-diameter of T to be
/// at most sigma / L6 and |u_i - up_i| <= 2 r^-k on Jp.
SplitResult two_distance_split(const PointSet& T, const IndexSet& J, const IndexSet& Jp,
                               const SparseVector& u, const SparseVector& up, int k, int j, int r,
                               std::uint64_t m, double sigma, const ConstantLedger& ledger,
                               const SplitConfig& cfg, ConstantLedger* record = nullptr);

struct PartitionNode {
  std::vector<int> block;  // point ids, in point order
  int level = 0;
  int j = 0;
  int k = 0;
  int p = 0;
  SparseVector u;
  IndexSet J;
  std::optional<SparseVector> pi;
  enum class Kind { Root, Hold, C1, C2, C3 } kind = Kind::Root;
  std::vector<PartitionNode> children;
};

std::string kind_name(PartitionNode::Kind kind);

struct PartitionTree {
  PointSet points;
  int kappa = 2;
  int r = 4;
  int j0 = 0;
  int max_level = 4;
  PartitionNode root;
  ConstantLedger ledger;
};

/// One piece of a trichotomy decomposition of a node's block.
struct TrichotomyPiece {
  std::vector<int> block;
  PartitionNode::Kind kind = PartitionNode::Kind::C3;
  int j = 0;
  int k = 0;
  int p = 0;
  SparseVector u;
  IndexSet J;
};

/// Splits a p = 0 node into at most N_n pieces of kinds C1 / C2 / C3 with
/// their successor states; drop certificates are recorded in the ledger.
std::vector<TrichotomyPiece> trichotomy_split(const PointSet& T, const PartitionNode& node, int n,
                                              int r, const SplitConfig& cfg,
                                              ConstantLedger& ledger);

/// Runs the recursive construction to `max_level` levels below the root.
/// Requires the l2 diameter of T to be at most r^-j0 with r = 2^kappa and
/// kappa >= 2.
PartitionTree build_partition_tree(const PointSet& T, int j0, int kappa, int max_level,
                                   const SplitConfig& cfg = {},
                                   const ConstantLedger& ledger = ConstantLedger());

struct PViolation {
  std::string node_path;
  std::string condition;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

/// Empty iff every node satisfies the structural conditions P1-P9 (with
/// diameters evaluated through the chopped distances) plus the basic tree
/// invariants (counter range, partition closure, level widths).
std::vector<PViolation> check_P_conditions(const PartitionTree& tree);

/// The dominating subsequence V = { m : a_n < a_m alpha^|n-m| for all n != m };
/// the full sum is at most (2 alpha / (alpha - 1)) times the sum over V.
IndexSet smart_subsequence(const std::vector<double>& a, double alpha);

std::string partition_tree_to_json(const PartitionTree& tree);
PartitionTree partition_tree_from_json(const std::string& text);
std::string violations_to_json(const std::vector<PViolation>& violations);

}  // namespace bernproc
