#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "syt/big_count.hpp"
#include "syt/count_table.hpp"

namespace syt {

enum class Family {
  TwoRowSquare,  // R_{(n,n)}^d(k)
  ThreeRow,      // R_{(n,m,1)}^d(k,c), including m = n
};

/// Memo key "family:n,m,d,k,c". Unused fields are 0 (c for two-row keys);
/// two-row keys carry m = n.
struct MemoKey {
  Family family = Family::TwoRowSquare;
  int n = 0;
  int m = 0;
  int d = 0;
  int k = 0;
  int c = 0;

  auto operator<=>(const MemoKey&) const = default;

  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on bad input.
  static MemoKey parse(std::string_view text);
};

/// Write-once map from MemoKey to count. Lookups and inserts are safe to
/// interleave from several threads; re-inserting an existing key with the
/// same value is a no-op, with a different value a std::logic_error.
class MemoTable {
 public:
  /// With a limit, inserts beyond `limit` entries are dropped.
  explicit MemoTable(std::optional<std::size_t> limit = std::nullopt) : limit_(limit) {}

  std::optional<BigCount> find(const MemoKey& key) const;
  void insert(const MemoKey& key, const BigCount& value);
  std::size_t size() const;
  void clear();

  /// JSON object {"family:n,m,d,k,c": "decimal count", ...}.
  std::string dump_json() const;
  /// Merges a dump produced by dump_json.
  void load_json(std::string_view text);

 private:
  mutable std::shared_mutex mutex_;
  std::map<MemoKey, BigCount> values_;
  std::optional<std::size_t> limit_;
};

struct SolverOptions {
  bool memoize = true;
  std::optional<std::size_t> memo_limit;
  /// Evaluate every (n,n,1) case whose guard holds, not only the first,
  /// and record any disagreement.
  bool check_overlaps = false;
};

/// Values of all matching (n,n,1) cases at one point, when they differ.
struct OverlapFinding {
  int n = 0;
  int d = 0;
  int k = 0;
  int c = 0;
  std::vector<std::pair<int, BigCount>> case_values;  // (case number 1..6, value)
};

/// Memoized evaluation of the descent recursions:
///
///  * (n,n): appending a column to a tableau of shape (n-1,n-1),
///      R^d(k) = R'^d(k-1) + sum_{a<k-1} R'^{d-1}(a),  R_{(1,1)}^1(1) = 1.
///  * (n,m,1) with m < n: recursion on n-1 until m = n.
///  * (n,n,1): six-case recursion on (n-1,n-1,1), R_{(1,1,1)}^2(1,3) = 1.
///
/// Any point outside the necessary conditions is 0 before recursing.
class RecurrenceSolver {
 public:
  explicit RecurrenceSolver(SolverOptions options = {});

  BigCount r_nn_dk(int n, int d, int k);
  BigCount r_nm1(int n, int m, int d, int k, int c);
  BigCount r_nn1(int n, int d, int k, int c);

  /// Refined (d, k, c) table of shape (n, m, 1).
  CountTable r_nm1_refined(int n, int m);
  /// Descent distribution of shape (n, m, 1), summed over all (k, c).
  CountTable r_nm1_distribution(int n, int m);

  /// Refined (d, k) table of shape (n, m), from the (n,n) recursion and the
  /// extra descent at k = n+m.
  CountTable two_row_refined(int n, int m);
  CountTable two_row_distribution(int n, int m);

  MemoTable& memo() { return memo_; }
  const SolverOptions& options() const { return options_; }
  std::vector<OverlapFinding> overlap_disagreements() const;
  /// Points where more than one (n,n,1) case matched (check_overlaps only).
  std::size_t overlap_points() const;

 private:
  BigCount r_nn1_cases(int n, int d, int k, int c);

  SolverOptions options_;
  MemoTable memo_;
  mutable std::mutex findings_mutex_;
  std::vector<OverlapFinding> findings_;
  std::size_t overlap_points_ = 0;
};

/// Free-function forms backed by one process-wide memoized solver.
BigCount r_nn_dk_rec(int n, int d, int k);
BigCount r_nm1_rec(int n, int m, int d, int k, int c);
BigCount r_nn1_rec(int n, int d, int k, int c);
CountTable r_nm1_distribution(int n, int m);

RecurrenceSolver& shared_solver();

}  // namespace syt
