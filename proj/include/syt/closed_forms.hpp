#pragma once

#include <string>
#include <variant>
#include <vector>

#include "syt/big_count.hpp"
#include "syt/count_table.hpp"

namespace syt {

/// Parameters of a refined count for the shape (n, m, 1): d descents,
/// k at the end of the first row, c in the third-row cell.
struct ThreeRowParams {
  int n = 0;
  int m = 0;
  int d = 0;
  int k = 0;
  int c = 0;

  /// n >= m >= 1, n <= k <= n+m+1, 3 <= c <= n+m+1, 2 <= d <= m+1, c != k.
  /// Every nonzero count satisfies these.
  bool satisfies_necessary_conditions() const;

  std::string to_string() const;

  auto operator<=>(const ThreeRowParams&) const = default;
};

/// Outcome of r_nm1_reduce when k > c: no reduction identity applies.
struct NotCovered {
  bool operator==(const NotCovered&) const = default;
};

using Reduction = std::variant<BigCount, NotCovered>;

/// Hook (n, 1^m): every tableau has exactly m descents, and there are
/// C(n+m-1, m) of them.
CountTable hook_distribution(int n, int m);

/// Tableaux of shape (n, n) with d descents and k at the end of the first
/// row. Zero outside n <= k < 2n, 1 <= d <= n.
BigCount r_nn_dk(int n, int d, int k);

/// Narayana number (1/d) C(n-1, d-1) C(n, d-1); zero outside 1 <= d <= n.
BigCount r_nn_d(int n, int d);

/// Tableaux of shape (n, m) with d descents and k at the end of the first
/// row, through the (n, n) counts: the same count when k < n+m, one extra
/// descent when k = n+m.
BigCount r_nm_dk(int n, int m, int d, int k);

/// (n-m+1)/d C(m-1, d-1) C(n, d-1) for 1 <= d <= m <= n, zero otherwise.
BigCount r_nm_d(int n, int m, int d);

/// Two-row descent distribution assembled from r_nm_d.
CountTable two_row_distribution(int n, int m);

/// Refined (d, k) table for shape (n, m) assembled from r_nm_dk.
CountTable two_row_refined(int n, int m);

/// Counts for (n, m, 1) when c > k, by removing cells to reach a two-row
/// tableau:
///   c = n+m+1      -> R_{(n,m)}^{d-1}(k)
///   k = c-1        -> R_{(n,n)}^{d}(k)
///   k < c-1        -> R_{(n,n)}^{d-1}(k)
/// The maximal-c branch wins when several apply. Returns 0 when the
/// necessary conditions fail and NotCovered when k > c.
Reduction r_nm1_reduce(const ThreeRowParams& p);

enum class ReductionBranch { MaximalC, KIsCMinusOne, KBelowCMinusOne };

std::string to_string(ReductionBranch branch);

struct BranchValue {
  ReductionBranch branch;
  BigCount value;
};

/// Every reduction branch whose guard holds at p, evaluated without the
/// necessary-condition short-circuit. Used to map where each identity holds
/// and whether simultaneously applicable branches agree.
std::vector<BranchValue> reduce_all_branches(const ThreeRowParams& p);

}  // namespace syt
