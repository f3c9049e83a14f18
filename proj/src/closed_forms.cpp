#include "syt/closed_forms.hpp"

namespace syt {

bool ThreeRowParams::satisfies_necessary_conditions() const {
  return n >= m && m >= 1 && k >= n && k <= n + m + 1 && c >= 3 && c <= n + m + 1 && d >= 2 &&
         d <= m + 1 && c != k;
}

std::string ThreeRowParams::to_string() const {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",d=" + std::to_string(d) +
         ",k=" + std::to_string(k) + ",c=" + std::to_string(c);
}

CountTable hook_distribution(int n, int m) {
  if (n < 1 || m < 0) return {};
  std::vector<int> parts{n};
  parts.insert(parts.end(), static_cast<std::size_t>(m), 1);
  CountTable table{Shape(std::move(parts))};
  table.add(RefinedKey{m, {}, {}}, binomial(n + m - 1, m));
  return table;
}

BigCount r_nn_dk(int n, int d, int k) {
  if (n < 1 || k < n || k >= 2 * n) return 0;
  if (d == 1) return k == n ? 1 : 0;
  if (d < 2 || k < n + d - 1) return 0;
  const Rational value = Rational(2 * n - k, d - 1) * binomial(k - n - 1, d - 2) *
                         binomial(n - 1, d - 2);
  return certify_integer(value, "R_(n,n)^d(k) at n=" + std::to_string(n) +
                                    ",d=" + std::to_string(d) + ",k=" + std::to_string(k));
}

BigCount r_nn_d(int n, int d) {
  if (n < 1 || d < 1 || d > n) return 0;
  const Rational value = Rational(1, d) * binomial(n - 1, d - 1) * binomial(n, d - 1);
  return certify_integer(value, "Narayana number N(" + std::to_string(n) + "," +
                                    std::to_string(d) + ")");
}

BigCount r_nm_dk(int n, int m, int d, int k) {
  if (m < 1 || n < m) return 0;
  if (k < n + m) return r_nn_dk(n, d, k);
  if (k == n + m) return r_nn_dk(n, d + 1, k);
  return 0;
}

BigCount r_nm_d(int n, int m, int d) {
  if (d < 1 || d > m || m > n) return 0;
  const Rational value =
      Rational(n - m + 1, d) * binomial(m - 1, d - 1) * binomial(n, d - 1);
  return certify_integer(value, "R_(n,m)^d at n=" + std::to_string(n) + ",m=" +
                                    std::to_string(m) + ",d=" + std::to_string(d));
}

CountTable two_row_distribution(int n, int m) {
  if (m < 1 || n < m) return {};
  CountTable table{Shape{n, m}};
  for (int d = 1; d <= m; ++d) table.add(RefinedKey{d, {}, {}}, r_nm_d(n, m, d));
  return table;
}

CountTable two_row_refined(int n, int m) {
  if (m < 1 || n < m) return {};
  CountTable table{Shape{n, m}};
  for (int d = 0; d <= m + 1; ++d) {
    for (int k = n; k <= n + m; ++k) table.add(RefinedKey{d, k, {}}, r_nm_dk(n, m, d, k));
  }
  return table;
}

std::string to_string(ReductionBranch branch) {
  switch (branch) {
    case ReductionBranch::MaximalC:
      return "c=n+m+1";
    case ReductionBranch::KIsCMinusOne:
      return "k=c-1";
    case ReductionBranch::KBelowCMinusOne:
      return "k<c-1";
  }
  return "?";
}

std::vector<BranchValue> reduce_all_branches(const ThreeRowParams& p) {
  std::vector<BranchValue> out;
  if (p.k > p.c) return out;
  if (p.c == p.n + p.m + 1) {
    out.push_back({ReductionBranch::MaximalC, r_nm_dk(p.n, p.m, p.d - 1, p.k)});
  }
  if (p.k == p.c - 1) out.push_back({ReductionBranch::KIsCMinusOne, r_nn_dk(p.n, p.d, p.k)});
  if (p.k < p.c - 1) {
    out.push_back({ReductionBranch::KBelowCMinusOne, r_nn_dk(p.n, p.d - 1, p.k)});
  }
  return out;
}

Reduction r_nm1_reduce(const ThreeRowParams& p) {
  if (!p.satisfies_necessary_conditions()) return BigCount(0);
  if (p.k > p.c) return NotCovered{};
  // First applicable branch in the documented order.
  return reduce_all_branches(p).front().value;
}

}  // namespace syt
