#include "syt/recursion.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

#include "syt/closed_forms.hpp"

namespace syt {
namespace {

constexpr std::string_view kTwoRowTag = "two-row-square";
constexpr std::string_view kThreeRowTag = "three-row";

bool three_row_possible(int n, int m, int d, int k, int c) {
  return ThreeRowParams{n, m, d, k, c}.satisfies_necessary_conditions();
}

}  // namespace

std::string MemoKey::to_string() const {
  std::string out(family == Family::TwoRowSquare ? kTwoRowTag : kThreeRowTag);
  out += ':';
  out += std::to_string(n) + ',' + std::to_string(m) + ',' + std::to_string(d) + ',' +
         std::to_string(k) + ',' + std::to_string(c);
  return out;
}

MemoKey MemoKey::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("memo key without family tag: " + std::string(text));
  }
  MemoKey key;
  const auto tag = text.substr(0, colon);
  if (tag == kTwoRowTag) {
    key.family = Family::TwoRowSquare;
  } else if (tag == kThreeRowTag) {
    key.family = Family::ThreeRow;
  } else {
    throw std::invalid_argument("unknown memo family '" + std::string(tag) + "'");
  }
  int* fields[] = {&key.n, &key.m, &key.d, &key.k, &key.c};
  const char* ptr = text.data() + colon + 1;
  const char* end = text.data() + text.size();
  for (std::size_t i = 0; i < 5; ++i) {
    auto [next, ec] = std::from_chars(ptr, end, *fields[i]);
    if (ec != std::errc()) throw std::invalid_argument("bad memo key: " + std::string(text));
    ptr = next;
    if (i < 4) {
      if (ptr == end || *ptr != ',') {
        throw std::invalid_argument("bad memo key: " + std::string(text));
      }
      ++ptr;
    }
  }
  if (ptr != end) throw std::invalid_argument("bad memo key: " + std::string(text));
  return key;
}

std::optional<BigCount> MemoTable::find(const MemoKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const MemoKey& key, const BigCount& value) {
  std::unique_lock lock(mutex_);
  const auto it = values_.find(key);
  if (it != values_.end()) {
    if (it->second != value) {
      throw std::logic_error("memo key " + key.to_string() + " rewritten from " +
                             it->second.str() + " to " + value.str());
    }
    return;
  }
  if (limit_ && values_.size() >= *limit_) return;
  values_.emplace(key, value);
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

std::string MemoTable::dump_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  std::shared_lock lock(mutex_);
  for (const auto& [key, value] : values_) doc[key.to_string()] = value.str();
  return doc.dump(2);
}

void MemoTable::load_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("memo dump is not valid JSON");
  if (!doc.is_object()) throw std::invalid_argument("memo dump must be a JSON object");
  for (const auto& [key_text, value] : doc.items()) {
    if (!value.is_string()) {
      throw std::invalid_argument("memo value for " + key_text + " must be a decimal string");
    }
    insert(MemoKey::parse(key_text), parse_decimal(value.get<std::string>()));
  }
}

RecurrenceSolver::RecurrenceSolver(SolverOptions options)
    : options_(options), memo_(options.memo_limit) {}

BigCount RecurrenceSolver::r_nn_dk(int n, int d, int k) {
  if (n < 1 || d < 1 || d > n || k < n || k >= 2 * n) return 0;
  if (n == 1) return 1;  // R_{(1,1)}^1(1)
  const MemoKey key{Family::TwoRowSquare, n, n, d, k, 0};
  if (options_.memoize) {
    if (auto hit = memo_.find(key)) return *hit;
  }
  BigCount value = r_nn_dk(n - 1, d, k - 1);
  // Entries at the end of the first row of an (n-1,n-1) tableau are >= n-1.
  for (int a = std::max(1, n - 1); a < k - 1; ++a) value += r_nn_dk(n - 1, d - 1, a);
  if (options_.memoize) memo_.insert(key, value);
  return value;
}

BigCount RecurrenceSolver::r_nm1(int n, int m, int d, int k, int c) {
  if (!three_row_possible(n, m, d, k, c)) return 0;
  if (m == n) return r_nn1(n, d, k, c);
  const MemoKey key{Family::ThreeRow, n, m, d, k, c};
  if (options_.memoize) {
    if (auto hit = memo_.find(key)) return *hit;
  }
  const auto prev = [&](int dd, int kk, int cc) { return r_nm1(n - 1, m, dd, kk, cc); };
  const auto prev_sum = [&](int dd, int below, int cc) {
    BigCount sum = 0;
    for (int a = std::max(1, n - 1); a < below; ++a) sum += prev(dd, a, cc);
    return sum;
  };
  BigCount value;
  if (k < c - 1) {
    value = prev(d, k - 1, c - 1) + prev_sum(d - 1, k - 1, c - 1);
  } else if (k == c - 1) {
    value = prev_sum(d, k, c - 1);
  } else if (k < n + m + 1) {  // c < k
    value = prev(d, k - 1, c) + prev_sum(d - 1, k - 1, c);
  } else {  // k = n+m+1: sum over every first-row end of the smaller shape
    value = prev_sum(d, n + m + 1, c);
  }
  if (options_.memoize) memo_.insert(key, value);
  return value;
}

BigCount RecurrenceSolver::r_nn1(int n, int d, int k, int c) {
  if (!three_row_possible(n, n, d, k, c)) return 0;
  // Cell (1,n) sits above cell (2,n), so k <= 2n.
  if (k > 2 * n) return 0;
  if (n == 1) return (d == 2 && k == 1 && c == 3) ? 1 : 0;
  const MemoKey key{Family::ThreeRow, n, n, d, k, c};
  if (options_.memoize) {
    if (auto hit = memo_.find(key)) return *hit;
  }
  BigCount value = r_nn1_cases(n, d, k, c);
  if (options_.memoize) memo_.insert(key, value);
  return value;
}

BigCount RecurrenceSolver::r_nn1_cases(int n, int d, int k, int c) {
  const auto prev = [&](int dd, int kk, int cc) { return r_nn1(n - 1, dd, kk, cc); };
  const auto prev_sum = [&](int dd, int below, int cc) {
    BigCount sum = 0;
    for (int a = std::max(1, n - 1); a < below; ++a) sum += prev(dd, a, cc);
    return sum;
  };
  std::vector<std::pair<int, BigCount>> matches;
  const auto try_case = [&](int number, bool guard, auto&& evaluate) {
    if (!guard) return false;
    if (matches.empty() || options_.check_overlaps) matches.emplace_back(number, evaluate());
    return !options_.check_overlaps;
  };
  // Listed order; the first matching case defines the value.
  try_case(1, k == 2 * n, [&] { return prev_sum(d - 1, k, c); }) ||
      try_case(2, c == k + 1, [&] { return prev_sum(d, k, c - 1); }) ||
      try_case(3, k == 2 * n - 1 && c == 2 * n + 1, [&] { return prev_sum(d - 1, k, c - 2); }) ||
      try_case(4, c == 2 * n + 1 && k != 2 * n - 1 && k != 2 * n,
               [&] { return prev(d, k - 1, c - 2) + prev_sum(d - 1, k - 1, c - 2); }) ||
      try_case(5, k + 1 < c && c < 2 * n + 1,
               [&] { return prev(d, k - 1, c - 1) + prev_sum(d - 1, k - 1, c - 1); }) ||
      try_case(6, c < k && k < 2 * n,
               [&] { return prev(d, k - 1, c) + prev_sum(d - 1, k - 1, c); });
  if (matches.empty()) {
    throw std::logic_error("no (n,n,1) recursion case matches n=" + std::to_string(n) +
                           ",d=" + std::to_string(d) + ",k=" + std::to_string(k) +
                           ",c=" + std::to_string(c));
  }
  const bool disagree =
      std::any_of(matches.begin(), matches.end(),
                  [&](const auto& match) { return match.second != matches.front().second; });
  if (matches.size() > 1) {
    std::lock_guard lock(findings_mutex_);
    ++overlap_points_;
    if (disagree) findings_.push_back({n, d, k, c, matches});
  }
  return matches.front().second;
}

CountTable RecurrenceSolver::r_nm1_refined(int n, int m) {
  if (m < 1 || n < m) return {};
  CountTable table{Shape{n, m, 1}};
  for (int d = 2; d <= m + 1; ++d) {
    for (int k = n; k <= n + m + 1; ++k) {
      for (int c = 3; c <= n + m + 1; ++c) table.add(RefinedKey{d, k, c}, r_nm1(n, m, d, k, c));
    }
  }
  return table;
}

CountTable RecurrenceSolver::r_nm1_distribution(int n, int m) {
  return r_nm1_refined(n, m).marginal();
}

CountTable RecurrenceSolver::two_row_refined(int n, int m) {
  if (m < 1 || n < m) return {};
  CountTable table{Shape{n, m}};
  for (int d = 0; d <= m + 1; ++d) {
    for (int k = n; k < n + m; ++k) table.add(RefinedKey{d, k, {}}, r_nn_dk(n, d, k));
    // With k = n+m the tail of the second row adds one fewer descent.
    table.add(RefinedKey{d, n + m, {}}, r_nn_dk(n, d + 1, n + m));
  }
  return table;
}

CountTable RecurrenceSolver::two_row_distribution(int n, int m) {
  return two_row_refined(n, m).marginal();
}

std::size_t RecurrenceSolver::overlap_points() const {
  std::lock_guard lock(findings_mutex_);
  return overlap_points_;
}

std::vector<OverlapFinding> RecurrenceSolver::overlap_disagreements() const {
  std::lock_guard lock(findings_mutex_);
  return findings_;
}

RecurrenceSolver& shared_solver() {
  static RecurrenceSolver solver;
  return solver;
}

BigCount r_nn_dk_rec(int n, int d, int k) { return shared_solver().r_nn_dk(n, d, k); }

BigCount r_nm1_rec(int n, int m, int d, int k, int c) {
  return shared_solver().r_nm1(n, m, d, k, c);
}

BigCount r_nn1_rec(int n, int d, int k, int c) { return shared_solver().r_nn1(n, d, k, c); }

CountTable r_nm1_distribution(int n, int m) { return shared_solver().r_nm1_distribution(n, m); }

}  // namespace syt
