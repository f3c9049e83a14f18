#pragma once

#include <map>
#include <optional>
#include <string>

#include "syt/big_count.hpp"
#include "syt/core.hpp"

namespace syt {

/// Key of a (possibly refined) descent count: d descents, optionally with
/// k at the end of the first row and c in the single third-row cell.
struct RefinedKey {
  int d = 0;
  std::optional<int> k;
  std::optional<int> c;

  auto operator<=>(const RefinedKey&) const = default;

  std::string to_string() const;
};

/// Exact counts keyed by RefinedKey. Zero counts are never stored.
class CountTable {
 public:
  using Entries = std::map<RefinedKey, BigCount>;

  CountTable() = default;
  explicit CountTable(Shape shape) : shape_(std::move(shape)) {}

  const Shape& shape() const { return shape_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Adds `count` to the entry at `key`; zero additions leave no trace.
  void add(const RefinedKey& key, const BigCount& count);
  /// 0 for absent keys.
  BigCount at(const RefinedKey& key) const;
  BigCount total() const;

  /// Sums out k and c, leaving a table keyed by d alone.
  CountTable marginal() const;

  bool operator==(const CountTable&) const = default;

 private:
  Shape shape_;
  Entries entries_;
};

}  // namespace syt
