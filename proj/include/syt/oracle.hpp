#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "syt/count_table.hpp"
#include "syt/core.hpp"
#include "syt/qseries.hpp"

namespace syt {

/// Largest shape the brute-force oracle enumerates unless told otherwise.
inline constexpr int kDefaultOracleCap = 16;
/// Entries are tracked in a 64-bit mask, so no cap may exceed this.
inline constexpr int kMaxOracleCap = 63;

class SizeCapExceeded : public std::runtime_error {
 public:
  SizeCapExceeded(int size, int cap);
  int cap() const { return cap_; }

 private:
  int cap_;
};

/// Lazy stream over every standard Young tableau of a shape, in
/// lexicographic order of the row reading word (rows top to bottom).
///
/// Cells are filled in row-major order with the smallest admissible value
/// first. A candidate is admissible when it exceeds its left and upper
/// neighbours and the partial filling still extends to a full tableau;
/// extendability is decided by greedily completing the lattice word
/// (row index of 1, 2, ..., n), so the search never reaches a dead end.
class SytEnumerator {
 public:
  explicit SytEnumerator(Shape shape, int cap = kDefaultOracleCap);

  /// Next tableau, or nullopt once the stream is exhausted.
  std::optional<Tableau> next();

  /// Advances without materializing a Tableau; false once exhausted.
  /// After a true return, row_of_value() and values() describe the tableau
  /// that next() would have returned.
  bool step();

  /// Index v holds the 0-based row of entry v (index 0 unused).
  const std::vector<int>& row_of_value() const { return row_of_value_; }
  /// Entries in row-major cell order.
  const std::vector<int>& values() const { return values_; }

  const Shape& shape() const { return shape_; }

 private:
  bool extendable(int cell_row, int value) const;
  bool advance(std::size_t position);
  Tableau current() const;

  Shape shape_;
  std::vector<Cell> cells_;          // row-major
  std::vector<int> values_;          // value per cell, 0 = unfilled
  std::vector<int> row_of_value_;    // 0-based row per value, -1 = free
  std::uint64_t used_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Visits tableaux in canonical order until `visit` returns false.
void for_each_syt(const Shape& shape, const std::function<bool(const Tableau&)>& visit,
                  int cap = kDefaultOracleCap);

/// All tableaux of the shape, in canonical order.
std::vector<Tableau> enumerate_syt(const Shape& shape, int cap = kDefaultOracleCap);

/// Descent-number distribution by exhaustion (keys carry d only).
CountTable brute_des_distribution(const Shape& shape, int cap = kDefaultOracleCap);

/// Refined counts keyed by (d, k) for two-row shapes and (d, k, c) for
/// shapes (n, m, 1). Throws DomainError for any other shape.
CountTable brute_refined(const Shape& shape, int cap = kDefaultOracleCap);

/// Sum of q^maj(T) over all tableaux of the shape.
QPolynomial brute_maj_gf(const Shape& shape, int cap = kDefaultOracleCap);

}  // namespace syt
