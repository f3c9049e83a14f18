#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syt/big_count.hpp"

namespace syt {

/// Invalid argument in the mathematical sense: a cell outside its shape,
/// a non-standard filling, a malformed shape string.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cell of a Young diagram, 1-based (row i, column j).
struct Cell {
  int row = 1;
  int col = 1;

  auto operator<=>(const Cell&) const = default;
};

/// An integer partition lambda_1 >= ... >= lambda_k >= 1, read as the row
/// lengths of a Young diagram. The default-constructed shape is the empty
/// partition of 0.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);
  Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

  /// Parses "4,2,1". Whitespace around numbers is tolerated.
  static Shape parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// lambda_i, 1-based; 0 for rows past the last.
  int row_length(int i) const;
  /// lambda'_j, the length of column j (1-based).
  int column_length(int j) const;
  bool contains(Cell cell) const;

  /// Hook (n, 1^m): at most one row longer than 1.
  bool is_hook() const;
  bool is_two_row() const { return rows() == 2; }
  /// (n, m, 1) with n >= m >= 1.
  bool is_three_row_one() const { return rows() == 3 && parts_[2] == 1; }

  std::string to_string() const;

  bool operator==(const Shape&) const = default;
  auto operator<=>(const Shape& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Transposed partition; conjugate(conjugate(s)) == s.
Shape conjugate(const Shape& shape);

/// h_{i,j} = lambda_i + lambda'_j - i - j + 1. Throws DomainError for a
/// cell outside the shape.
int hook_length(const Shape& shape, Cell cell);

/// Number of standard Young tableaux of the shape: n! divided exactly by
/// the product of all hook lengths.
BigCount syt_count(const Shape& shape);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Shape> partitions_of(int n);

/// Row-major filling: rows[i][j] is the entry in cell (i+1, j+1).
using Filling = std::vector<std::vector<int>>;

/// True iff the filling matches the shape, is a bijection onto 1..n and
/// increases strictly along rows and down columns.
bool is_standard(const Shape& shape, const Filling& rows);

/// A standard Young tableau. Standardness is checked on construction,
/// so every Tableau value is standard.
class Tableau {
 public:
  /// Throws DomainError if the filling is not a standard tableau of `shape`.
  Tableau(Shape shape, Filling rows);
  /// Infers the shape from the row lengths.
  explicit Tableau(Filling rows);

  /// Parses "1 3 6 7 / 2 4 8 / 5 / 9".
  static Tableau parse(std::string_view text);

  const Shape& shape() const { return shape_; }
  const Filling& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int at(Cell cell) const;

  /// 1-based row holding each entry; index 0 is unused.
  std::vector<int> row_of_entries() const;
  /// Rows concatenated top to bottom.
  std::vector<int> reading_word() const;

  std::string to_string() const;

  bool operator==(const Tableau&) const = default;

 private:
  Shape shape_;
  Filling rows_;
};

/// Reflection across the main diagonal.
Tableau transpose(const Tableau& tableau);

struct DescentStats {
  std::vector<int> descent_set;  // ascending, subset of 1..n-1
  int des = 0;
  long maj = 0;

  bool operator==(const DescentStats&) const = default;
};

/// Entry i is a descent iff i + 1 sits in a strictly lower row.
DescentStats descent_stats(const Tableau& tableau);

}  // namespace syt
