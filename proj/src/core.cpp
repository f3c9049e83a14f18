#include "syt/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace syt {
namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

int parse_positive(std::string_view token, std::string_view context, std::string_view grammar) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end || value < 1) {
    throw DomainError("'" + std::string(token) + "' is not a positive integer in '" +
                      std::string(context) + "'; expected " + std::string(grammar));
  }
  return value;
}

}  // namespace

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing: " + to_string());
    }
    size_ += parts_[i];
  }
}

Shape Shape::parse(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) {
    throw DomainError("empty shape string; expected INT(,INT)* e.g. \"4,2,1\"");
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    parts.push_back(parse_positive(body.substr(start, comma - start), body, "INT(,INT)* e.g. \"4,2,1\""));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend())) {
    throw DomainError("shape '" + std::string(body) +
                      "' is not weakly decreasing; expected INT(,INT)* e.g. \"4,2,1\"");
  }
  return Shape(std::move(parts));
}

int Shape::row_length(int i) const {
  return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Shape::column_length(int j) const {
  if (j < 1) return 0;
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                        [j](int part) { return part >= j; }));
}

bool Shape::contains(Cell cell) const {
  return cell.row >= 1 && cell.row <= rows() && cell.col >= 1 &&
         cell.col <= row_length(cell.row);
}

bool Shape::is_hook() const { return !empty() && row_length(2) <= 1; }

std::string Shape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Shape conjugate(const Shape& shape) {
  std::vector<int> columns;
  for (int j = 1; j <= shape.row_length(1); ++j) columns.push_back(shape.column_length(j));
  return Shape(std::move(columns));
}

int hook_length(const Shape& shape, Cell cell) {
  if (!shape.contains(cell)) {
    throw DomainError("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                      ") lies outside shape (" + shape.to_string() + ")");
  }
  return shape.row_length(cell.row) + shape.column_length(cell.col) - cell.row - cell.col + 1;
}

BigCount syt_count(const Shape& shape) {
  BigCount hooks = 1;
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) hooks *= hook_length(shape, {i, j});
  }
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(factorial(shape.size()), hooks, quotient, remainder);
  if (remainder != 0) {
    throw IntegralityError("hook product does not divide n! for shape (" + shape.to_string() +
                           ")");
  }
  return quotient;
}

std::vector<Shape> partitions_of(int n) {
  std::vector<Shape> result;
  if (n < 0) return result;
  if (n == 0) {
    result.emplace_back();
    return result;
  }
  // Standard successor rule on the reverse-lexicographic order.
  std::vector<int> parts{n};
  while (true) {
    result.emplace_back(parts);
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    const int part = --parts.back();
    int rest = ones + 1;
    while (rest > part) {
      parts.push_back(part);
      rest -= part;
    }
    if (rest > 0) parts.push_back(rest);
  }
  return result;
}

bool is_standard(const Shape& shape, const Filling& rows) {
  if (static_cast<int>(rows.size()) != shape.rows()) return false;
  const int n = shape.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i < shape.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != shape.row_length(i + 1)) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int entry = row[j];
      if (entry < 1 || entry > n || seen[static_cast<std::size_t>(entry)]) return false;
      seen[static_cast<std::size_t>(entry)] = true;
      if (j > 0 && row[j - 1] >= entry) return false;
      if (i > 0 && rows[static_cast<std::size_t>(i - 1)][j] >= entry) return false;
    }
  }
  return true;
}

Tableau::Tableau(Shape shape, Filling rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (!is_standard(shape_, rows_)) {
    throw DomainError("not a standard Young tableau of shape (" + shape_.to_string() +
                      "): " + to_string());
  }
}

namespace {

Shape shape_of(const Filling& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) {
    if (row.empty()) throw DomainError("tableau rows must be non-empty");
    if (!parts.empty() && static_cast<int>(row.size()) > parts.back()) {
      throw DomainError("tableau row lengths must be weakly decreasing");
    }
    parts.push_back(static_cast<int>(row.size()));
  }
  return Shape(std::move(parts));
}

}  // namespace

Tableau::Tableau(Filling rows) : Tableau(shape_of(rows), rows) {}

Tableau Tableau::parse(std::string_view text) {
  Filling rows;
  std::size_t start = 0;
  const auto body = trim(text);
  if (body.empty()) return Tableau(Filling{});
  while (true) {
    const auto slash = body.find('/', start);
    const auto chunk = body.substr(start, slash - start);
    std::vector<int> row;
    std::istringstream tokens{std::string(chunk)};
    std::string token;
    while (tokens >> token) row.push_back(parse_positive(token, body, "rows of INTs separated by '/'"));
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows));
}

int Tableau::at(Cell cell) const {
  if (!shape_.contains(cell)) throw DomainError("cell outside tableau");
  return rows_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)];
}

std::vector<int> Tableau::row_of_entries() const {
  std::vector<int> row_of(static_cast<std::size_t>(size()) + 1, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (int entry : rows_[i]) row_of[static_cast<std::size_t>(entry)] = static_cast<int>(i) + 1;
  }
  return row_of;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(size()));
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += " / ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

Tableau transpose(const Tableau& tableau) {
  const Shape transposed = conjugate(tableau.shape());
  Filling rows(static_cast<std::size_t>(transposed.rows()));
  for (const auto& row : tableau.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) rows[j].push_back(row[j]);
  }
  return Tableau(transposed, std::move(rows));
}

DescentStats descent_stats(const Tableau& tableau) {
  DescentStats stats;
  const auto row_of = tableau.row_of_entries();
  for (int i = 1; i < tableau.size(); ++i) {
    if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) {
      stats.descent_set.push_back(i);
      stats.maj += i;
    }
  }
  stats.des = static_cast<int>(stats.descent_set.size());
  return stats;
}

}  // namespace syt
