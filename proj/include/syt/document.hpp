#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syt/big_count.hpp"
#include "syt/count_table.hpp"
#include "syt/qseries.hpp"

namespace syt {

enum class Format { Text, Csv, Json };

struct KeyField {
  std::string name;
  long value = 0;

  bool operator==(const KeyField&) const = default;
};

struct OutputRow {
  std::vector<KeyField> key;
  BigCount count;

  bool operator==(const OutputRow&) const = default;
};

/// Result of a counting command, independent of how it is rendered.
/// Counts travel as decimal strings in JSON so no precision is lost.
struct OutputDocument {
  std::string shape;
  std::string statistic;  // count | des | maj | refined
  std::string method;     // formula | recursion | oracle | stanley
  std::vector<OutputRow> rows;
  BigCount total;

  bool operator==(const OutputDocument&) const = default;

  /// Equality ignoring the method field.
  bool same_result(const OutputDocument& other) const;
};

/// Rows keyed by d (and k, c when present); total is the table total.
OutputDocument make_document(const std::string& statistic, const std::string& method,
                             const CountTable& table);

/// Rows keyed by maj, one per nonzero coefficient.
OutputDocument make_maj_document(const Shape& shape, const std::string& method,
                                 const QPolynomial& gf);

std::string render(const OutputDocument& doc, Format format);
std::string to_json(const OutputDocument& doc);
/// Throws std::invalid_argument on anything to_json could not have produced,
/// including a total that differs from the sum of the rows.
OutputDocument document_from_json(std::string_view text);

Format parse_format(std::string_view name);

}  // namespace syt
