#include "syt/document.hpp"

#include <stdexcept>

#include "json.hpp"

namespace syt {

using ordered_json = nlohmann::ordered_json;

bool OutputDocument::same_result(const OutputDocument& other) const {
  return shape == other.shape && statistic == other.statistic && rows == other.rows &&
         total == other.total;
}

OutputDocument make_document(const std::string& statistic, const std::string& method,
                             const CountTable& table) {
  OutputDocument doc{table.shape().to_string(), statistic, method, {}, table.total()};
  for (const auto& [key, count] : table.entries()) {
    OutputRow row{{{"d", key.d}}, count};
    if (key.k) row.key.push_back({"k", *key.k});
    if (key.c) row.key.push_back({"c", *key.c});
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

OutputDocument make_maj_document(const Shape& shape, const std::string& method,
                                 const QPolynomial& gf) {
  OutputDocument doc{shape.to_string(), "maj", method, {}, 0};
  for (long e = 0; e <= gf.degree(); ++e) {
    const BigCount c = gf.coefficient(e);
    if (c == 0) continue;
    doc.rows.push_back({{{"maj", e}}, c});
    doc.total += c;
  }
  return doc;
}

namespace {

std::string key_text(const std::vector<KeyField>& key) {
  std::string out;
  for (const auto& field : key) {
    if (!out.empty()) out += ' ';
    out += field.name + '=' + std::to_string(field.value);
  }
  return out;
}

std::string render_text(const OutputDocument& doc) {
  if (doc.statistic == "count") return doc.total.str() + '\n';
  std::string out = "# shape=" + doc.shape + " statistic=" + doc.statistic +
                    " method=" + doc.method + '\n';
  for (const auto& row : doc.rows) out += key_text(row.key) + ' ' + row.count.str() + '\n';
  out += "total " + doc.total.str() + '\n';
  return out;
}

std::string render_csv(const OutputDocument& doc) {
  std::string header;
  if (!doc.rows.empty()) {
    for (const auto& field : doc.rows.front().key) header += field.name + ',';
  } else if (doc.statistic == "maj") {
    header = "maj,";
  } else if (doc.statistic != "count") {
    header = "d,";
  }
  std::string out = header + "count\n";
  for (const auto& row : doc.rows) {
    for (const auto& field : row.key) out += std::to_string(field.value) + ',';
    out += row.count.str() + '\n';
  }
  return out;
}

}  // namespace

std::string to_json(const OutputDocument& doc) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.rows) {
    ordered_json key = ordered_json::object();
    for (const auto& field : row.key) key[field.name] = field.value;
    rows.push_back({{"key", key}, {"count", row.count.str()}});
  }
  const ordered_json out = {{"shape", doc.shape},   {"statistic", doc.statistic},
                            {"method", doc.method}, {"rows", rows},
                            {"total", doc.total.str()}};
  return out.dump(2);
}

OutputDocument document_from_json(std::string_view text) {
  try {
    const auto in = ordered_json::parse(text);
    OutputDocument doc;
    doc.shape = in.at("shape").get<std::string>();
    doc.statistic = in.at("statistic").get<std::string>();
    doc.method = in.at("method").get<std::string>();
    BigCount sum = 0;
    for (const auto& row : in.at("rows")) {
      OutputRow parsed;
      for (const auto& [name, value] : row.at("key").items()) {
        parsed.key.push_back({name, value.get<long>()});
      }
      parsed.count = parse_decimal(row.at("count").get<std::string>());
      sum += parsed.count;
      doc.rows.push_back(std::move(parsed));
    }
    doc.total = parse_decimal(in.at("total").get<std::string>());
    if (doc.total != sum) {
      throw std::invalid_argument("document total " + doc.total.str() +
                                  " differs from the row sum " + sum.str());
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed output document: ") + e.what());
  }
}

std::string render(const OutputDocument& doc, Format format) {
  switch (format) {
    case Format::Text:
      return render_text(doc);
    case Format::Csv:
      return render_csv(doc);
    case Format::Json:
      return to_json(doc) + '\n';
  }
  return {};
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

}  // namespace syt
