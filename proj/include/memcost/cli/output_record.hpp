#pragma once

// Tabular command output rendered as CSV (header row, LF endings) or as a
// JSON array of flat objects sharing the same keys.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "memcost/detail/number_format.hpp"

namespace memcost::cli {

enum class Format { Csv, Json };

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

class OutputRecord {
 public:
  explicit OutputRecord(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<Cell> row) {
    if (row.size() != header_.size())
      throw std::logic_error("row has " + std::to_string(row.size()) + " cells for " +
                             std::to_string(header_.size()) + " columns");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  void write(std::ostream& out, Format format) const {
    if (format == Format::Csv) {
      write_csv(out);
    } else {
      write_json(out);
    }
  }

 private:
  static std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + '"';
  }

  static std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, std::monostate>) {
            return "";
          } else if constexpr (std::is_same_v<V, bool>) {
            return v ? "true" : "false";
          } else if constexpr (std::is_same_v<V, std::int64_t>) {
            return std::to_string(v);
          } else if constexpr (std::is_same_v<V, double>) {
            return detail::format_number(v);
          } else {
            return v;
          }
        },
        cell);
  }

  static nlohmann::ordered_json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, std::monostate>) {
            return nullptr;
          } else {
            return v;
          }
        },
        cell);
  }

  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << csv_field(header_[i]);
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << csv_field(cell_text(row[i]));
      out << '\n';
    }
  }

  void write_json(std::ostream& out) const {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[header_[i]] = cell_json(row[i]);
      array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace memcost::cli
