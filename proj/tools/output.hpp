#pragma once

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace wigner::cli {

enum class Format { csv, json };

//! Decimal with 12 significant digits.
inline std::string format_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

//! Value rounded to 12 significant digits, so JSON output matches CSV.
inline double round12(double value)
{
    return std::strtod(format_number(value).c_str(), nullptr);
}

inline std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

/// Rows of already-formatted cells under a fixed header.
class CsvTable
{
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    class Row
    {
      public:
        Row& add(double value)
        {
            cells_.push_back(format_number(value));
            return *this;
        }
        Row& add(long long value)
        {
            cells_.push_back(std::to_string(value));
            return *this;
        }
        Row& add(int value) { return add(static_cast<long long>(value)); }
        Row& add(std::size_t value) { return add(static_cast<long long>(value)); }
        Row& add(bool value)
        {
            cells_.push_back(value ? "true" : "false");
            return *this;
        }
        Row& add(std::string_view text)
        {
            cells_.push_back(csv_field(text));
            return *this;
        }
        Row& add(const char* text) { return add(std::string_view(text)); }

      private:
        friend class CsvTable;
        std::vector<std::string> cells_;
    };

    Row& row()
    {
        rows_.emplace_back();
        return rows_.back();
    }

    void write(std::ostream& os) const
    {
        write_line(os, header_);
        for (const auto& r : rows_) {
            write_line(os, r.cells_);
        }
    }

  private:
    static void write_line(std::ostream& os, const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    }

    std::vector<std::string> header_;
    std::vector<Row> rows_;
};

//! Top-level JSON document: {"params", "results", "residuals"}.
inline void write_json(std::ostream& os, nlohmann::ordered_json params,
                       nlohmann::ordered_json results, nlohmann::ordered_json residuals)
{
    nlohmann::ordered_json doc;
    doc["params"] = std::move(params);
    doc["results"] = std::move(results);
    doc["residuals"] = std::move(residuals);
    os << doc.dump(2) << '\n';
}

}  // namespace wigner::cli
