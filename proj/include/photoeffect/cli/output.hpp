#ifndef PHOTOEFFECT_CLI_OUTPUT_HPP
#define PHOTOEFFECT_CLI_OUTPUT_HPP

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "../error.hpp"
#include "../units.hpp"

namespace photoeffect::cli
{

enum class Format
{
  csv,
  json,
};

using Null = std::monostate;
using Cell = std::variant<Null, double, std::complex<double>, std::int64_t, bool, std::string>;

struct Column
{
  std::string name;
  units::Dimension dimension = units::Dimension::dimensionless;
};

/// Rows of named cells.  A record is a table with exactly one row that is
/// written as a JSON object instead of an array.
struct OutputTable
{
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  bool record = false;

  void add_column(std::string name, units::Dimension dim = units::Dimension::dimensionless)
  {
    columns.push_back({std::move(name), dim});
  }

  void add_row(std::vector<Cell> row)
  {
    if (row.size() != columns.size()) {
      throw Error(ErrorCode::invalid_argument, "row width does not match the column count");
    }
    rows.push_back(std::move(row));
  }

  /// Copy with a `<name>_si` column after every dimensioned real column.
  OutputTable with_si(const units::PhysicalConstants& pc = units::codata2018) const
  {
    OutputTable out;
    out.record = record;
    std::vector<std::size_t> source;
    std::vector<bool> convert;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out.columns.push_back(columns[c]);
      source.push_back(c);
      convert.push_back(false);
      if (columns[c].dimension != units::Dimension::dimensionless) {
        out.columns.push_back({columns[c].name + "_si", columns[c].dimension});
        source.push_back(c);
        convert.push_back(true);
      }
    }
    for (const auto& row : rows) {
      std::vector<Cell> r;
      for (std::size_t k = 0; k < source.size(); ++k) {
        const Cell& cell = row[source[k]];
        if (convert[k] && std::holds_alternative<double>(cell)) {
          r.emplace_back(units::from_atomic(std::get<double>(cell), out.columns[k].dimension, pc).value);
        } else if (convert[k]) {
          r.emplace_back(Null{});
        } else {
          r.push_back(cell);
        }
      }
      out.rows.push_back(std::move(r));
    }
    return out;
  }
};

namespace detail
{

inline std::string format_real(double x)
{
  return fmt::format("{:.12g}", x);
}

inline bool is_complex_column(const OutputTable& t, std::size_t c)
{
  for (const auto& row : t.rows) {
    if (std::holds_alternative<std::complex<double>>(row[c])) {
      return true;
    }
  }
  return false;
}

inline std::string csv_escape(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  return out + "\"";
}

} // namespace detail

/// Header row, then one line per row; complex cells become `_re`,`_im`
/// columns and reals carry 12 significant digits.
inline void write_csv(std::ostream& os, const OutputTable& t)
{
  std::vector<bool> cplx(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    cplx[c] = detail::is_complex_column(t, c);
    if (c > 0) {
      os << ',';
    }
    if (cplx[c]) {
      os << t.columns[c].name << "_re," << t.columns[c].name << "_im";
    } else {
      os << t.columns[c].name;
    }
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        os << ',';
      }
      const Cell& cell = row[c];
      if (cplx[c]) {
        if (const auto* z = std::get_if<std::complex<double>>(&cell)) {
          os << detail::format_real(z->real()) << ',' << detail::format_real(z->imag());
        } else {
          os << ',';
        }
        continue;
      }
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              os << detail::format_real(v);
            } else if constexpr (std::is_same_v<V, std::int64_t>) {
              os << v;
            } else if constexpr (std::is_same_v<V, bool>) {
              os << (v ? "true" : "false");
            } else if constexpr (std::is_same_v<V, std::string>) {
              os << detail::csv_escape(v);
            }
          },
          cell);
    }
    os << '\n';
  }
}

inline nlohmann::ordered_json to_json(const OutputTable& t)
{
  auto row_object = [&](const std::vector<Cell>& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& name = t.columns[c].name;
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Null>) {
              obj[name] = nullptr;
            } else if constexpr (std::is_same_v<V, std::complex<double>>) {
              obj[name + "_re"] = v.real();
              obj[name + "_im"] = v.imag();
            } else {
              obj[name] = v;
            }
          },
          row[c]);
    }
    return obj;
  };
  if (t.record && t.rows.size() == 1) {
    return row_object(t.rows.front());
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    arr.push_back(row_object(row));
  }
  return arr;
}

inline void write_table(std::ostream& os, const OutputTable& t, Format format)
{
  if (format == Format::csv) {
    write_csv(os, t);
  } else {
    os << to_json(t).dump(2) << '\n';
  }
}

} // namespace photoeffect::cli

#endif
