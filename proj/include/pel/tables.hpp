#pragma once

#include "pel/checker.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pel {

/// Families: pe, penum, multi, sym-d, multi-d, ohno.
const std::vector<std::string>& registered_families();

struct TableSpec {
  std::string family;
  std::optional<unsigned> nmax;
  std::optional<unsigned> mmax;
  std::optional<std::vector<int>> kset;
  std::optional<std::vector<unsigned>> rset;
  std::vector<Convention> conventions{Convention::weak, Convention::strict};
  LogParams logs;
  /// Closed form used by the multi-d generating function.
  FormulaVariant variant = FormulaVariant::corrected;
};

struct TableRow {
  GridPoint point;
  LocPoly value;
};

struct Table {
  std::string family;
  std::string kind;  // "values" or "egf"
  nlohmann::json config;
  std::vector<TableRow> rows;
};

/// Values of the family on the grid. Throws UnknownFamily or InvalidGrid.
Table emit_table(const TableSpec& spec);

/// Ordinary coefficients [t^n] (and [t^n u^m] for sym-d, multi-d) of the
/// generating function through the given orders.
Table emit_egf(const TableSpec& spec, unsigned order_t, std::optional<unsigned> order_u);

nlohmann::json table_to_json(const Table& t);
std::string table_to_text(const Table& t);
std::string table_to_csv(const Table& t);
std::string table_to_latex(const Table& t);

/// json, csv or latex. Throws InvalidGrid for another name.
std::string render_table(const Table& t, const std::string& format);

}  // namespace pel
