#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bk/graded_polynomial.hpp"
#include "bk/partition.hpp"
#include "bk/rational.hpp"

namespace bk::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "1.0.0";

enum class Format { Text, Csv, Json, Latex };
Format parse_format(const std::string& name);

/// How a JSON cell value is rendered in text, CSV and LaTeX.
enum class CellKind {
  Plain,       // numbers and strings as-is
  YesNo,       // booleans as yes/no
  Partition,   // [a, b] -> (a,b)
  List,        // [a, b] -> a,b
  Polynomial,  // [{coeff, vars}] -> canonical polynomial text
  Expansion,   // [{partition, coeff}] -> (3): 1, (1,1): 1
};

struct Column {
  std::string name;
  CellKind kind = CellKind::Plain;
  /// Variable family for Polynomial cells.
  VariableFamily family = VariableFamily::X;
};

enum class TextLayout {
  Aligned,  // header plus space-padded columns
  Bare,     // one line per row, cells joined by " | "
  Labeled,  // like Bare but each cell prefixed by "name: "
};

/// A command's result. Rows are JSON objects keyed by column name; every
/// output format is rendered from them, so cached rows reproduce the
/// original output exactly.
struct Table {
  std::string command;
  json params = json::object();
  std::vector<Column> columns;
  std::vector<json> rows;
  TextLayout layout = TextLayout::Aligned;
};

std::string render(const Table& table, Format format, const std::string& timestamp = "");

// JSON encodings shared by commands and the cache.
json to_json(const Rational& r);
json to_json(const Integer& z);
json to_json(const Partition& p);
json to_json(const GradedPolynomial& p);
GradedPolynomial polynomial_from_json(const json& j, VariableFamily family);
Partition partition_from_json(const json& j);
json expansion_to_json(const std::map<Partition, Integer>& m);

/// Text of a single cell (as used by the text layouts).
std::string cell_text(const Column& column, const json& value);

}  // namespace bk::cli
