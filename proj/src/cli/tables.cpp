#include <algorithm>
#include <sstream>

#include "bk/cli/table.hpp"
#include "bk/errors.hpp"

namespace bk::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  throw InvalidInput("unknown format '" + name + "'");
}

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json to_json(const Rational& r) {
  if (r.is_integer()) return to_json(r.numerator());
  return json(r.str());
}

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const GradedPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.ordered_terms()) terms.push_back(json{{"coeff", to_json(c)}, {"vars", m}});
  return terms;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  return Rational::parse(j.get<std::string>());
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.dump();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

GradedPolynomial polynomial_from_json(const json& j, VariableFamily family) {
  GradedPolynomial p(family);
  for (const auto& term : j) p.add_term(term.at("vars").get<Monomial>(), rational_from_json(term.at("coeff")));
  return p;
}

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json expansion_to_json(const std::map<Partition, Integer>& m) {
  // Largest partitions first, e.g. (3): 1, (1,1): 1.
  std::vector<std::pair<Partition, Integer>> terms(m.begin(), m.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first.parts() > b.first.parts();
  });
  json out = json::array();
  for (const auto& [pi, c] : terms) out.push_back(json{{"partition", to_json(pi)}, {"coeff", to_json(c)}});
  return out;
}

std::string cell_text(const Column& column, const json& value) {
  switch (column.kind) {
    case CellKind::Plain: return scalar_text(value);
    case CellKind::YesNo: return value.get<bool>() ? "yes" : "no";
    case CellKind::Partition: return partition_from_json(value).str();
    case CellKind::List: {
      std::vector<std::string> parts;
      for (const auto& v : value) parts.push_back(scalar_text(v));
      return join(parts, ",");
    }
    case CellKind::Polynomial: return polynomial_from_json(value, column.family).str();
    case CellKind::Expansion: {
      std::vector<std::string> parts;
      for (const auto& t : value)
        parts.push_back(partition_from_json(t.at("partition")).str() + ": " + scalar_text(t.at("coeff")));
      return parts.empty() ? "0" : join(parts, ", ");
    }
  }
  return "";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

std::string latex_polynomial(const GradedPolynomial& p) {
  if (p.is_zero()) return "$0$";
  std::string out;
  bool first = true;
  const char* sym = family_symbol(p.family());
  for (const auto& [m, c] : p.ordered_terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (m.empty() || mag != Rational(1)) out += mag.str();
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      out += std::string(sym) + "_{" + std::to_string(m[i]) + "}";
      if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
      i = j;
    }
  }
  return "$" + out + "$";
}

std::string cell_latex(const Column& column, const json& value) {
  if (column.kind == CellKind::Polynomial) return latex_polynomial(polynomial_from_json(value, column.family));
  return latex_escape(cell_text(column, value));
}

std::string render_text(const Table& t) {
  std::ostringstream os;
  if (t.layout != TextLayout::Aligned) {
    for (const auto& row : t.rows) {
      std::vector<std::string> cells;
      for (const auto& col : t.columns) {
        const std::string text = cell_text(col, row.at(col.name));
        cells.push_back(t.layout == TextLayout::Labeled ? col.name + ": " + text : text);
      }
      os << join(cells, " | ") << "\n";
    }
    return os.str();
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::size_t> width(t.columns.size());
  std::vector<std::string> header;
  for (const auto& col : t.columns) header.push_back(col.name);
  grid.push_back(header);
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& col : t.columns) line.push_back(cell_text(col, row.at(col.name)));
    grid.push_back(std::move(line));
  }
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : grid) {
    std::string out;
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += line[c];
      if (c + 1 < line.size()) out += std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << out << "\n";
  }
  return os.str();
}

}  // namespace

std::string render(const Table& t, Format format, const std::string& timestamp) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      os << render_text(t);
      if (!timestamp.empty()) os << "generated: " << timestamp << "\n";
      break;
    case Format::Csv: {
      std::vector<std::string> header;
      for (const auto& col : t.columns) header.push_back(csv_escape(col.name));
      os << join(header, ",") << "\n";
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& col : t.columns) cells.push_back(csv_escape(cell_text(col, row.at(col.name))));
        os << join(cells, ",") << "\n";
      }
      break;
    }
    case Format::Json: {
      json doc{{"schema_version", kSchemaVersion}, {"command", t.command}, {"params", t.params}, {"rows", t.rows}};
      if (!timestamp.empty()) doc["generated"] = timestamp;
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::Latex: {
      os << "\\begin{tabular}{" << std::string(t.columns.size(), 'l') << "}\n\\hline\n";
      std::vector<std::string> header;
      for (const auto& col : t.columns) header.push_back(latex_escape(col.name));
      os << join(header, " & ") << " \\\\\n\\hline\n";
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& col : t.columns) cells.push_back(cell_latex(col, row.at(col.name)));
        os << join(cells, " & ") << " \\\\\n";
      }
      os << "\\hline\n\\end{tabular}\n";
      if (!timestamp.empty()) os << "% generated: " << timestamp << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace bk::cli
