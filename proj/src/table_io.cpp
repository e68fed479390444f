#include "river/table_io.hpp"

#include "river/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace river {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

bool parse_long(const std::string& s, long& out) {
  try {
    Integer v = parse_integer(s);
    if (!v.fits_slong_p()) return false;
    out = v.get_si();
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace

std::string render_ascii(const CohomologyTable& t, ColumnRange window) {
  const int n = t.n();
  const auto width = static_cast<std::size_t>(window.width());
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n) + 1);
  std::vector<std::string> labels;
  std::vector<std::size_t> col_width(width, 0);

  for (long c = window.lo; c <= window.hi; ++c) {
    const auto k = static_cast<std::size_t>(c - window.lo);
    labels.push_back(std::to_string(c));
    col_width[k] = labels.back().size();
    for (int i = n; i >= 0; --i) {
      Integer h = t.entry(i, c - i);
      std::string s = h == 0 ? "." : to_string(h);
      col_width[k] = std::max(col_width[k], s.size());
      cells[static_cast<std::size_t>(n - i)].push_back(std::move(s));
    }
  }

  const std::size_t prefix = std::to_string(n).size() + 1;
  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };

  std::ostringstream os;
  for (int i = n; i >= 0; --i) {
    os << pad_left(std::to_string(i) + ":", prefix);
    const auto& row = cells[static_cast<std::size_t>(n - i)];
    for (std::size_t k = 0; k < width; ++k) os << ' ' << pad_left(row[k], col_width[k]);
    os << '\n';
  }
  os << std::string(prefix, ' ');
  for (std::size_t k = 0; k < width; ++k) os << ' ' << pad_left(labels[k], col_width[k]);
  os << '\n';
  return os.str();
}

CohomologyTable parse_ascii(std::string_view text) {
  struct Line {
    int number;
    std::vector<Token> tokens;
  };
  std::vector<Line> lines;
  int number = 0;
  for (auto raw : split_lines(text)) {
    ++number;
    auto tokens = tokenize(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  if (lines.empty()) throw ParseError("empty table");

  const Line& index_line = lines.back();
  if (index_line.tokens.front().text.back() == ':') {
    throw ParseError("missing index line", index_line.number, index_line.tokens.front().column);
  }
  std::vector<long> columns;
  for (const auto& tok : index_line.tokens) {
    long c = 0;
    if (!parse_long(tok.text, c)) {
      throw ParseError("index line must contain integers, found '" + tok.text + "'", index_line.number,
                       tok.column);
    }
    if (!columns.empty() && c != columns.back() + 1) {
      throw ParseError("column indices must be consecutive", index_line.number, tok.column);
    }
    columns.push_back(c);
  }

  const auto row_lines = static_cast<int>(lines.size()) - 1;
  if (row_lines < 2) throw ParseError("a table needs at least rows 1 and 0", index_line.number, 1);
  const int n = row_lines - 1;
  const ColumnRange window{columns.front(), columns.back()};
  IntegerMatrix grid(n + 1, window.width());

  for (int r = 0; r < row_lines; ++r) {
    const Line& line = lines[static_cast<std::size_t>(r)];
    const int expected_row = n - r;
    const Token& label = line.tokens.front();
    long row_label = 0;
    if (label.text.size() < 2 || label.text.back() != ':' ||
        !parse_long(label.text.substr(0, label.text.size() - 1), row_label)) {
      throw ParseError("expected a row label like '" + std::to_string(expected_row) + ":'", line.number,
                       label.column);
    }
    if (row_label != expected_row) {
      throw ParseError("expected row " + std::to_string(expected_row) + ", found " + label.text,
                       line.number, label.column);
    }
    if (line.tokens.size() != columns.size() + 1) {
      throw ParseError("row " + std::to_string(expected_row) + " has " +
                           std::to_string(line.tokens.size() - 1) + " entries, expected " +
                           std::to_string(columns.size()),
                       line.number, label.column);
    }
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const Token& tok = line.tokens[k + 1];
      Integer v = 0;
      if (tok.text != ".") {
        try {
          v = parse_integer(tok.text);
        } catch (const ParseError&) {
          throw ParseError("bad entry '" + tok.text + "'", line.number, tok.column);
        }
        if (v < 0) throw ParseError("negative entry '" + tok.text + "'", line.number, tok.column);
      }
      grid(expected_row, static_cast<Eigen::Index>(k)) = v;
    }
  }
  return CohomologyTable::literal(n, window, std::move(grid));
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return to_string(v);
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer or decimal string, found " + j.dump());
}

nlohmann::json table_to_json(const CohomologyTable& t, ColumnRange window) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = t.n(); i >= 0; --i) {
    nlohmann::json row = nlohmann::json::array();
    for (long c = window.lo; c <= window.hi; ++c) row.push_back(integer_to_json(t.entry(i, c - i)));
    rows.push_back(std::move(row));
  }
  return {{"n", t.n()}, {"window", {window.lo, window.hi}}, {"rows", std::move(rows)}};
}

CohomologyTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("window") || !j.contains("rows")) {
    throw ParseError("table JSON needs keys n, window, rows");
  }
  if (!j["n"].is_number_integer()) throw ParseError("n must be an integer");
  const int n = j["n"].get<int>();
  const auto& w = j["window"];
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer()) {
    throw ParseError("window must be [lo, hi]");
  }
  const ColumnRange window{w[0].get<long>(), w[1].get<long>()};
  if (window.hi < window.lo) throw ParseError("window must satisfy lo <= hi");
  const auto& rows = j["rows"];
  if (n < 1 || !rows.is_array() || rows.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError("rows must list n + 1 rows");
  }
  IntegerMatrix grid(n + 1, window.width());
  for (int r = 0; r <= n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(window.width())) {
      throw ParseError("row " + std::to_string(n - r) + " does not match the window width");
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      Integer v = integer_from_json(row[k]);
      if (v < 0) throw ParseError("negative entry in row " + std::to_string(n - r));
      grid(n - r, static_cast<Eigen::Index>(k)) = v;
    }
  }
  return CohomologyTable::literal(n, window, std::move(grid));
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  for (auto line : split_lines(text)) {
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (k) out += ' ';
      out += tokens[k].text;
    }
    out += '\n';
  }
  return out;
}

CohomologyTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open table file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path + ": " + e.what());
    }
    return table_from_json(j);
  }
  return parse_ascii(content);
}

}  // namespace river
