#include "sdcalc_cli/diagram_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sdcalc/error.hpp"
#include "sdcalc_cli/json_io.hpp"

namespace sdcalc::cli {
namespace {

constexpr int kMaxGenus = 1000;

std::string located(std::size_t line, std::size_t column, const std::string& what) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

bool is_integer_token(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int integer_of(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Int> integers(const std::vector<Token>& toks, std::size_t lineno) {
  std::vector<Int> out;
  for (std::size_t k = 1; k < toks.size(); ++k) {
    if (!is_integer_token(toks[k].text))
      throw ParseError(lineno, toks[k].column, "expected an integer, got '" + std::string(toks[k].text) + "'");
    out.push_back(integer_of(toks[k].text));
  }
  return out;
}

DiagramFile parse_sd(std::string_view text) {
  DiagramFile f;
  bool seen_closed = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    pos = end + 1;

    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string_view key = toks[0].text;
    const std::size_t col = toks[0].column;
    if (key == "genus") {
      if (f.genus != 0) throw ParseError(lineno, col, "duplicate genus line");
      if (toks.size() != 2) throw ParseError(lineno, col, "genus takes one integer");
      const std::vector<Int> v = integers(toks, lineno);
      if (v[0] < 1 || v[0] > kMaxGenus)
        throw ParseError(lineno, toks[1].column, "genus must lie in [1, " + std::to_string(kMaxGenus) + "]");
      f.genus = v[0].convert_to<int>();
    } else if (key == "curve") {
      if (f.genus == 0) throw ParseError(lineno, col, "curve before genus");
      std::vector<Int> v = integers(toks, lineno);
      if (v.size() != 2 * static_cast<std::size_t>(f.genus))
        throw ParseError(lineno, col,
                         "curve " + std::to_string(f.curves.size() + 1) + ": expected " +
                             std::to_string(2 * f.genus) + " coefficients, got " + std::to_string(v.size()));
      f.curves.push_back(std::move(v));
    } else if (key == "closed") {
      if (seen_closed) throw ParseError(lineno, col, "duplicate closed line");
      if (toks.size() != 2 || (toks[1].text != "true" && toks[1].text != "false"))
        throw ParseError(lineno, col, "closed takes true or false");
      f.closed = toks[1].text == "true";
      seen_closed = true;
    } else if (key == "switch") {
      if (f.genus == 0) throw ParseError(lineno, col, "switch before genus");
      if (f.switch_entries) throw ParseError(lineno, col, "duplicate switch line");
      std::vector<Int> v = integers(toks, lineno);
      const std::size_t n = 2 * static_cast<std::size_t>(f.genus);
      if (v.size() != n * n)
        throw ParseError(lineno, col,
                         "switch: expected " + std::to_string(n * n) + " entries, got " + std::to_string(v.size()));
      f.switch_entries = std::move(v);
    } else {
      throw ParseError(lineno, col, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (f.genus == 0) throw ParseError(std::max<std::size_t>(lineno, 1), 1, "missing genus line");
  if (f.curves.empty()) throw ParseError(std::max<std::size_t>(lineno, 1), 1, "no curves");
  return f;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<Int> json_row(const Json& j, std::size_t expected, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  if (j.size() != expected)
    throw ParseError(path + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  std::vector<Int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

DiagramFile parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const std::size_t cut = what.find("syntax error");
    throw ParseError(line, col, cut == std::string::npos ? what : what.substr(cut));
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  for (const auto& [k, v] : j.items())
    if (k != "genus" && k != "curves" && k != "closed" && k != "switch") throw ParseError("unknown key '" + k + "'");

  DiagramFile f;
  if (!j.contains("genus")) throw ParseError("missing key 'genus'");
  const Int g = int_from_json(j["genus"], "genus");
  if (g < 1 || g > kMaxGenus) throw ParseError("genus must lie in [1, " + std::to_string(kMaxGenus) + "]");
  f.genus = g.convert_to<int>();
  const std::size_t n = 2 * static_cast<std::size_t>(f.genus);

  if (!j.contains("curves") || !j["curves"].is_array()) throw ParseError("curves: expected an array");
  const Json& cs = j["curves"];
  if (cs.empty()) throw ParseError("no curves");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_array() && cs[i].size() != n)
      throw ParseError("curve " + std::to_string(i + 1) + ": expected " + std::to_string(n) +
                       " coefficients, got " + std::to_string(cs[i].size()));
    f.curves.push_back(json_row(cs[i], n, "curves[" + std::to_string(i) + "]"));
  }

  if (j.contains("closed")) {
    if (!j["closed"].is_boolean()) throw ParseError("closed: expected true or false");
    f.closed = j["closed"].get<bool>();
  }
  if (j.contains("switch")) {
    const Json& s = j["switch"];
    if (!s.is_array() || s.size() != n)
      throw ParseError("switch: expected " + std::to_string(n) + " rows");
    std::vector<Int> entries;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Int> row = json_row(s[r], n, "switch[" + std::to_string(r) + "]");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    f.switch_entries = std::move(entries);
  }
  return f;
}

std::vector<HClass> classes_of(const DiagramFile& f) {
  std::vector<HClass> out;
  for (const std::vector<Int>& c : f.curves) out.emplace_back(f.genus, c);
  return out;
}

std::optional<SpMatrix> switch_of(const DiagramFile& f) {
  if (!f.switch_entries) return std::nullopt;
  const std::size_t n = 2 * static_cast<std::size_t>(f.genus);
  try {
    return SpMatrix::from_matrix(f.genus, IntMatrix(n, n, *f.switch_entries));
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("switch: ") + e.what());
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(located(line, column, what)), line_(line), column_(column) {}

FileFormat sniff(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? FileFormat::Json : FileFormat::Sd;
  }
  return FileFormat::Sd;
}

DiagramFile parse_file(std::string_view text, FileFormat format) {
  return format == FileFormat::Json ? parse_json(text) : parse_sd(text);
}

Diagram to_diagram(const DiagramFile& f) {
  std::optional<SpMatrix> mu = switch_of(f);
  Circuit c = normalize(classes_of(f), f.closed, mu);
  return Diagram(std::move(c), std::move(mu));
}

std::vector<ValidationFailure> file_failures(const DiagramFile& f) {
  std::optional<SpMatrix> mu;
  std::vector<ValidationFailure> out;
  try {
    mu = switch_of(f);
  } catch (const PreconditionError& e) {
    out.push_back({0, e.what()});
  }
  std::vector<HClass> curves = classes_of(f);
  for (std::size_t i = 0; i + 1 < curves.size(); ++i)
    if (pairing(curves[i], curves[i + 1]) == -1) curves[i + 1] = -curves[i + 1];
  const ValidationReport r = validate(Diagram(Circuit(std::move(curves), f.closed), mu));
  for (const ValidationFailure& v : r.failures)
    if (v.reason.rfind("orientation convention", 0) != 0) out.push_back(v);
  return out;
}

Diagram parse(std::string_view text, FileFormat format) { return to_diagram(parse_file(text, format)); }

std::string emit_sd(const Diagram& d) {
  std::ostringstream os;
  os << "genus " << d.genus() << '\n';
  for (const HClass& x : d.circuit().curves()) {
    os << "curve";
    for (const Int& v : x.coeffs()) os << ' ' << v;
    os << '\n';
  }
  os << "closed " << (d.closed() ? "true" : "false") << '\n';
  if (d.switch_matrix()) {
    const IntMatrix& m = d.switch_matrix()->matrix();
    os << "switch";
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << m(i, j);
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const Diagram& d) { return to_json(d).dump(2) + "\n"; }

}  // namespace sdcalc::cli
