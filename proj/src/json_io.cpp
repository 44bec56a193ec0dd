#include "ramfac/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace ramfac {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const std::vector<RatVec>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

Json to_json(const RatMatrix& m) { return to_json(m.row_list()); }

Json to_json(const PrimeFieldMatrix& m) {
  Json j;
  j["p"] = m.p();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  j["entries"] = a;
  return j;
}

PrimeFieldMatrix ffmatrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected an object");
  for (const char* f : {"p", "rows", "cols"})
    if (!j.contains(f) || !j[f].is_number_unsigned()) throw ParseError(std::string("matrix.") + f + ": expected an unsigned integer");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("matrix.entries: expected an array of rows");
  const auto rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
  const auto& e = j["entries"];
  if (e.size() != rows) throw ParseError("matrix.entries: row count differs from rows");
  std::vector<std::vector<long>> data;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string field = "matrix.entries[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != cols) throw ParseError(field + ": expected " + std::to_string(cols) + " integers");
    std::vector<long> row;
    for (const auto& x : e[i]) {
      if (!x.is_number_integer()) throw ParseError(field + ": non-integer entry");
      row.push_back(x.get<long>());
    }
    data.push_back(std::move(row));
  }
  return PrimeFieldMatrix::from_rows(j["p"].get<std::uint32_t>(), data);
}

Json to_json(const PolyhedralSpace& s, bool with_vertices) {
  Json j;
  j["dim"] = s.dim();
  j["tag"] = s.tag();
  j["functionals"] = to_json(s.functionals());
  if (with_vertices) j["vertices"] = to_json(s.vertices());
  return j;
}

Json to_json(const FiniteMetricSpace& m) {
  Json j;
  j["n"] = m.size();
  j["d"] = to_json(m.matrix());
  j["basepoint"] = m.basepoint();
  return j;
}

Json to_json(const SearchOutcome& o) {
  Json j;
  j["status"] = to_string(o.status);
  j["witness"] = o.witness ? Json(*o.witness) : Json(nullptr);
  j["nodes"] = o.stats.nodes;
  return j;
}

Rational rational_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.what());
  }
  throw ParseError(field + ": expected a rational string or an integer");
}

RatVec ratvec_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array");
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<RatVec> rows_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of arrays");
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(ratvec_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return rows;
}

PolyhedralSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
    throw ParseError("space: missing unsigned field \"dim\"");
  const std::size_t dim = j["dim"].get<std::size_t>();
  auto check = [&](const std::vector<RatVec>& rows, const std::string& field) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].size() != dim)
        throw ParseError("space." + field + "[" + std::to_string(i) + "]: length differs from dim");
  };
  const std::string tag = j.contains("tag") && j["tag"].is_string() ? j["tag"].get<std::string>() : "custom";
  if (j.contains("functionals")) {
    auto fs = rows_from_json(j["functionals"], "space.functionals");
    check(fs, "functionals");
    auto s = PolyhedralSpace::from_functionals(std::move(fs), dim, tag);
    if (j.contains("vertices")) {
      auto vs = rows_from_json(j["vertices"], "space.vertices");
      check(vs, "vertices");
      const auto other = PolyhedralSpace::from_vertices(std::move(vs), dim);
      if (other.vertices() != s.vertices()) throw ParseError("space: vertices and functionals describe different balls");
    }
    return s;
  }
  if (j.contains("vertices")) {
    auto vs = rows_from_json(j["vertices"], "space.vertices");
    check(vs, "vertices");
    return PolyhedralSpace::from_vertices(std::move(vs), dim, tag);
  }
  throw ParseError("space: need \"functionals\" or \"vertices\"");
}

FiniteMetricSpace metric_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d")) throw ParseError("metric: missing field \"d\"");
  auto d = rows_from_json(j["d"], "metric.d");
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != d.size()))
    throw ParseError("metric.n: does not match the number of rows of d");
  std::size_t base = 0;
  if (j.contains("basepoint")) {
    if (!j["basepoint"].is_number_unsigned()) throw ParseError("metric.basepoint: expected an unsigned integer");
    base = j["basepoint"].get<std::size_t>();
  }
  return FiniteMetricSpace(std::move(d), base);
}

FiniteMetricSpace metric_from_csv(const std::string& text, std::size_t basepoint) {
  std::string body = text;
  std::replace(body.begin(), body.end(), ';', '\n');
  std::istringstream in(body);
  std::string line;
  std::vector<RatVec> d;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    RatVec row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto a = cell.find_first_not_of(" \t\r"), b = cell.find_last_not_of(" \t\r");
      try {
        row.push_back(parse_rational(a == std::string::npos ? "" : cell.substr(a, b - a + 1)));
      } catch (const ParseError& e) {
        throw ParseError("csv line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    d.push_back(std::move(row));
  }
  return FiniteMetricSpace(std::move(d), basepoint);
}

namespace {

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

std::vector<std::vector<long>> parse_int_rows(const std::string& text) {
  std::vector<std::vector<long>> rows;
  const auto parts = split(text, ",;\n\r");
  for (std::size_t r = 0; r < parts.size(); ++r) {
    std::vector<long> row;
    const std::string& p = parts[r];
    if (p.find(' ') != std::string::npos) {
      for (const auto& tok : split(p, " ")) {
        try {
          std::size_t used = 0;
          row.push_back(std::stol(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw ParseError("matrix row " + std::to_string(r) + ": bad entry \"" + tok + "\"");
        }
      }
    } else {
      for (char c : p) {
        if (c < '0' || c > '9') throw ParseError("matrix row " + std::to_string(r) + ": bad digit '" + c + "'");
        row.push_back(c - '0');
      }
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("matrix row " + std::to_string(r) + ": length differs from row 0");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix: no rows");
  return rows;
}

std::vector<RatVec> parse_rational_rows(const std::string& text) {
  std::vector<RatVec> rows;
  const auto parts = split(text, ";\n");
  for (std::size_t r = 0; r < parts.size(); ++r) {
    RatVec row;
    for (const auto& tok : split(parts[r], " ,\t\r")) {
      try {
        row.push_back(parse_rational(tok));
      } catch (const ParseError& e) {
        throw ParseError("matrix row " + std::to_string(r) + ": " + e.what());
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("matrix row " + std::to_string(r) + ": length differs from row 0");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix: no rows");
  return rows;
}

}  // namespace ramfac
