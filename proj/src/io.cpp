#include "linepencils/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace linepencils {

namespace {

bool looks_structured(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{';
  }
  return false;
}

LineCombinatorics parse_structured(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, source + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("lines") || !j.contains("points"))
    throw Error(ErrorCode::SyntaxError, source + ": expected keys 'lines' and 'points'");
  int n = j["lines"].get<int>();
  std::vector<LineSet> pts;
  for (const auto& arr : j["points"]) {
    LineSet p;
    for (const auto& v : arr) p.push_back(v.get<int>());
    if (p.size() < 3)
      throw Error(ErrorCode::PointTooSmall, source + ": stored point with fewer than 3 lines");
    pts.push_back(p);
  }
  return validate(n, pts);
}

}  // namespace

LineCombinatorics parse_combinatorics(const std::string& text, const std::string& source) {
  if (looks_structured(text)) return parse_structured(text, source);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<LineSet> pts;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto where = [&] { return source + ":" + std::to_string(lineno); };
    if (key == "lines:") {
      if (n != -1) throw Error(ErrorCode::SyntaxError, where() + ": duplicate 'lines:' header");
      if (!(ls >> n)) throw Error(ErrorCode::SyntaxError, where() + ": expected line count");
    } else if (key == "point:") {
      if (n == -1) throw Error(ErrorCode::SyntaxError, where() + ": 'lines:' header must come first");
      LineSet p;
      int v;
      while (ls >> v) p.push_back(v);
      if (!ls.eof()) throw Error(ErrorCode::SyntaxError, where() + ": bad integer in point");
      if (p.size() < 3) throw Error(ErrorCode::PointTooSmall, where() + ": point needs >= 3 lines");
      for (size_t i = 1; i < p.size(); ++i)
        if (p[i] <= p[i - 1])
          throw Error(ErrorCode::SyntaxError, where() + ": point indices must strictly increase");
      pts.push_back(p);
    } else {
      throw Error(ErrorCode::SyntaxError, where() + ": unknown directive '" + key + "'");
    }
  }
  if (n == -1) throw Error(ErrorCode::SyntaxError, source + ": missing 'lines:' header");
  try {
    return validate(n, pts);
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.what());
  }
}

LineCombinatorics load_combinatorics(const std::string& path) {
  return parse_combinatorics(read_file(path), path);
}

std::string serialize_text(const LineCombinatorics& c) {
  std::ostringstream os;
  os << "lines: " << c.n << "\n";
  for (const LineSet& p : c.points) {
    os << "point:";
    for (int l : p) os << ' ' << l;
    os << "\n";
  }
  return os.str();
}

std::string serialize_structured(const LineCombinatorics& c) {
  nlohmann::json j;
  j["lines"] = c.n;
  j["points"] = c.points;
  return j.dump(2) + "\n";
}

IntMat parse_int_matrix(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Int>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::SyntaxError,
                    source + ":" + std::to_string(lineno) + ": bad integer '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::SyntaxError, source + ": empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      throw Error(ErrorCode::SyntaxError, source + ": ragged rows in matrix");
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

IntMat load_int_matrix(const std::string& path) { return parse_int_matrix(read_file(path), path); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string input_hash(const LineCombinatorics& c) {
  std::string s = serialize_text(c);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace linepencils
