#include "tverberg/point_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<std::size_t> header_dim(std::string_view body, std::size_t line) {
  // body is the text after '#'
  body = trim(body);
  if (body.substr(0, 2) != "d=") return std::nullopt;
  const std::string_view num = trim(body.substr(2));
  std::size_t d = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), d);
  if (ec != std::errc() || ptr != num.data() + num.size() || d == 0) parse_error(line, "bad dimension header");
  return d;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PointSet parse_points(std::string_view text) {
  std::optional<std::size_t> dim;
  std::vector<Point> points;
  std::map<std::vector<double>, std::size_t> first_line;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto d = header_dim(line.substr(1), line_no)) {
        if (!points.empty() || dim) parse_error(line_no, "dimension header must precede all points");
        dim = *d;
      }
      continue;
    }

    std::vector<double> coords;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      const std::string_view tok = line.substr(i, j - i);
      double v = 0.0;
      const char* first = tok.data();
      if (!tok.empty() && tok.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_error(line_no, "not a number: '" + std::string(tok) + "'");
      if (!std::isfinite(v)) parse_error(line_no, "non-finite coordinate");
      coords.push_back(v);
      i = j;
    }
    if (!dim) dim = coords.size();
    if (coords.size() != *dim) {
      parse_error(line_no, "expected " + std::to_string(*dim) + " coordinates, found " + std::to_string(coords.size()));
    }
    const auto [it, inserted] = first_line.emplace(coords, line_no);
    if (!inserted) parse_error(line_no, "duplicate point (same as line " + std::to_string(it->second) + ")");
    points.emplace_back(std::move(coords));
  }
  if (points.empty()) fail(ErrorKind::Parse, "no points in input");
  return PointSet(std::move(points));
}

std::string format_points(const PointSet& s) {
  std::string out;
  if (s.dim() != 2) out += "# d=" + std::to_string(s.dim()) + "\n";
  for (const Point& p : s) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (k > 0) out += ' ';
      out += format_double(p[k]);
    }
    out += '\n';
  }
  return out;
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Usage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_points(ss.str());
}

}  // namespace tverberg
