#include "l1lines/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace l1lines {

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<Point> parse_points_text(const std::string& text) {
  std::vector<Point> pts;
  std::vector<int> origin_line;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs)) continue;  // blank or comment-only
    if (!(fields >> ys)) fail_line(line_no, "expected two coordinates");
    if (fields >> extra) fail_line(line_no, "trailing tokens after point");
    Point p;
    try {
      p.x = parse_rational(xs);
      p.y = parse_rational(ys);
    } catch (const std::invalid_argument& e) {
      fail_line(line_no, e.what());
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] == p) {
        fail_line(line_no,
                  "duplicate point, first seen on line " +
                      std::to_string(origin_line[i]));
      }
    }
    pts.push_back(std::move(p));
    origin_line.push_back(line_no);
  }
  return pts;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::vector<Point> read_points_file(const std::string& path) {
  return parse_points_text(read_text_file(path));
}

std::string canonical_point_text(const std::vector<Point>& pts) {
  std::string out;
  for (const Point& p : pts) {
    out += rat_str(p.x);
    out += ' ';
    out += rat_str(p.y);
    out += '\n';
  }
  return out;
}

std::string canonical_point_text(const PointSet& X) {
  return canonical_point_text(X.points());
}

DistanceMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument("empty matrix file");
  int n;
  try {
    std::size_t pos = 0;
    n = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("malformed matrix size '" + tok + "'");
  }
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  DistanceMatrix D;
  D.n = n;
  D.d.reserve(std::size_t(n) * n);
  for (long i = 0; i < long(n) * n; ++i) {
    if (!(in >> tok))
      throw std::invalid_argument("matrix file ends after " +
                                  std::to_string(i) + " of " +
                                  std::to_string(long(n) * n) + " entries");
    D.d.push_back(parse_rational(tok));
  }
  if (in >> tok)
    throw std::invalid_argument("trailing tokens after matrix entries");
  return D;
}

DistanceMatrix read_matrix_file(const std::string& path) {
  return parse_matrix_text(read_text_file(path));
}

std::string canonical_matrix_text(const DistanceMatrix& D) {
  std::string out = std::to_string(D.n);
  out += '\n';
  for (int i = 0; i < D.n; ++i) {
    for (int j = 0; j < D.n; ++j) {
      if (j) out += ' ';
      out += rat_str(D.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[std::size_t(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace l1lines
