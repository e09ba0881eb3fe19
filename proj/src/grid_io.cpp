#include "dsmt/grid_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "dsmt/error.hpp"

namespace dsmt::continuous {

namespace {

std::vector<double> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<double> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (true) {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    double v = 0;
    const auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || (next != end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError("malformed number", line_no);
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

}  // namespace

std::vector<double> uniform_axis(std::size_t g) {
  if (g < 2) throw std::invalid_argument("uniform_axis: need at least 2 points");
  std::vector<double> axis(g);
  for (std::size_t i = 0; i < g; ++i) {
    axis[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(g - 1);
  }
  axis.back() = 1.0;
  return axis;
}

SurfaceGrid sample_grid(const ChebDensity& d, std::size_t g) {
  SurfaceGrid grid{uniform_axis(g), {}};
  grid.values = eval_grid(d, grid.axis, grid.axis);
  return grid;
}

void write_grid(std::ostream& out, const SurfaceGrid& grid) {
  const std::size_t g = grid.size();
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) out << fmt::format("{} {} {}\n", grid.axis[i], grid.axis[j], grid.at(i, j));
    out << '\n';
  }
}

SurfaceGrid read_grid(std::istream& in) {
  std::vector<double> xs, ys, values;
  std::vector<std::size_t> block_sizes{0};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = parse_numbers(line, line_no);
    if (row.empty()) {
      if (block_sizes.back() != 0) block_sizes.push_back(0);
      continue;
    }
    if (row.size() != 3) throw ParseError("expected 'x y value'", line_no);
    if (block_sizes.back() == 0) xs.push_back(row[0]);
    if (block_sizes.size() == 1) ys.push_back(row[1]);
    values.push_back(row[2]);
    ++block_sizes.back();
  }
  if (block_sizes.back() == 0) block_sizes.pop_back();
  const std::size_t g = xs.size();
  if (g < 2 || ys.size() != g || block_sizes.size() != g) throw ParseError("grid is not square");
  for (std::size_t b : block_sizes)
    if (b != g) throw ParseError("grid is not square");
  // both axes are the same uniform axis; keep the x values read
  return SurfaceGrid{std::move(xs), std::move(values)};
}

void write_coefficients(std::ostream& out, const ChebDensity& d) {
  out << "cheb2d " << d.degree() << '\n';
  for (std::size_t k = 0; k <= d.degree(); ++k) {
    for (std::size_t l = 0; l <= d.degree(); ++l) out << (l ? " " : "") << fmt::format("{}", d(k, l));
    out << '\n';
  }
}

ChebDensity read_coefficients(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty coefficient file", 1);
  std::istringstream header(line);
  std::string tag;
  long long degree = -1;
  if (!(header >> tag >> degree) || tag != "cheb2d" || degree < 0 || degree > 1 << 14) {
    throw ParseError("expected header 'cheb2d N'", line_no);
  }
  const auto n = static_cast<std::size_t>(degree) + 1;
  std::vector<double> coeffs;
  coeffs.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!next_line()) throw ParseError("missing coefficient rows", line_no + 1);
    const auto row = parse_numbers(line, line_no);
    if (row.size() != n) throw ParseError(fmt::format("expected {} coefficients", n), line_no);
    for (double v : row) {
      if (!std::isfinite(v)) throw ParseError("non-finite coefficient", line_no);
    }
    coeffs.insert(coeffs.end(), row.begin(), row.end());
  }
  if (next_line()) throw ParseError("trailing data after coefficients", line_no);
  return ChebDensity(n - 1, std::move(coeffs));
}

}  // namespace dsmt::continuous
