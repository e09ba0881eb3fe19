#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "dsmt/chebyshev.hpp"

namespace dsmt::continuous {

/// Uniform G×G samples of a surface over [-1,1]², both axes sharing `axis`.
struct SurfaceGrid {
  std::vector<double> axis;
  std::vector<double> values;  // values[i*G + j] = f(axis[i], axis[j])

  std::size_t size() const noexcept { return axis.size(); }
  double at(std::size_t i, std::size_t j) const { return values.at(i * axis.size() + j); }
};

/// G evenly spaced points from -1 to 1 inclusive. Requires G >= 2.
std::vector<double> uniform_axis(std::size_t g);

SurfaceGrid sample_grid(const ChebDensity& d, std::size_t g);

/// Rows `x y value`, a blank line after each x-block (gnuplot `splot` layout).
void write_grid(std::ostream& out, const SurfaceGrid& grid);

/// Inverse of `write_grid`. Throws ParseError on malformed rows or a
/// non-square layout.
SurfaceGrid read_grid(std::istream& in);

/// Header `cheb2d N`, then N+1 rows of N+1 coefficients (row k = x-degree k),
/// written with round-trip precision.
void write_coefficients(std::ostream& out, const ChebDensity& d);

/// Throws ParseError with the offending line.
ChebDensity read_coefficients(std::istream& in);

}  // namespace dsmt::continuous
