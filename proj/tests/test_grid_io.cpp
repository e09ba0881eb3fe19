#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "dsmt/continuous.hpp"
#include "dsmt/error.hpp"
#include "dsmt/grid_io.hpp"

using namespace dsmt;
using namespace dsmt::continuous;

TEST_CASE("uniform axis") {
  const auto a = uniform_axis(5);
  CHECK(a == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK(uniform_axis(64).back() == 1.0);
  CHECK_THROWS_AS(uniform_axis(1), std::invalid_argument);
}

TEST_CASE("grid files round-trip exactly") {
  const ChebDensity d = normalize(fit(gaussian_bump(-1, 0), 16));
  const SurfaceGrid g = sample_grid(d, 9);
  CHECK(g.at(4, 4) == doctest::Approx(eval(d, 0, 0)).epsilon(1e-14));
  std::ostringstream out;
  write_grid(out, g);
  const std::string text = out.str();
  // 9 blocks of 9 rows, each block followed by a blank line
  CHECK(std::count(text.begin(), text.end(), '\n') == 9 * 10);
  CHECK(text.rfind("1 1 ", 0) == std::string::npos);
  CHECK(text.rfind("-1 -1 ", 0) == 0);

  std::istringstream in(text);
  const SurfaceGrid back = read_grid(in);
  CHECK(back.axis == g.axis);
  CHECK(back.values == g.values);
}

TEST_CASE("malformed grid files") {
  std::istringstream short_row("-1 -1 0\n-1 1\n");
  try {
    read_grid(short_row);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream junk("-1 -1 x\n");
  CHECK_THROWS_AS(read_grid(junk), ParseError);
  std::istringstream ragged("-1 -1 0\n-1 1 0\n\n1 -1 0\n\n");
  CHECK_THROWS_AS(read_grid(ragged), ParseError);
}

TEST_CASE("coefficient files round-trip exactly") {
  const ChebDensity d = fuse(normalize(fit(gaussian_bump(-1, 0), 8)), normalize(fit(gaussian_bump(0, 1), 8)));
  std::ostringstream out;
  write_coefficients(out, d);
  CHECK(out.str().rfind("cheb2d 8\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_coefficients(in) == d);
}

TEST_CASE("malformed coefficient files") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_coefficients(empty), ParseError);
  std::istringstream header("cheb3d 1\n1 0\n0 0\n");
  CHECK_THROWS_AS(read_coefficients(header), ParseError);
  std::istringstream missing("cheb2d 1\n1 0\n");
  CHECK_THROWS_AS(read_coefficients(missing), ParseError);
  std::istringstream wide("cheb2d 1\n1 0 0\n0 0\n");
  try {
    read_coefficients(wide);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream ok("cheb2d 1\n0.25 0\n\n0 0\n");
  CHECK(read_coefficients(ok)(0, 0) == 0.25);
}
