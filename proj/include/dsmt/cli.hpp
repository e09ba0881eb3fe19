#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dsmt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInputError = 2,
  kNumericFailure = 3,
};

struct DemoConfig {
  std::size_t degree = 128;
  std::size_t grid = 64;
  std::pair<double, double> gauss1{-1.0, 0.0};
  std::pair<double, double> gauss2{0.0, 1.0};
  std::filesystem::path out_dir = ".";
};

struct DemoSummary {
  double mass_m1 = 0;
  double mass_m2 = 0;
  double mass_fused = 0;
  double argmax_x = 0;
  double argmax_y = 0;
  double argmax_value = 0;
  double b1_whole = 0;  // Bel1 of the whole domain (-1, 1)
};

/// Probe resolution used to locate the fused maximum.
inline constexpr std::size_t kArgmaxProbe = 256;

/// Fits both Gaussians, normalizes, fuses, and writes mm1, mm2, m1, m2, b1,
/// b2, m1+m2, b1+b2 as `<name>.dat` grids plus `m1.cheb`, `m2.cheb` and
/// `m1+m2.cheb` coefficient files into `out_dir`.
DemoSummary run_fuse_demo(const DemoConfig& config);

std::string format_summary(const DemoSummary& s);

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsmt::cli
