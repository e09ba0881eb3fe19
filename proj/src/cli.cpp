#include "dsmt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dsmt/continuous.hpp"
#include "dsmt/error.hpp"
#include "dsmt/expression.hpp"
#include "dsmt/grid_io.hpp"
#include "dsmt/ordered.hpp"
#include "dsmt/prebool.hpp"

namespace dsmt::cli {

namespace {

namespace fs = std::filesystem;
using continuous::ChebDensity;

class IoError : public Error {
 public:
  using Error::Error;
};

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  writer(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::pair<double, double> parse_center(const std::string& text) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw CLI::ValidationError("expected cx,cy, got '" + text + "'");
    return v;
  };
  if (comma == std::string::npos) throw CLI::ValidationError("expected cx,cy, got '" + text + "'");
  const std::string_view view = text;
  return {number(view.substr(0, comma)), number(view.substr(comma + 1))};
}

int cmd_hyperpower(std::size_t n, std::size_t guard, const std::string& constraints, std::ostream& out) {
  auto universe = enumerate_hyperpower(n, guard);
  if (constraints.empty()) {
    write_universe(out, universe);
    out << "count: " << universe.size() << '\n';
    return kSuccess;
  }
  auto in = open_input(constraints);
  const ConstraintSet gamma = read_constraints(in, n);
  const Quotient q = quotient(std::move(universe), gamma);
  write_universe(out, q.representatives());
  out << "count: " << q.size() << '\n';
  out << "insulated: " << (is_insulated(gamma) ? "yes" : "no") << '\n';
  return kSuccess;
}

int cmd_ordered(std::size_t n, bool show, std::ostream& out) {
  const auto report = ordered::verify_isomorphism(n);
  out << "atoms: " << report.atom_count << '\n'
      << "classes: " << report.class_count << '\n'
      << "staircases: " << report.image_count << '\n'
      << "increasing subsets: " << report.increasing_subsets << '\n'
      << "bijection: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : report.counterexamples) out << "  counterexample: " << c << '\n';
  if (show) {
    std::vector<Proposition> universe = enumerate_hyperpower(n, ordered::kIsomorphismGuard);
    std::erase_if(universe, [](const Proposition& p) { return p.is_bottom() || p.is_top(); });
    const Quotient q = quotient(std::move(universe), ordered::order_constraints(n));
    for (const auto& rep : q.representatives()) {
      const auto s = ordered::smile(rep, n);
      out << '\n' << format_proposition(rep) << '\n' << ordered::render(s);
    }
  }
  return report.passed() ? kSuccess : kNumericFailure;
}

int cmd_fuse(const std::string& a, const std::string& b, const std::string& target, std::ostream& out) {
  auto in_a = open_input(a);
  auto in_b = open_input(b);
  const ChebDensity fused = continuous::fuse(continuous::read_coefficients(in_a), continuous::read_coefficients(in_b));
  if (target.empty()) {
    continuous::write_coefficients(out, fused);
  } else {
    write_file(target, [&](std::ostream& o) { continuous::write_coefficients(o, fused); });
    out << fmt::format("mass: {:.12f}\n", continuous::integral_full(fused));
  }
  return kSuccess;
}

int cmd_belief(const std::string& file, double lo, double hi, std::ostream& out) {
  auto in = open_input(file);
  const ChebDensity m = continuous::read_coefficients(in);
  out << fmt::format("{:.12f}\n", continuous::belief(m, {lo, hi}));
  return kSuccess;
}

}  // namespace

DemoSummary run_fuse_demo(const DemoConfig& config) {
  using namespace continuous;
  if (!is_power_of_two(config.degree)) throw std::invalid_argument("--degree must be a power of two");
  if (config.grid < 2) throw std::invalid_argument("--grid must be at least 2");
  fs::create_directories(config.out_dir);

  const ChebDensity mm1 = fit(gaussian_bump(config.gauss1.first, config.gauss1.second), config.degree);
  const ChebDensity mm2 = fit(gaussian_bump(config.gauss2.first, config.gauss2.second), config.degree);
  const ChebDensity m1 = normalize(mm1);
  const ChebDensity m2 = normalize(mm2);
  const ChebDensity fused = fuse(m1, m2);
  const ChebDensity b1 = belief_surface(m1);
  const ChebDensity b2 = belief_surface(m2);
  const ChebDensity b_fused = belief_surface(fused);

  const std::pair<const char*, const ChebDensity*> surfaces[] = {
      {"mm1", &mm1}, {"mm2", &mm2}, {"m1", &m1}, {"m2", &m2},
      {"b1", &b1},   {"b2", &b2},   {"m1+m2", &fused}, {"b1+b2", &b_fused}};
  for (const auto& [name, surface] : surfaces) {
    const SurfaceGrid grid = sample_grid(*surface, config.grid);
    write_file(config.out_dir / (std::string(name) + ".dat"), [&](std::ostream& o) { write_grid(o, grid); });
  }
  const std::pair<const char*, const ChebDensity*> series[] = {{"m1", &m1}, {"m2", &m2}, {"m1+m2", &fused}};
  for (const auto& [name, s] : series) {
    write_file(config.out_dir / (std::string(name) + ".cheb"), [&](std::ostream& o) { write_coefficients(o, *s); });
  }

  DemoSummary summary;
  summary.mass_m1 = integral_full(m1);
  summary.mass_m2 = integral_full(m2);
  summary.mass_fused = integral_full(fused);
  const SurfaceGrid probe = sample_grid(fused, kArgmaxProbe);
  const auto best = std::max_element(probe.values.begin(), probe.values.end());
  const auto idx = static_cast<std::size_t>(best - probe.values.begin());
  summary.argmax_x = probe.axis[idx / kArgmaxProbe];
  summary.argmax_y = probe.axis[idx % kArgmaxProbe];
  summary.argmax_value = *best;
  summary.b1_whole = eval(b1, -1.0, 1.0);
  return summary;
}

std::string format_summary(const DemoSummary& s) {
  return fmt::format("mass m1={:.12f} m2={:.12f} m1+m2={:.12f} argmax=({:.6f},{:.6f}) value={:.9f} b1(-1,1)={:.12f}",
                     s.mass_m1, s.mass_m2, s.mass_fused, s.argmax_x, s.argmax_y, s.argmax_value, s.b1_whole);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dezert-Smarandache fusion on pre-Boolean algebras and generalized intervals", "dsmt"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::size_t guard = kDefaultHyperpowerGuard;
  std::string constraints;
  auto* hyper = app.add_subcommand("hyperpower", "List the hyperpower set, or its quotient by constraints");
  hyper->add_option("-n", n, "Number of atoms a0..a<n-1>")->required();
  hyper->add_option("-c,--constraints", constraints, "Constraint file, one '<expr> = <expr>' per line");
  hyper->add_option("--guard", guard, "Largest accepted atom count")->capture_default_str();

  bool show = false;
  auto* ord = app.add_subcommand("ordered", "Check the staircase model of ordered atoms");
  ord->add_option("-n", n, "Number of ordered atoms")->required();
  ord->add_flag("--show", show, "Render the staircase of every class");

  DemoConfig demo;
  std::string gauss1 = "-1,0", gauss2 = "0,1", out_dir = ".";
  auto* fdemo = app.add_subcommand("fuse-demo", "Fuse two Gaussian bbas and export plot grids");
  fdemo->add_option("--degree", demo.degree, "Chebyshev degree (power of two)")->capture_default_str();
  fdemo->add_option("--grid", demo.grid, "Export grid size G")->capture_default_str();
  fdemo->add_option("--out", out_dir, "Output directory")->capture_default_str();
  fdemo->add_option("--gauss1", gauss1, "Center cx,cy of the first pre-bba")->capture_default_str();
  fdemo->add_option("--gauss2", gauss2, "Center cx,cy of the second pre-bba")->capture_default_str();

  std::string in_a, in_b, target;
  auto* fz = app.add_subcommand("fuse", "Fuse two coefficient files");
  fz->add_option("first", in_a, "Coefficient file")->required();
  fz->add_option("second", in_b, "Coefficient file")->required();
  fz->add_option("--out", target, "Output coefficient file (default: stdout)");

  std::string bba_file;
  double lo = 0, hi = 0;
  auto* bel = app.add_subcommand("belief", "Belief of the generalized interval [lo, hi]");
  bel->add_option("file", bba_file, "Coefficient file")->required();
  bel->add_option("lo", lo, "Lower bound x")->required();
  bel->add_option("hi", hi, "Upper bound y")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*hyper) return cmd_hyperpower(n, guard, constraints, out);
    if (*ord) return cmd_ordered(n, show, out);
    if (*fdemo) {
      demo.gauss1 = parse_center(gauss1);
      demo.gauss2 = parse_center(gauss2);
      demo.out_dir = out_dir;
      out << format_summary(run_fuse_demo(demo)) << '\n';
      return kSuccess;
    }
    if (*fz) return cmd_fuse(in_a, in_b, target, out);
    if (*bel) return cmd_belief(bba_file, lo, hi, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const fs::filesystem_error& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error, out_of_range: bad option values
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dsmt::cli
