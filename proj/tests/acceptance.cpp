// Acceptance suite: one line per criterion, non-zero exit when any fails.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "dsmt/chebyshev.hpp"
#include "dsmt/cli.hpp"
#include "dsmt/continuous.hpp"
#include "dsmt/expression.hpp"
#include "dsmt/finite_belief.hpp"
#include "dsmt/ordered.hpp"
#include "dsmt/prebool.hpp"
#include "oracles/oracles.hpp"

using namespace dsmt;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / fmt::format("dsmt_acceptance_{}_{}", name, std::random_device{}());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Proposition P3(std::string_view s) { return parse_proposition(s, 3); }

ConstraintSet example3() { return {{{P3("a0 & a1"), P3("a0 & a2")}, {P3("a0 & a2"), P3("a1 & a2")}}}; }

// 1 -------------------------------------------------------------------------
Verdict hyperpower_counts() {
  Verdict v;
  const auto t0 = Clock::now();
  const std::size_t c1 = enumerate_hyperpower(1).size();
  const std::size_t c2 = enumerate_hyperpower(2).size();
  const std::size_t c3 = enumerate_hyperpower(3).size();
  const double small = seconds_since(t0);
  const auto t1 = Clock::now();
  const auto h4 = enumerate_hyperpower(4);
  const double big = seconds_since(t1);

  std::set<Proposition> oracle_set;
  for (std::uint32_t antichain : oracle::all_antichains(4)) {
    std::vector<Clause> clauses;
    for (unsigned s = 0; s < 16; ++s)
      if ((antichain >> s) & 1U) clauses.push_back(s);
    oracle_set.insert(Proposition::from_clauses(clauses));
  }
  v.require(c1 == 3 && c2 == 6 && c3 == 20, fmt::format("counts {} {} {}", c1, c2, c3));
  v.require(h4.size() == 168 && oracle_set.size() == 168, fmt::format("n=4 count {} oracle {}", h4.size(), oracle_set.size()));
  v.require(std::set<Proposition>(h4.begin(), h4.end()) == oracle_set, "n=4 set differs from the antichain oracle");
  v.require(small < 1.0, fmt::format("n<=3 took {:.3f}s", small));
  v.require(big < 30.0, fmt::format("n=4 took {:.3f}s", big));
  if (v.pass) v.detail = fmt::format("3/6/20/168, n<=3 in {:.4f}s, n=4 in {:.4f}s", small, big);
  return v;
}

// 2 -------------------------------------------------------------------------
Verdict example3_quotient() {
  Verdict v;
  const Quotient q = quotient(enumerate_hyperpower(3), example3());
  std::set<Proposition> reps(q.representatives().begin(), q.representatives().end());
  std::set<Proposition> expected;
  for (const char* s : {"bot", "a0&a1&a2", "a0", "a1", "a2", "a0|a1", "a1|a2", "a2|a0", "a0|a1|a2", "top"})
    expected.insert(P3(s));
  v.require(q.size() == 10, fmt::format("{} classes", q.size()));
  v.require(reps == expected, "representatives differ");

  std::set<Proposition> merged;
  for (const char* s : {"a0&a1&a2", "a0&a1", "a1&a2", "a2&a0", "(a0|a1)&a2", "(a1|a2)&a0", "(a2|a0)&a1",
                        "(a0&a1)|(a1&a2)|(a2&a0)"})
    merged.insert(P3(s));
  const auto members = q.members(q.class_of(P3("a0 & a1 & a2")));
  v.require(std::set<Proposition>(members.begin(), members.end()) == merged, "merged class differs");
  v.require(q.representative(q.class_of(P3("(a0 & a1) | (a1 & a2) | (a2 & a0)"))) == P3("a0 & a1 & a2"),
            "merged representative");
  if (v.pass) v.detail = "10 classes, 8-member class with representative ((a0 & a1) & a2)";
  return v;
}

// 3 -------------------------------------------------------------------------
Verdict ordered_isomorphism() {
  Verdict v;
  const auto t0 = Clock::now();
  std::string counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = ordered::verify_isomorphism(n);
    const std::size_t expected = oracle::count_increasing(static_cast<int>(n));
    v.require(r.passed(), fmt::format("n={} report failed ({} counterexamples)", n, r.counterexamples.size()));
    v.require(r.class_count == expected && r.image_count == expected,
              fmt::format("n={} classes {} images {} oracle {}", n, r.class_count, r.image_count, expected));
    counts += fmt::format("{}{}", n == 1 ? "" : "/", r.class_count);
  }
  const double t = seconds_since(t0);
  v.require(t < 60.0, fmt::format("took {:.2f}s", t));
  if (v.pass) v.detail = fmt::format("classes = increasing subsets {} in {:.2f}s", counts, t);
  return v;
}

// 4 -------------------------------------------------------------------------
template <class T>
finite::BasicBba<T> random_bba(std::mt19937_64& rng, const Algebra& a) {
  std::uniform_int_distribution<int> weight(0, 50);
  std::vector<int> w(a->size(), 0);
  int total = 0;
  for (std::uint32_t i = 1; i + 1 < a->size(); ++i) total += (w[i] = weight(rng));
  if (total == 0) total = w[1] = 1;
  typename finite::BasicBba<T>::Masses m;
  for (std::uint32_t i = 0; i < a->size(); ++i)
    if (w[i] > 0) m[ClassId{i}] = T(w[i]) / T(total);
  return finite::BasicBba<T>(a, m);
}

Verdict finite_fusion() {
  Verdict v;
  const Algebra a = make_algebra(enumerate_hyperpower(3), example3());
  std::mt19937_64 rng(2024);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m1 = random_bba<Rational>(rng, a), m2 = random_bba<Rational>(rng, a), m3 = random_bba<Rational>(rng, a);
    const auto f = finite::fuse(m1, m2);
    v.require(f.masses() == finite::fuse(m2, m1).masses(), "commutativity (exact)");
    v.require(finite::fuse(f, m3).masses() == finite::fuse(m1, finite::fuse(m2, m3)).masses(), "associativity (exact)");
    v.require(f.total() == Rational(1), "conservation (exact)");
    v.require(finite::bba_from_bel(a, finite::bel_all(m1)).masses() == m1.masses(), "roundtrip (exact)");

    const auto d1 = random_bba<double>(rng, a), d2 = random_bba<double>(rng, a), d3 = random_bba<double>(rng, a);
    const auto l = finite::fuse(finite::fuse(d1, d2), d3), r = finite::fuse(d1, finite::fuse(d2, d3));
    const auto s = finite::fuse(d1, d2), t = finite::fuse(d2, d1);
    const auto back = finite::bba_from_bel(a, finite::bel_all(d1));
    worst = std::max(worst, std::abs(s.total() - 1.0));
    for (std::uint32_t i = 0; i < a->size(); ++i) {
      const ClassId c{i};
      worst = std::max({worst, std::abs(l.mass(c) - r.mass(c)), std::abs(s.mass(c) - t.mass(c)),
                        std::abs(back.mass(c) - d1.mass(c))});
    }
  }
  v.require(worst <= 1e-12, fmt::format("double precision deviation {:.3e}", worst));
  if (v.pass) v.detail = fmt::format("100 trials exact in rationals, double deviation {:.1e}", worst);
  return v;
}

// 5 -------------------------------------------------------------------------
double mm1(double x, double y) { return std::exp(-(x + 1) * (x + 1) - y * y); }

Verdict spectral_accuracy() {
  Verdict v;
  const continuous::ChebDensity d = continuous::fit(mm1, 128);
  double probe = 0;
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double x = -1 + 0.02 * i, y = -1 + 0.02 * j;
      probe = std::max(probe, std::abs(continuous::eval(d, x, y) - mm1(x, y)));
    }
  double nodes = 0;
  const auto x = continuous::lobatto_nodes(128);
  for (double xi : x)
    for (double yj : x) nodes = std::max(nodes, std::abs(continuous::eval(d, xi, yj) - mm1(xi, yj)));
  v.require(probe <= 1e-12, fmt::format("probe error {:.3e}", probe));
  v.require(nodes <= 1e-13, fmt::format("node error {:.3e}", nodes));
  if (v.pass) v.detail = fmt::format("probe {:.1e}, nodes {:.1e}", probe, nodes);
  return v;
}

// 6 -------------------------------------------------------------------------
Verdict continuous_conservation() {
  using namespace continuous;
  Verdict v;
  auto fused_mass = [](double ax, double ay, double bx, double by) {
    return integral_full(fuse(normalize(fit(gaussian_bump(ax, ay), 128)), normalize(fit(gaussian_bump(bx, by), 128))));
  };
  double worst = std::abs(fused_mass(-1, 0, 0, 1) - 1.0);
  v.require(worst <= 1e-6, fmt::format("demo pair deviation {:.3e}", worst));
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> c(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const double ax = c(rng), ay = c(rng), bx = c(rng), by = c(rng);
    const double dev = std::abs(fused_mass(ax, ay, bx, by) - 1.0);
    worst = std::max(worst, dev);
    v.require(dev <= 1e-6, fmt::format("pair ({:.3f},{:.3f})/({:.3f},{:.3f}) deviation {:.3e}", ax, ay, bx, by, dev));
  }
  if (v.pass) v.detail = fmt::format("11 pairs, max deviation {:.1e}", worst);
  return v;
}

// 7 -------------------------------------------------------------------------
Verdict grid_oracle() {
  using namespace continuous;
  Verdict v;
  const int g = 201;
  const ChebDensity m1 = normalize(fit(gaussian_bump(-1, 0), 32));
  const ChebDensity m2 = normalize(fit(gaussian_bump(0, 1), 32));
  const ChebDensity f = fuse(m1, m2);
  const auto grid = oracle::grid_fusion([&](double x, double y) { return eval(m1, x, y); },
                                        [&](double x, double y) { return eval(m2, x, y); }, g);
  std::vector<double> centers(g);
  for (int i = 0; i < g; ++i) centers[i] = -1 + (i + 0.5) * 2.0 / g;
  const auto spectral = eval_grid(f, centers, centers);
  double worst = 0;
  for (std::size_t k = 0; k < spectral.size(); ++k) worst = std::max(worst, std::abs(spectral[k] - grid[k]));
  v.require(worst <= 1e-2, fmt::format("max-norm difference {:.3e}", worst));
  if (v.pass) v.detail = fmt::format("max-norm difference {:.2e}", worst);
  return v;
}

// 8 -------------------------------------------------------------------------
Verdict demo_semantics() {
  using namespace continuous;
  Verdict v;
  cli::DemoConfig config;
  config.out_dir = scratch("semantics");
  const cli::DemoSummary s = cli::run_fuse_demo(config);
  fs::remove_all(config.out_dir);

  const double dist = std::hypot(s.argmax_x, s.argmax_y);
  v.require(dist <= 0.05, fmt::format("fused argmax ({:.4f},{:.4f}) is {:.4f} from (0,0)", s.argmax_x, s.argmax_y, dist));

  const ChebDensity m1 = normalize(fit(gaussian_bump(-1, 0), 128));
  const ChebDensity m2 = normalize(fit(gaussian_bump(0, 1), 128));
  const ChebDensity surfaces[] = {belief_surface(m1), belief_surface(m2), belief_surface(fuse(m1, m2))};
  const char* names[] = {"b1", "b2", "b1+b2"};
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> u(-1, 1), t(0, 1);
  for (int k = 0; k < 3; ++k) {
    const double whole = eval(surfaces[k], -1, 1);
    v.require(std::abs(whole - 1.0) <= 1e-9, fmt::format("{}(-1,1) = {:.12f}", names[k], whole));
  }
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const double lo = u(rng), hi = u(rng);
    const double lo2 = lo - (lo + 1) * t(rng), hi2 = hi + (1 - hi) * t(rng);  // contains (lo, hi)
    for (const auto& b : surfaces)
      if (eval(b, lo2, hi2) < eval(b, lo, hi) - 1e-12) ++violations;
  }
  v.require(violations == 0, fmt::format("{} monotonicity violations", violations));
  if (v.pass) v.detail = fmt::format("argmax ({:.4f},{:.4f}), beliefs whole=1, monotone", s.argmax_x, s.argmax_y);
  return v;
}

// 9 -------------------------------------------------------------------------
Verdict demo_runtime() {
  Verdict v;
  const fs::path dir = scratch("runtime");
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli::run({"fuse-demo", "--out", dir.string()}, out, err);
  const double t = seconds_since(t0);
  fs::remove_all(dir);
  v.require(code == 0, fmt::format("exit code {}: {}", code, err.str()));
  v.require(t < 5.0, fmt::format("took {:.2f}s", t));
  if (v.pass) v.detail = fmt::format("fuse-demo at degree 128 in {:.3f}s", t);
  return v;
}

// 10 ------------------------------------------------------------------------
Verdict interval_stability() {
  using continuous::GeneralizedInterval;
  Verdict v;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1, 1);
  long failures = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const GeneralizedInterval a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const GeneralizedInterval m = continuous::interval_meet(a, b);
    bool ok = m.lo == std::max(a.lo, b.lo) && m.hi == std::min(a.hi, b.hi);
    ok = ok && m.lo >= -1 && m.lo <= 1 && m.hi >= -1 && m.hi <= 1;
    ok = ok && m == continuous::interval_meet(b, a) && continuous::interval_meet(a, a) == a;
    ok = ok && continuous::interval_meet(m, c) == continuous::interval_meet(a, continuous::interval_meet(b, c));
    const double p = u(rng), q = u(rng);
    ok = ok && m.contains(p, q) == (a.contains(p, q) && b.contains(p, q));
    failures += !ok;
  }
  v.require(failures == 0, fmt::format("{} of 100000 pairs violate the law", failures));
  if (v.pass) v.detail = "100000 pairs exact";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"hyperpower cardinalities", hyperpower_counts},
      {"constrained quotient classes", example3_quotient},
      {"ordered staircase isomorphism", ordered_isomorphism},
      {"finite fusion properties", finite_fusion},
      {"spectral fit accuracy", spectral_accuracy},
      {"continuous fusion conservation", continuous_conservation},
      {"spectral vs cell-grid fusion", grid_oracle},
      {"demo semantics", demo_semantics},
      {"fuse-demo runtime", demo_runtime},
      {"interval conjunction law", interval_stability},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << fmt::format("[{:>2}] {} {}: {}", index, v.pass ? "PASS" : "FAIL", c.name, v.detail) << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", index - failed, index) << std::endl;
  return failed == 0 ? 0 : 1;
}
