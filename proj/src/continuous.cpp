#include "dsmt/continuous.hpp"

#include <cmath>
#include <stdexcept>

namespace dsmt::continuous {

double belief(const ChebDensity& m, const GeneralizedInterval& iv) {
  return eval(belief_surface(m), iv.lo, iv.hi);
}

ChebDensity fuse(const ChebDensity& m1, const ChebDensity& m2) {
  if (m1.degree() != m2.degree()) throw std::invalid_argument("fuse: densities have different degrees");
  const std::size_t n = m1.degree();
  const std::size_t grid = 2 * n;

  struct Terms {
    std::vector<double> m, p, q, f;
  };
  auto sample = [grid](const ChebDensity& m) {
    return Terms{lobatto_values(m, grid), lobatto_values(integrate_x(m, Side::lower), grid),
                 lobatto_values(integrate_y(m, Side::upper), grid),
                 lobatto_values(cumulative(m, Corner{Side::lower, Side::upper}), grid)};
  };
  const Terms a = sample(m1);
  const Terms b = sample(m2);

  std::vector<double> fused(a.m.size());
  for (std::size_t i = 0; i < fused.size(); ++i) {
    fused[i] = a.m[i] * b.f[i] + a.f[i] * b.m[i] + a.p[i] * b.q[i] + a.q[i] * b.p[i];
  }
  return resize(from_lobatto_values(fused, grid), n);
}

Function2d gaussian_bump(double cx, double cy) {
  return [cx, cy](double x, double y) { return std::exp(-(x - cx) * (x - cx) - (y - cy) * (y - cy)); };
}

ChebDensity fit_on(const Function2d& f, const AffineDomain& domain, std::size_t degree) {
  if (!(domain.b > domain.a)) throw std::invalid_argument("fit_on: empty domain");
  const double j2 = domain.jacobian() * domain.jacobian();
  return fit([&](double s, double t) { return f(domain.from_reference(s), domain.from_reference(t)) * j2; },
             degree);
}

double belief_on(const ChebDensity& m, const AffineDomain& domain, const GeneralizedInterval& iv) {
  if (!(domain.b > domain.a)) throw std::invalid_argument("belief_on: empty domain");
  return belief(m, {domain.to_reference(iv.lo), domain.to_reference(iv.hi)});
}

}  // namespace dsmt::continuous
