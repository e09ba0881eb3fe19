#include "dsmt/chebyshev.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <fftw3.h>

#include "dsmt/error.hpp"

namespace dsmt::continuous {

namespace {

// The FFTW planner is not reentrant; plan execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// In-place 2-D REDFT00 (type-I DCT, unnormalized) on an (m+1)×(m+1) array:
///   Y[k] = X[0] + (-1)^k X[m] + 2 Σ_{j=1}^{m-1} X[j] cos(πjk/m)   per axis.
void dct1_2d(std::vector<double>& data, std::size_t m) {
  const int n = static_cast<int>(m + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_r2r_2d(n, n, data.data(), data.data(), FFTW_REDFT00, FFTW_REDFT00, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw: could not plan a cosine transform");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

double clenshaw(const double* c, std::size_t stride, std::size_t count, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = count; k-- > 1;) {
    const double b0 = c[k * stride] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

void check_domain(double v, const char* axis) {
  if (!(v >= -1.0 && v <= 1.0)) {
    throw std::domain_error(std::string("chebyshev: ") + axis + " coordinate outside [-1,1]");
  }
}

std::vector<double> chebyshev_table(std::span<const double> pts, std::size_t order) {
  std::vector<double> t(pts.size() * order);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    check_domain(pts[i], "grid");
    double* row = &t[i * order];
    row[0] = 1.0;
    if (order > 1) row[1] = pts[i];
    for (std::size_t k = 2; k < order; ++k) row[k] = 2.0 * pts[i] * row[k - 1] - row[k - 2];
  }
  return t;
}

void set_constant(std::vector<double>& b, Side side) {
  // Lower: vanish at -1, where T_k = (-1)^k. Upper: ∫_x^1 = B(1) - B(x).
  double at_end = 0.0;
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (side == Side::lower) {
      at_end += (k % 2 == 0) ? b[k] : -b[k];
    } else {
      at_end += b[k];
      b[k] = -b[k];
    }
  }
  b[0] = side == Side::lower ? -at_end : at_end;
}

}  // namespace

ChebDensity::ChebDensity(std::size_t degree, std::vector<double> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (degree + 1) * (degree + 1)) {
    throw std::invalid_argument("ChebDensity: expected " + std::to_string((degree + 1) * (degree + 1)) +
                                " coefficients");
  }
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::vector<double> lobatto_nodes(std::size_t n) {
  if (n == 0) return {1.0};
  std::vector<double> x(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    // sin form keeps the nodes exactly antisymmetric and hits 0 exactly
    x[i] = std::sin(std::numbers::pi * (static_cast<double>(n) - 2.0 * static_cast<double>(i)) /
                    (2.0 * static_cast<double>(n)));
  }
  return x;
}

ChebDensity fit(const Function2d& f, std::size_t degree) {
  if (!is_power_of_two(degree)) throw std::invalid_argument("fit: degree must be a power of two");
  const auto nodes = lobatto_nodes(degree);
  const std::size_t n = degree + 1;
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = f(nodes[i], nodes[j]);
      if (!std::isfinite(v)) throw NumericError("fit: non-finite sample at a Lobatto node");
      values[i * n + j] = v;
    }
  }
  return from_lobatto_values(values, degree);
}

ChebDensity from_lobatto_values(std::span<const double> values, std::size_t degree) {
  const std::size_t n = degree + 1;
  if (values.size() != n * n) throw std::invalid_argument("from_lobatto_values: size mismatch");
  if (degree == 0) return ChebDensity(0, {values[0]});
  std::vector<double> data(values.begin(), values.end());
  dct1_2d(data, degree);
  const double scale = 1.0 / (static_cast<double>(degree) * static_cast<double>(degree));
  for (std::size_t k = 0; k < n; ++k) {
    const double sk = (k == 0 || k == degree) ? 0.5 : 1.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double sl = (l == 0 || l == degree) ? 0.5 : 1.0;
      data[k * n + l] *= scale * sk * sl;
    }
  }
  return ChebDensity(degree, std::move(data));
}

std::vector<double> lobatto_values(const ChebDensity& d, std::size_t grid_degree) {
  if (grid_degree < d.degree()) throw std::invalid_argument("lobatto_values: grid coarser than the series");
  const std::size_t n = grid_degree + 1;
  if (grid_degree == 0) return {d(0, 0)};
  std::vector<double> data(n * n, 0.0);
  for (std::size_t k = 0; k <= d.degree(); ++k) {
    const double tk = (k == 0 || k == grid_degree) ? 1.0 : 0.5;
    for (std::size_t l = 0; l <= d.degree(); ++l) {
      const double tl = (l == 0 || l == grid_degree) ? 1.0 : 0.5;
      data[k * n + l] = d(k, l) * tk * tl;
    }
  }
  dct1_2d(data, grid_degree);
  return data;
}

double eval(const ChebDensity& d, double x, double y) {
  check_domain(x, "x");
  check_domain(y, "y");
  const std::size_t n = d.order();
  std::vector<double> rows(n);
  const double* c = d.coefficients().data();
  for (std::size_t k = 0; k < n; ++k) rows[k] = clenshaw(c + k * n, 1, n, y);
  return clenshaw(rows.data(), 1, n, x);
}

std::vector<double> eval_grid(const ChebDensity& d, std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = d.order();
  const auto tx = chebyshev_table(xs, n);
  const auto ty = chebyshev_table(ys, n);
  const auto c = d.coefficients();

  // partial[i][l] = Σ_k T_k(x_i) c[k][l]
  std::vector<double> partial(xs.size() * n, 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double t = tx[i * n + k];
      for (std::size_t l = 0; l < n; ++l) partial[i * n + l] += t * c[k * n + l];
    }

  std::vector<double> out(xs.size() * ys.size(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) s += partial[i * n + l] * ty[j * n + l];
      out[i * ys.size() + j] = s;
    }
  return out;
}

double integral_full(const ChebDensity& d) {
  auto weight = [](std::size_t k) {
    return k % 2 == 0 ? 2.0 / (1.0 - static_cast<double>(k) * static_cast<double>(k)) : 0.0;
  };
  double total = 0.0;
  for (std::size_t k = 0; k <= d.degree(); k += 2)
    for (std::size_t l = 0; l <= d.degree(); l += 2) total += d(k, l) * weight(k) * weight(l);
  return total;
}

ChebDensity normalize(const ChebDensity& d) {
  const double total = integral_full(d);
  if (!(total > 0.0) || !std::isfinite(total)) throw NumericError("normalize: total mass is not positive");
  std::vector<double> c(d.coefficients().begin(), d.coefficients().end());
  for (double& v : c) v /= total;
  return ChebDensity(d.degree(), std::move(c));
}

ChebDensity resize(const ChebDensity& d, std::size_t degree) {
  ChebDensity out(degree);
  const std::size_t keep = std::min(degree, d.degree());
  for (std::size_t k = 0; k <= keep; ++k)
    for (std::size_t l = 0; l <= keep; ++l) out(k, l) = d(k, l);
  return out;
}

std::vector<double> antiderivative(std::span<const double> a) {
  const std::size_t len = a.size();
  std::vector<double> b(len + 1, 0.0);
  auto at = [&](std::size_t k) { return k < len ? a[k] : 0.0; };
  for (std::size_t k = 1; k <= len; ++k) {
    // T_0 integrates to T_1 while T_k (k >= 1) contributes to k±1 with
    // weights 1/(2(k±1)), hence the doubled a_0 in the k = 1 term
    const double prev = k == 1 ? 2.0 * at(0) : at(k - 1);
    b[k] = (prev - at(k + 1)) / (2.0 * static_cast<double>(k));
  }
  return b;
}

ChebDensity integrate_x(const ChebDensity& d, Side side) {
  const std::size_t n = d.order();
  ChebDensity out(d.degree() + 1);
  std::vector<double> column(n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) column[k] = d(k, l);
    auto b = antiderivative(column);
    set_constant(b, side);
    for (std::size_t k = 0; k < b.size(); ++k) out(k, l) = b[k];
  }
  return out;
}

ChebDensity integrate_y(const ChebDensity& d, Side side) {
  const std::size_t n = d.order();
  ChebDensity out(d.degree() + 1);
  for (std::size_t k = 0; k < n; ++k) {
    auto b = antiderivative(d.coefficients().subspan(k * n, n));
    set_constant(b, side);
    for (std::size_t l = 0; l < b.size(); ++l) out(k, l) = b[l];
  }
  return out;
}

ChebDensity cumulative(const ChebDensity& d, Corner corner) {
  // integrate_x pads the y-axis with a zero column, so the second pass leaves
  // an all-zero outer row and column that the resize drops exactly
  return resize(integrate_y(integrate_x(d, corner.x), corner.y), d.degree() + 1);
}

}  // namespace dsmt::continuous
