#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dsmt::continuous {

/// Real function on the square [-1,1]².
using Function2d = std::function<double(double, double)>;

/// A 2-D Chebyshev series Σ c[k][l] T_k(x) T_l(y) on [-1,1]², k the x-degree.
/// Coefficients form a square (N+1)×(N+1) block stored row-major in k.
class ChebDensity {
 public:
  ChebDensity() : ChebDensity(0) {}
  explicit ChebDensity(std::size_t degree) : degree_(degree), coeffs_((degree + 1) * (degree + 1), 0.0) {}
  /// Throws std::invalid_argument unless coeffs has (degree+1)² entries.
  ChebDensity(std::size_t degree, std::vector<double> coeffs);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return degree_ + 1; }

  double& operator()(std::size_t k, std::size_t l) { return coeffs_[k * order() + l]; }
  double operator()(std::size_t k, std::size_t l) const { return coeffs_[k * order() + l]; }

  std::span<const double> coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const ChebDensity&, const ChebDensity&) = default;

 private:
  std::size_t degree_;
  std::vector<double> coeffs_;
};

bool is_power_of_two(std::size_t n) noexcept;

/// Chebyshev–Lobatto nodes cos(πi/n), i = 0..n (from +1 down to -1).
std::vector<double> lobatto_nodes(std::size_t n);

/// Interpolates f on the (N+1)² tensor Lobatto grid; the coefficients come
/// from a type-I discrete cosine transform along each axis.
///
/// Throws std::invalid_argument unless N is a power of two, NumericError when
/// a sample is not finite.
ChebDensity fit(const Function2d& f, std::size_t degree);

/// Coefficients of the degree-M interpolant of tensor-grid samples,
/// values[i*(M+1)+j] = f(node_i, node_j).
ChebDensity from_lobatto_values(std::span<const double> values, std::size_t degree);

/// Values of d on the (M+1)² Lobatto grid, M >= d.degree(), same layout as
/// `from_lobatto_values`.
std::vector<double> lobatto_values(const ChebDensity& d, std::size_t grid_degree);

/// Clenshaw evaluation. Throws std::domain_error outside [-1,1]².
double eval(const ChebDensity& d, double x, double y);

/// Tensor-grid evaluation, result[i*ys.size()+j] = d(xs[i], ys[j]).
std::vector<double> eval_grid(const ChebDensity& d, std::span<const double> xs, std::span<const double> ys);

/// Exact integral over [-1,1]²: Σ over even k, l of c[k][l]·w_k·w_l with
/// w_k = 2/(1-k²).
double integral_full(const ChebDensity& d);

/// Scaled to unit integral. Throws NumericError when the integral is not
/// positive and finite.
ChebDensity normalize(const ChebDensity& d);

/// Zero-padded or truncated copy.
ChebDensity resize(const ChebDensity& d, std::size_t degree);

/// Which end of an axis a running integral starts from.
enum class Side {
  lower,  // ∫_{-1}^{x}
  upper,  // ∫_{x}^{1}
};

struct Corner {
  Side x;
  Side y;
};

/// Antiderivative of a 1-D series, degree raised by one, constant term 0:
/// b_1 = a_0 − a_2/2 and b_k = (a_{k−1} − a_{k+1})/(2k) for k ≥ 2.
std::vector<double> antiderivative(std::span<const double> a);

/// Running integral along one axis from the given side. The result has
/// degree N+1 and vanishes where the integration starts.
ChebDensity integrate_x(const ChebDensity& d, Side side);
ChebDensity integrate_y(const ChebDensity& d, Side side);

/// Running integral along both axes, e.g. Corner{lower, upper} gives
/// F(x, y) = ∫_{-1}^{x} ∫_{y}^{1} d(u, v) dv du. Degree N+1.
ChebDensity cumulative(const ChebDensity& d, Corner corner);

}  // namespace dsmt::continuous
