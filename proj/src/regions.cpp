#include "niep/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "niep/error.hpp"

namespace niep {

bool in_pi_k(Complex z, std::size_t k, double tol) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "Pi_k needs k >= 1");
  if (k == 1) return std::abs(z - Complex{1.0, 0.0}) <= tol;
  if (k == 2) return std::abs(z.imag()) <= tol && std::abs(z.real()) <= 1.0 + tol;
  return pi_k_margin(z, k) <= tol;
}

double pi_k_margin(Complex z, std::size_t k) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "polygon margin needs k >= 3");
  // Edge j joins w^j and w^{j+1}; its outward normal points at angle
  // (2j+1) pi / k and it sits at distance cos(pi/k) from the origin.
  const double kk = static_cast<double>(k);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k; ++j) {
    const double theta = std::numbers::pi * (2.0 * static_cast<double>(j) + 1.0) / kk;
    worst = std::max(worst, z.real() * std::cos(theta) + z.imag() * std::sin(theta));
  }
  return worst - std::cos(std::numbers::pi / kk);
}

MirskyMembership in_perfect_mirsky(Complex z, std::size_t n, double tol) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  MirskyMembership m;
  m.exact = n <= 4;
  for (std::size_t k = 1; k <= n && !m.inside; ++k) m.inside = in_pi_k(z, k, tol);
  return m;
}

namespace {

ConditionReport tangent_bound(std::string name, Complex z, std::size_t m, double bound, double tol) {
  const double b = std::abs(z.imag());
  const double unit = std::max({1.0, std::abs(z), std::abs(bound)});
  if (b <= tol * unit) return {std::move(name), Verdict::Inapplicable, std::nullopt, "real value"};
  if (m == 2)
    return {std::move(name), Verdict::Violated, Witness{{2}, b, 0.0}, "only real values possible"};
  const double lhs = z.real() + b * std::tan(std::numbers::pi / static_cast<double>(m));
  const long long idx = static_cast<long long>(m);
  if (lhs - bound > tol * unit) return {std::move(name), Verdict::Violated, Witness{{idx}, lhs, bound}, {}};
  return {std::move(name), Verdict::Satisfied, Witness{{idx}, lhs, bound}, {}};
}

}  // namespace

ConditionReport dd_karpelevich_necessary(Complex z, std::size_t n, double tol) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "order must be >= 2");
  return tangent_bound("dd_karpelevich", z, n, 1.0, tol);
}

ConditionReport kellogg_stephens_bound(Complex z, std::size_t m, double rho, double tol) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "circuit length must be >= 2");
  if (!(rho > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho must be positive");
  return tangent_bound("kellogg_stephens", z, m, rho, tol);
}

bool theta3_membership(Complex z, double tol) { return in_pi_k(z, 3, tol) || in_pi_k(z, 2, tol); }

void Grid::validate() const {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 steps per axis");
  if (!(re1 > re0) || !(im1 > im0)) throw Error(ErrorCode::InvalidArgument, "grid bounds must increase");
}

namespace {

RasterCell cell_at(const Grid& g, std::size_t row, std::size_t col, std::size_t n, double tol) {
  const double last = static_cast<double>(g.steps - 1);
  RasterCell c;
  c.re = g.re0 + (g.re1 - g.re0) * static_cast<double>(col) / last;
  c.im = g.im0 + (g.im1 - g.im0) * static_cast<double>(row) / last;
  const Complex z{c.re, c.im};
  c.in_pi_union = in_perfect_mirsky(z, n, tol).inside;
  c.dd = n >= 2 ? dd_karpelevich_necessary(z, n, tol).verdict : Verdict::Inapplicable;
  return c;
}

}  // namespace

std::vector<RasterCell> region_raster(const Grid& grid, std::size_t n, double tol) {
  grid.validate();
  const std::size_t s = grid.steps;
  std::vector<RasterCell> out(s * s);
  const long long total = static_cast<long long>(s * s);
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    out[i] = cell_at(grid, i / s, i % s, n, tol);
  }
  return out;
}

namespace reference {

std::vector<RasterCell> region_raster(const Grid& grid, std::size_t n, double tol) {
  grid.validate();
  std::vector<RasterCell> out;
  out.reserve(grid.steps * grid.steps);
  for (std::size_t row = 0; row < grid.steps; ++row)
    for (std::size_t col = 0; col < grid.steps; ++col) out.push_back(cell_at(grid, row, col, n, tol));
  return out;
}

}  // namespace reference

}  // namespace niep
