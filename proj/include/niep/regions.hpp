#pragma once

#include <cstddef>
#include <vector>

#include "niep/necessary.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Closed convex hull of the k-th roots of unity. Points within tol of the
/// boundary count as inside.
bool in_pi_k(Complex z, std::size_t k, double tol = kDefaultTolerance);

/// For k >= 3: the largest edge projection of z minus the apothem cos(pi/k).
/// Nonpositive exactly on Pi_k.
double pi_k_margin(Complex z, std::size_t k);

struct MirskyMembership {
  bool inside = false;
  /// True when the union of Pi_1..Pi_n is known to be the exact region (n <= 4).
  bool exact = false;
};

/// Membership in Pi_1 u ... u Pi_n.
MirskyMembership in_perfect_mirsky(Complex z, std::size_t n, double tol = kDefaultTolerance);

/// a + |b| tan(pi/n) <= 1 for z = a + bi, b != 0. Necessary for z to be an
/// eigenvalue of an n-by-n stochastic matrix.
ConditionReport dd_karpelevich_necessary(Complex z, std::size_t n, double tol = kDefaultTolerance);

/// Eigenvalue bound from the longest circuit m of the digraph:
/// a + |b| tan(pi/m) <= rho, and only real eigenvalues when m = 2.
ConditionReport kellogg_stephens_bound(Complex z, std::size_t m, double rho, double tol = kDefaultTolerance);

/// Exact eigenvalue region of 3-by-3 stochastic matrices: Pi_3 u [-1, 1].
bool theta3_membership(Complex z, double tol = kDefaultTolerance);

struct Grid {
  double re0 = -1.0, re1 = 1.0, im0 = -1.0, im1 = 1.0;
  std::size_t steps = 101;  // samples per axis, endpoints included

  void validate() const;
};

struct RasterCell {
  double re = 0.0;
  double im = 0.0;
  bool in_pi_union = false;
  Verdict dd = Verdict::Inapplicable;

  friend bool operator==(const RasterCell&, const RasterCell&) = default;
};

/// Row-major raster (imaginary part outer, real part inner) of the
/// Perfect-Mirsky union and the DD verdict for order n. Parallel.
std::vector<RasterCell> region_raster(const Grid& grid, std::size_t n, double tol = kDefaultTolerance);

namespace reference {
std::vector<RasterCell> region_raster(const Grid& grid, std::size_t n, double tol = kDefaultTolerance);
}

}  // namespace niep
