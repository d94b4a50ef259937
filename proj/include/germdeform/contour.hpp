#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "germdeform/series.hpp"

namespace germdeform {

inline constexpr double kDefaultSepTol = 1e-6;
inline constexpr int kDefaultNodes = 256;

/// All roots of sum_k c[k] y^k. Exactly vanishing top coefficients are dropped
/// first. Aberth-Ehrlich iteration followed by a Newton polish; `warm` seeds the
/// iteration when it has the right length.
std::vector<cplx> poly_roots(std::span<const cplx> ascending, std::span<const cplx> warm = {});

/// Smallest pairwise distance; +inf for fewer than two points.
double min_separation(std::span<const cplx> pts);

/// Greedy nearest-neighbour reordering of `next` against `prev`.
std::vector<cplx> match_roots(std::span<const cplx> prev, std::vector<cplx> next);

std::vector<cplx> circle_nodes(double rho, int nodes);

using YCoeffFn = std::function<std::vector<cplx>(cplx x)>;

struct SheetSamples {
  double radius = 0.0;
  int nodes = 0;
  std::vector<cplx> x;
  std::vector<std::vector<cplx>> sheets;
};

/// Roots in y of the polynomial with coefficients coeffs(x_k), at each node of
/// |x| = rho. Throws ContourTooClose when two roots at a node are closer than sep_tol.
SheetSamples roots_on_circle(const YCoeffFn& coeffs, double rho, int nodes, double sep_tol = kDefaultSepTol);

/// (1 / 2 pi i) * contour integral of f dx over |x| = rho, trapezoid rule:
/// the mean of f(x_k) * x_k.
cplx contour_residue(std::span<const cplx> values, double rho);

/// Taylor coefficients c_0..c_{N-1} from samples on |x| = rho. Throws
/// AliasingDetected when the last scaled coefficient |c_{N-1}| rho^(N-1) exceeds
/// a tenth of the largest scaled coefficient (and an absolute floor of 1e-13).
TruncSeries cauchy_taylor(std::span<const cplx> values, double rho, int order);

/// Value and y-derivative of a polynomial family at (x, y).
using PEval = std::function<std::pair<cplx, cplx>(cplx x, cplx y)>;

/// Monic degree-d factor of P(x, .) collecting the roots in |y| < rho_y, per
/// x node. Returned coefficients are ascending with leading 1. Power sums come
/// from the trapezoid rule on |y| = rho_y; coefficients from Newton's identities.
std::vector<std::vector<cplx>> numeric_weierstrass_prepare(const PEval& p, double rho_y, int d,
                                                           std::span<const cplx> x_nodes,
                                                           int y_nodes = kDefaultNodes);

/// Coefficients of the monic polynomial with the given roots, ascending.
std::vector<cplx> poly_from_roots(std::span<const cplx> roots);

}  // namespace germdeform
