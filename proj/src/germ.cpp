#include "germdeform/germ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "germdeform/contour.hpp"
#include "germdeform/error.hpp"

namespace germdeform {

namespace {

double disc_tol(const Poly& disc) { return 1e-12 * std::max(1.0, disc.max_abs()); }

// Roots of disc / x^r.
std::vector<cplx> nonzero_branch_points(const Poly& disc, int r) {
  const Poly t = disc.trimmed(disc_tol(disc));
  std::vector<cplx> c(t.coeffs().begin() + r, t.coeffs().end());
  return poly_roots(c);
}

}  // namespace

double max_root_modulus(const BiPoly& p, double radius, int nodes) {
  double m = 0.0;
  for (const double frac : {1.0, 0.75, 0.5, 0.25}) {
    for (const cplx x : circle_nodes(radius * frac, nodes)) {
      for (const cplx y : poly_roots(p.y_coeffs_at(x))) m = std::max(m, std::abs(y));
    }
  }
  return m;
}

int dimension(const Germ& g) {
  const Poly disc = discriminant_x(g.f);
  if (disc.degree(disc_tol(disc)) < 0) throw Error(ErrorCode::DegenerateGerm, "discriminant vanishes identically");
  return disc.valuation(disc_tol(disc));
}

Germ normalize_germ(const std::vector<Term>& raw, std::optional<double> delta1, std::optional<double> delta2) {
  BiPoly f = BiPoly::from_terms(raw);
  const double scale = std::max(1.0, f.max_abs());
  const double tol = 1e-14 * scale;
  const int d = f.y_degree(tol);
  if (d < 1) throw Error(ErrorCode::NotWeierstrass, "polynomial has no positive degree in y");
  const Poly lead = f.y_coeff(d);
  if (lead.degree(tol) != 0) throw Error(ErrorCode::NotWeierstrass, "leading y-coefficient is not a nonzero constant");
  f *= 1.0 / lead[0];
  // drop roundoff above the leading term
  BiPoly clean;
  for (const auto& t : f.terms()) {
    if (t.b > d) continue;
    clean.add_term(t.a, t.b, t.b == d ? (t.a == 0 ? cplx{1.0} : cplx{}) : t.c);
  }
  f = clean;
  for (int b = 0; b < d; ++b) {
    if (std::abs(f.coeff(0, b)) > tol) {
      throw Error(ErrorCode::NotWeierstrass, "lower y-coefficients must vanish at x = 0");
    }
  }

  Germ g;
  g.d = d;
  g.f = f;
  g.disc = discriminant_x(f);
  if (g.disc.degree(disc_tol(g.disc)) < 0) {
    throw Error(ErrorCode::DegenerateGerm, "discriminant vanishes identically (non-reduced germ)");
  }
  g.r = g.disc.valuation(disc_tol(g.disc));

  auto nearest = [](const std::vector<cplx>& roots) {
    double m = std::numeric_limits<double>::infinity();
    for (const cplx z : roots) m = std::min(m, std::abs(z));
    return m;
  };

  if (delta1) {
    if (!(*delta1 > 0.0) || !std::isfinite(*delta1)) throw Error(ErrorCode::InvalidInput, "delta1 must be positive");
    g.delta1 = *delta1;
    g.delta1_given = true;
    if (nearest(nonzero_branch_points(g.disc, g.r)) < g.delta1) {
      throw Error(ErrorCode::OutOfDomain, "branch points other than the origin lie inside |x| < delta1");
    }
  } else {
    const double m = nearest(nonzero_branch_points(g.disc, g.r));
    const double lambda = std::min(1.0, m / 2.0);
    if (lambda < 1.0) {
      g.x_scale = lambda;
      g.f = g.f.scale_x(lambda);
      g.disc = discriminant_x(g.f);
    }
    g.delta1 = 1.0;
  }

  const double ymax = max_root_modulus(g.f, g.delta1);
  if (delta2) {
    if (!(*delta2 > 0.0) || !std::isfinite(*delta2)) throw Error(ErrorCode::InvalidInput, "delta2 must be positive");
    if (ymax >= *delta2) throw Error(ErrorCode::OutOfDomain, "fiber roots over |x| <= delta1 reach |y| >= delta2");
    g.delta2 = *delta2;
    g.delta2_given = true;
  } else {
    g.delta2 = ymax > 0.0 ? 2.0 * ymax : 1.0;
  }
  g.order = 2 * g.r + 8;
  return g;
}

}  // namespace germdeform
