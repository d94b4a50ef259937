#pragma once

#include <optional>
#include <vector>

#include "germdeform/polynomial.hpp"

namespace germdeform {

/// A normalized Weierstrass polynomial f(x, y), monic of degree d in y.
struct Germ {
  BiPoly f;
  int d = 0;
  int r = 0;
  Poly disc;
  double delta1 = 1.0;
  double delta2 = 1.0;
  // Internal x is input x divided by x_scale; f here is f_input(x_scale * x, y).
  double x_scale = 1.0;
  bool delta1_given = false;
  bool delta2_given = false;
  // Jet order used by the local computations (2r + 8 unless overridden).
  int order = 8;

  YPoly series(int n) const { return f.to_ypoly(n); }
};

/// Builds a Germ from raw terms coefficient * x^a * y^b.
///
/// Divides out a constant leading y-coefficient, checks the Weierstrass form,
/// rescales x so that branch points other than the origin sit at |x| >= 2 when
/// delta1 is not given, and picks delta2 as twice the largest root modulus over
/// |x| <= delta1.
Germ normalize_germ(const std::vector<Term>& raw, std::optional<double> delta1 = std::nullopt,
                    std::optional<double> delta2 = std::nullopt);

/// Order of vanishing of the discriminant at x = 0.
int dimension(const Germ& g);

/// Largest |y| over the roots of P(x, .) for x sampled in |x| <= radius.
double max_root_modulus(const BiPoly& p, double radius, int nodes = 128);

}  // namespace germdeform
