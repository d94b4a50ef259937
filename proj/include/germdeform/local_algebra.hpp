#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "germdeform/germ.hpp"

namespace germdeform {

using SeriesMatrix = std::vector<std::vector<TruncSeries>>;  // [row][col]

SeriesMatrix identity_matrix(int n, int order);
SeriesMatrix matmul(const SeriesMatrix& a, const SeriesMatrix& b);

/// Matrix of multiplication by phi on C{x}[y]/<f> in the basis 1, y, ..., y^(d-1):
/// column k holds the coefficients of (phi * y^k) mod f.
SeriesMatrix mult_matrix(const YPoly& f, const YPoly& phi);

struct SmithForm {
  std::vector<int> orders;  // ascending
  SeriesMatrix u, v, diag;  // u * m * v = diag
};

/// Diagonalizes m over the series ring by row and column operations. Pivot:
/// minimal valuation, ties broken by the largest leading modulus.
SmithForm smith_over_series(const SeriesMatrix& m);

/// Coefficient of y^(d-1) of a polynomial already reduced mod a degree-d f.
TruncSeries trace_coefficient(const YPoly& phi, int d);

/// The quotient C{x}[y]/<f, f_y> at a fixed jet order: coordinates of any
/// y-polynomial, the inverse of f_y modulo f over Laurent jets, and the exact pairing.
class LocalAlgebra {
 public:
  LocalAlgebra(const Germ& g, int order);

  int order() const { return order_; }
  int d() const { return d_; }
  int r() const { return r_; }
  const YPoly& f() const { return f_; }
  const SmithForm& smith() const { return smith_; }
  /// q with f_y * q = 1 mod f, Laurent coefficients.
  const YPoly& fy_inverse() const { return q_; }

  /// Coordinates of phi in the cokernel: (U * (phi mod f))_i, coefficients 0..e_i-1.
  Eigen::VectorXcd coords(const YPoly& phi) const;
  Eigen::VectorXcd coords(const BiPoly& phi) const { return coords(phi.to_ypoly(order_)); }

  /// Res g h f_y^(-2) dx via the y^(d-1) coefficient of (g h q) mod f.
  cplx pairing(const YPoly& g, const YPoly& h) const;
  cplx pairing(const BiPoly& g, const BiPoly& h) const { return pairing(g.to_ypoly(order_), h.to_ypoly(order_)); }

 private:
  int order_;
  int d_;
  int r_;
  YPoly f_;
  SmithForm smith_;
  YPoly q_;
};

YPoly fy_inverse_mod_f(const Germ& g, int order);

/// Exact pairing at the germ's jet order, re-run at order + 4; throws
/// TruncationUnstable when the two differ by more than 1e-8.
cplx residue_pairing(const BiPoly& g, const BiPoly& h, const Germ& germ);

/// Same pairing by the trapezoid rule on |x| = rho over the d sheets.
cplx residue_pairing_contour(const BiPoly& g, const BiPoly& h, const BiPoly& f, double rho, int nodes);

/// Smallest monomials x^a y^b (b < d) under (a+b, b, a) spanning the quotient.
std::vector<BiPoly> monomial_basis(const Germ& g);
std::vector<BiPoly> monomial_basis(const LocalAlgebra& la);

/// Numerical rank of the quotient coordinates of the given elements.
int quotient_rank(const LocalAlgebra& la, const std::vector<BiPoly>& elems, double rel_tol = 1e-8);

/// Matrix P_ij = pairing(a_i, b_j).
Eigen::MatrixXcd pairing_matrix(const LocalAlgebra& la, const std::vector<BiPoly>& a, const std::vector<BiPoly>& b);

double condition_number(const Eigen::MatrixXcd& m);

struct QuotientData {
  std::vector<BiPoly> basis_g;
  std::vector<BiPoly> dual_h;
  std::vector<int> divisor_orders;
  Eigen::MatrixXcd pairing_matrix_at_0;  // pairing(g_i, g_j)
  double condition = 1.0;
  double dual_certificate = 0.0;  // max |pairing(g_i, h_j) - delta_ij|
  int order = 0;
};

/// h_j = sum_k (P^-1)_kj g_k. Throws SingularPairing when cond(P) > 1e12.
std::vector<BiPoly> dual_basis(const LocalAlgebra& la, const std::vector<BiPoly>& basis_g);
std::vector<BiPoly> dual_basis(const Germ& g, const std::vector<BiPoly>& basis_g);

/// Basis (monomial unless given), dual basis and certificates, with the
/// order + 4 stability re-run.
QuotientData analyze_quotient(const Germ& g, const std::optional<std::vector<BiPoly>>& basis = std::nullopt);

}  // namespace germdeform
