#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace germdeform {

using cplx = std::complex<double>;

// Threshold below which a coefficient counts as zero for valuation and rank tests.
inline constexpr double kEpsVal = 1e-9;

// Order used for exact zeros; arithmetic clamps at this value.
inline constexpr int kInfiniteOrder = 1 << 28;

/// Truncated Laurent series in x.
///
/// Stores the coefficients of x^valuation .. x^(order-1). Coefficients at
/// exponents >= order are unknown (not zero). The canonical zero has no
/// coefficients and valuation == order.
class TruncSeries {
 public:
  /// Exact zero.
  TruncSeries();

  static TruncSeries zero(int order);
  static TruncSeries constant(cplx c, int order);
  static TruncSeries monomial(cplx c, int exponent, int order);
  /// Coefficients for exponents valuation, valuation+1, ...; order = valuation + size.
  static TruncSeries from_coeffs(int valuation, std::vector<cplx> coeffs);
  /// Dense coefficients of x^0.. truncated (or zero padded) to the given order.
  static TruncSeries from_polynomial(std::span<const cplx> ascending, int order);

  int valuation() const { return valuation_; }
  int order() const { return order_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  /// Coefficient of x^exponent; zero below the valuation. Exponents >= order are unknown.
  cplx coeff(int exponent) const;

  /// Strips leading coefficients with modulus <= eps.
  TruncSeries normalized(double eps = kEpsVal) const;
  /// Valuation after normalization; equals order() when the series is zero to truncation.
  int leading_valuation(double eps = kEpsVal) const;
  bool is_zero(double eps = kEpsVal) const;

  TruncSeries truncated(int order) const;
  /// Multiplication by x^k.
  TruncSeries shifted(int k) const;
  /// Sum of the known terms at the point x.
  cplx evaluate(cplx x) const;
  double max_abs() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(cplx s);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, cplx s) { return a *= s; }
  friend TruncSeries operator*(cplx s, TruncSeries a) { return a *= s; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

 private:
  int valuation_;
  int order_;
  std::vector<cplx> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Multiplicative inverse; throws ZeroLeadingCoefficient when the leading
/// coefficient has modulus <= kEpsVal.
TruncSeries series_inv(const TruncSeries& a);

/// Polynomial in y whose coefficients are truncated series in x. Index k holds
/// the coefficient of y^k.
class YPoly {
 public:
  YPoly() = default;
  explicit YPoly(std::vector<TruncSeries> coeffs);

  static YPoly constant(const TruncSeries& c);
  static YPoly monomial(cplx c, int x_exp, int y_exp, int order);
  /// The identity y.
  static YPoly identity(int order);

  /// Degree bound D: number of stored coefficients.
  int size() const { return static_cast<int>(coeffs_.size()); }
  /// Highest index whose coefficient is nonzero to truncation; -1 for zero.
  int degree(double eps = kEpsVal) const;

  const TruncSeries& operator[](int k) const;
  TruncSeries& at(int k);
  const std::vector<TruncSeries>& coeffs() const { return coeffs_; }

  int min_order() const;
  bool is_monic(double eps = 1e-12) const;

  YPoly derivative() const;
  YPoly truncated(int order) const;
  /// Drops trailing coefficients that are zero to truncation.
  YPoly trimmed(double eps = kEpsVal) const;
  YPoly resized(int size) const;
  cplx evaluate(cplx x, cplx y) const;
  double max_abs() const;

  YPoly operator-() const;
  YPoly& operator+=(const YPoly& other);
  YPoly& operator-=(const YPoly& other);
  YPoly& operator*=(cplx s);
  YPoly& operator*=(const TruncSeries& s);

  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(YPoly a, cplx s) { return a *= s; }
  friend YPoly operator*(cplx s, YPoly a) { return a *= s; }
  friend YPoly operator*(YPoly a, const TruncSeries& s) { return a *= s; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);

 private:
  std::vector<TruncSeries> coeffs_;
};

struct YPolyDivision {
  YPoly quotient;
  YPoly remainder;
};

/// Division with remainder by a monic y-polynomial m of exact degree d:
/// p = quotient * m + remainder with remainder of size d.
YPolyDivision ypoly_divmod(const YPoly& p, const YPoly& m);
YPoly ypoly_reduce(const YPoly& p, const YPoly& m);

/// p(x, u(x, y)) by Horner evaluation in u; no reduction.
YPoly ypoly_subst(const YPoly& p, const YPoly& u);

/// Radii of the polydisc on which the contraction estimate for subst_invert is taken.
struct ContractionRadii {
  double x = 0.1;
  double y = 1.0;
};

/// Inverse v of the substitution y -> u(x, y), so that u(x, v(x, y)) = y to truncation.
/// Requires u - y to have positive x-valuation and sup |du/dy - 1| < 1/2 on the
/// polydisc; throws NoContraction otherwise.
YPoly subst_invert(const YPoly& u, ContractionRadii radii = {});

/// Samples of a function on the circle |x| = radius at the nodes
/// radius * exp(2 pi i k / nodes). Each node may carry several values
/// (sheet values or y-coefficients).
struct BiGrid {
  double radius = 0.0;
  int nodes = 0;
  std::vector<std::vector<cplx>> values;

  BiGrid() = default;
  BiGrid(double radius, int nodes, int per_node);

  cplx node(int k) const;
  void validate() const;
};

bool is_power_of_two(int n);

}  // namespace germdeform
