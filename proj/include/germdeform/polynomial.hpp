#pragma once

#include <complex>
#include <string>
#include <vector>

#include "germdeform/series.hpp"

namespace germdeform {

/// Dense univariate polynomial, ascending coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}

  static Poly constant(cplx c) { return Poly({c}); }
  static Poly monomial(cplx c, int exponent);

  const std::vector<cplx>& coeffs() const { return c_; }
  std::vector<cplx>& coeffs() { return c_; }
  int size() const { return static_cast<int>(c_.size()); }
  cplx operator[](int k) const { return (k >= 0 && k < size()) ? c_[static_cast<std::size_t>(k)] : cplx{}; }

  /// Highest index with |c| > eps, -1 for the zero polynomial.
  int degree(double eps = 0.0) const;
  /// Lowest index with |c| > eps; size() when zero.
  int valuation(double eps = 0.0) const;
  Poly trimmed(double eps = 0.0) const;
  Poly derivative() const;
  cplx eval(cplx x) const;
  double max_abs() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(cplx s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, cplx s) { return a *= s; }
  friend Poly operator*(cplx s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  std::vector<cplx> c_;
};

struct Term {
  int a = 0;  // x exponent
  int b = 0;  // y exponent
  cplx c{};
};

/// Polynomial in (x, y), stored dense as coeff[b][a].
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly from_terms(const std::vector<Term>& terms);
  static BiPoly monomial(cplx c, int a, int b);
  static BiPoly constant(cplx c) { return monomial(c, 0, 0); }

  cplx coeff(int a, int b) const;
  void add_term(int a, int b, cplx c);
  std::vector<Term> terms(double eps = 0.0) const;

  /// Highest y power with a nonzero coefficient; -1 for zero.
  int y_degree(double eps = 0.0) const;
  int x_degree(double eps = 0.0) const;
  bool is_zero(double eps = 0.0) const { return y_degree(eps) < 0; }

  /// Coefficient of y^b as a polynomial in x.
  Poly y_coeff(int b) const;
  /// Coefficients in y at a fixed x, ascending.
  std::vector<cplx> y_coeffs_at(cplx x) const;

  cplx eval(cplx x, cplx y) const;
  BiPoly dx() const;
  BiPoly dy() const;

  YPoly to_ypoly(int order) const;
  /// p(lambda x, y).
  BiPoly scale_x(cplx lambda) const;
  /// p(-x, y).
  BiPoly reflect_x() const;
  /// Coefficientwise complex conjugate.
  BiPoly conj_coeffs() const;
  double max_abs() const;

  /// "1", "x", "x*y", "x^2*y^3"; general polynomials as a sum with coefficients.
  std::string to_string() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(cplx s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, cplx s) { return a *= s; }
  friend BiPoly operator*(cplx s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);

 private:
  std::vector<std::vector<cplx>> c_;  // [b][a]
};

std::string monomial_name(int a, int b);

/// Polynomial in (x, y, s), stored dense as coeff[k][b][a].
class TriPoly {
 public:
  TriPoly() = default;
  struct TriTerm {
    int a = 0, b = 0, k = 0;
    cplx c{};
  };
  static TriPoly from_terms(const std::vector<TriTerm>& terms);
  static TriPoly from_bipoly(const BiPoly& p);
  static TriPoly var_x();
  static TriPoly var_y();
  static TriPoly var_s();
  static TriPoly constant(cplx c);

  void add_term(int a, int b, int k, cplx c);
  std::vector<TriTerm> terms(double eps = 0.0) const;

  cplx eval(cplx x, cplx y, cplx s) const;
  TriPoly dx() const;
  TriPoly dy() const;
  TriPoly ds() const;
  /// F(., ., s) as a polynomial in (x, y).
  BiPoly at_s(cplx s) const;
  /// Coefficients in y at fixed (x, s), ascending.
  std::vector<cplx> y_coeffs_at(cplx x, cplx s) const;
  int y_degree(double eps = 0.0) const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(cplx s);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(TriPoly a, cplx s) { return a *= s; }
  friend TriPoly operator*(cplx s, TriPoly a) { return a *= s; }
  friend TriPoly operator*(const TriPoly& p, const TriPoly& q);

 private:
  std::vector<std::vector<std::vector<cplx>>> c_;  // [k][b][a]
};

/// p(x, Y(x, y, s)) with the x variable kept.
TriPoly substitute_y(const BiPoly& p, const TriPoly& y_value);

/// Determinant by the division-free Berkowitz recurrence. R needs +, -, * and
/// copy; zero and one are the ring identities.
template <class R>
R berkowitz_det(const std::vector<std::vector<R>>& a, const R& zero, const R& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  std::vector<R> vect{one, zero - a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // column C = a[0..r-1][r], row R = a[r][0..r-1], block A_r = a[0..r-1][0..r-1]
    std::vector<R> t;
    t.reserve(r + 2);
    t.push_back(one);
    t.push_back(zero - a[r][r]);
    std::vector<R> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
    for (std::size_t p = 0; p < r; ++p) {
      R dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot = dot + a[r][i] * col[i];
      t.push_back(zero - dot);
      if (p + 1 < r) {
        std::vector<R> next(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
          R acc = zero;
          for (std::size_t j = 0; j < r; ++j) acc = acc + a[i][j] * col[j];
          next[i] = acc;
        }
        col = std::move(next);
      }
    }
    std::vector<R> out(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) out[i] = out[i] + t[i - j] * vect[j];
    }
    vect = std::move(out);
  }
  R det = vect[n];
  return (n % 2 == 1) ? zero - det : det;
}

/// Resultant in y of two polynomials with x-polynomial coefficients, via the
/// Sylvester matrix. Degrees are taken from the highest nonzero coefficient.
Poly resultant_y(const BiPoly& p, const BiPoly& q);

/// (-1)^(d(d-1)/2) Res_y(P, P_y) for P monic in y; the sign makes y^2 - x give 4x.
Poly discriminant_x(const BiPoly& monic);

}  // namespace germdeform
