#include "germdeform/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "germdeform/error.hpp"

namespace germdeform {

Poly Poly::monomial(cplx c, int exponent) {
  std::vector<cplx> v(static_cast<std::size_t>(exponent + 1), cplx{});
  v.back() = c;
  return Poly(std::move(v));
}

int Poly::degree(double eps) const {
  for (int k = size() - 1; k >= 0; --k) {
    if (std::abs(c_[static_cast<std::size_t>(k)]) > eps) return k;
  }
  return -1;
}

int Poly::valuation(double eps) const {
  for (int k = 0; k < size(); ++k) {
    if (std::abs(c_[static_cast<std::size_t>(k)]) > eps) return k;
  }
  return size();
}

Poly Poly::trimmed(double eps) const {
  return Poly(std::vector<cplx>(c_.begin(), c_.begin() + (degree(eps) + 1)));
}

Poly Poly::derivative() const {
  if (size() <= 1) return Poly();
  std::vector<cplx> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<double>(k);
  return Poly(std::move(v));
}

cplx Poly::eval(cplx x) const {
  cplx sum{};
  for (std::size_t k = c_.size(); k-- > 0;) sum = sum * x + c_[k];
  return sum;
}

double Poly::max_abs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<cplx> v(a.c_.size() + b.c_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == cplx{}) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

// ---------------------------------------------------------------------------

BiPoly BiPoly::from_terms(const std::vector<Term>& terms) {
  BiPoly p;
  for (const auto& t : terms) {
    if (t.a < 0 || t.b < 0) throw Error(ErrorCode::InvalidInput, "negative exponent in term");
    p.add_term(t.a, t.b, t.c);
  }
  return p;
}

BiPoly BiPoly::monomial(cplx c, int a, int b) {
  BiPoly p;
  p.add_term(a, b, c);
  return p;
}

cplx BiPoly::coeff(int a, int b) const {
  if (b < 0 || b >= static_cast<int>(c_.size())) return {};
  const auto& row = c_[static_cast<std::size_t>(b)];
  if (a < 0 || a >= static_cast<int>(row.size())) return {};
  return row[static_cast<std::size_t>(a)];
}

void BiPoly::add_term(int a, int b, cplx c) {
  if (b >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(b + 1));
  auto& row = c_[static_cast<std::size_t>(b)];
  if (a >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(a + 1), cplx{});
  row[static_cast<std::size_t>(a)] += c;
}

std::vector<Term> BiPoly::terms(double eps) const {
  std::vector<Term> out;
  for (std::size_t b = 0; b < c_.size(); ++b) {
    for (std::size_t a = 0; a < c_[b].size(); ++a) {
      if (std::abs(c_[b][a]) > eps) out.push_back({static_cast<int>(a), static_cast<int>(b), c_[b][a]});
    }
  }
  std::sort(out.begin(), out.end(), [](const Term& l, const Term& r) {
    if (l.a + l.b != r.a + r.b) return l.a + l.b < r.a + r.b;
    if (l.b != r.b) return l.b < r.b;
    return l.a < r.a;
  });
  return out;
}

int BiPoly::y_degree(double eps) const {
  for (int b = static_cast<int>(c_.size()) - 1; b >= 0; --b) {
    for (const auto& c : c_[static_cast<std::size_t>(b)]) {
      if (std::abs(c) > eps) return b;
    }
  }
  return -1;
}

int BiPoly::x_degree(double eps) const {
  int deg = -1;
  for (const auto& row : c_) {
    for (int a = static_cast<int>(row.size()) - 1; a > deg; --a) {
      if (std::abs(row[static_cast<std::size_t>(a)]) > eps) {
        deg = a;
        break;
      }
    }
  }
  return deg;
}

Poly BiPoly::y_coeff(int b) const {
  if (b < 0 || b >= static_cast<int>(c_.size())) return Poly();
  return Poly(c_[static_cast<std::size_t>(b)]);
}

std::vector<cplx> BiPoly::y_coeffs_at(cplx x) const {
  std::vector<cplx> out(c_.size());
  for (std::size_t b = 0; b < c_.size(); ++b) {
    cplx sum{};
    for (std::size_t a = c_[b].size(); a-- > 0;) sum = sum * x + c_[b][a];
    out[b] = sum;
  }
  return out;
}

cplx BiPoly::eval(cplx x, cplx y) const {
  const auto cy = y_coeffs_at(x);
  cplx sum{};
  for (std::size_t b = cy.size(); b-- > 0;) sum = sum * y + cy[b];
  return sum;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (std::size_t b = 0; b < c_.size(); ++b) {
    for (std::size_t a = 1; a < c_[b].size(); ++a) {
      r.add_term(static_cast<int>(a - 1), static_cast<int>(b), c_[b][a] * static_cast<double>(a));
    }
  }
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (std::size_t b = 1; b < c_.size(); ++b) {
    for (std::size_t a = 0; a < c_[b].size(); ++a) {
      r.add_term(static_cast<int>(a), static_cast<int>(b - 1), c_[b][a] * static_cast<double>(b));
    }
  }
  return r;
}

YPoly BiPoly::to_ypoly(int order) const {
  std::vector<TruncSeries> v;
  v.reserve(c_.size());
  for (const auto& row : c_) v.push_back(TruncSeries::from_polynomial(row, order));
  if (v.empty()) v.push_back(TruncSeries::zero(order));
  return YPoly(std::move(v));
}

BiPoly BiPoly::scale_x(cplx lambda) const {
  BiPoly r = *this;
  for (auto& row : r.c_) {
    cplx pw = 1.0;
    for (auto& c : row) {
      c *= pw;
      pw *= lambda;
    }
  }
  return r;
}

BiPoly BiPoly::reflect_x() const { return scale_x(-1.0); }

BiPoly BiPoly::conj_coeffs() const {
  BiPoly r = *this;
  for (auto& row : r.c_) {
    for (auto& c : row) c = std::conj(c);
  }
  return r;
}

double BiPoly::max_abs() const {
  double m = 0.0;
  for (const auto& row : c_) {
    for (const auto& c : row) m = std::max(m, std::abs(c));
  }
  return m;
}

std::string monomial_name(int a, int b) {
  std::string s;
  auto factor = [&s](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("x", a);
  factor("y", b);
  return s.empty() ? "1" : s;
}

namespace {

std::string format_coeff(cplx c) {
  char buf[96];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.15g", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.15gi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%.15g%+.15gi)", c.real(), c.imag());
  }
  return buf;
}

}  // namespace

std::string BiPoly::to_string() const {
  const auto ts = terms(0.0);
  if (ts.empty()) return "0";
  std::string s;
  for (const auto& t : ts) {
    if (!s.empty()) s += " + ";
    const std::string mono = monomial_name(t.a, t.b);
    if (t.c == cplx{1.0}) {
      s += mono;
    } else if (mono == "1") {
      s += format_coeff(t.c);
    } else {
      s += format_coeff(t.c) + "*" + mono;
    }
  }
  return s;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (std::size_t b = 0; b < o.c_.size(); ++b) {
    for (std::size_t a = 0; a < o.c_[b].size(); ++a) {
      if (o.c_[b][a] != cplx{}) add_term(static_cast<int>(a), static_cast<int>(b), o.c_[b][a]);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += o * cplx(-1.0); }

BiPoly& BiPoly::operator*=(cplx s) {
  for (auto& row : c_) {
    for (auto& c : row) c *= s;
  }
  return *this;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  BiPoly r;
  for (std::size_t b1 = 0; b1 < p.c_.size(); ++b1) {
    for (std::size_t a1 = 0; a1 < p.c_[b1].size(); ++a1) {
      const cplx c1 = p.c_[b1][a1];
      if (c1 == cplx{}) continue;
      for (std::size_t b2 = 0; b2 < q.c_.size(); ++b2) {
        for (std::size_t a2 = 0; a2 < q.c_[b2].size(); ++a2) {
          const cplx c2 = q.c_[b2][a2];
          if (c2 == cplx{}) continue;
          r.add_term(static_cast<int>(a1 + a2), static_cast<int>(b1 + b2), c1 * c2);
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

TriPoly TriPoly::from_terms(const std::vector<TriTerm>& terms) {
  TriPoly p;
  for (const auto& t : terms) {
    if (t.a < 0 || t.b < 0 || t.k < 0) throw Error(ErrorCode::InvalidInput, "negative exponent in term");
    p.add_term(t.a, t.b, t.k, t.c);
  }
  return p;
}

TriPoly TriPoly::from_bipoly(const BiPoly& p) {
  TriPoly r;
  for (const auto& t : p.terms()) r.add_term(t.a, t.b, 0, t.c);
  return r;
}

TriPoly TriPoly::var_x() { return from_terms({{1, 0, 0, 1.0}}); }
TriPoly TriPoly::var_y() { return from_terms({{0, 1, 0, 1.0}}); }
TriPoly TriPoly::var_s() { return from_terms({{0, 0, 1, 1.0}}); }
TriPoly TriPoly::constant(cplx c) { return from_terms({{0, 0, 0, c}}); }

void TriPoly::add_term(int a, int b, int k, cplx c) {
  if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k + 1));
  auto& layer = c_[static_cast<std::size_t>(k)];
  if (b >= static_cast<int>(layer.size())) layer.resize(static_cast<std::size_t>(b + 1));
  auto& row = layer[static_cast<std::size_t>(b)];
  if (a >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(a + 1), cplx{});
  row[static_cast<std::size_t>(a)] += c;
}

std::vector<TriPoly::TriTerm> TriPoly::terms(double eps) const {
  std::vector<TriTerm> out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    for (std::size_t b = 0; b < c_[k].size(); ++b) {
      for (std::size_t a = 0; a < c_[k][b].size(); ++a) {
        const cplx c = c_[k][b][a];
        if (std::abs(c) > eps) out.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(k), c});
      }
    }
  }
  return out;
}

std::vector<cplx> TriPoly::y_coeffs_at(cplx x, cplx s) const {
  std::size_t nb = 0;
  for (const auto& layer : c_) nb = std::max(nb, layer.size());
  std::vector<cplx> out(nb, cplx{});
  cplx spow = 1.0;
  for (const auto& layer : c_) {
    for (std::size_t b = 0; b < layer.size(); ++b) {
      cplx sum{};
      for (std::size_t a = layer[b].size(); a-- > 0;) sum = sum * x + layer[b][a];
      out[b] += sum * spow;
    }
    spow *= s;
  }
  return out;
}

cplx TriPoly::eval(cplx x, cplx y, cplx s) const {
  const auto cy = y_coeffs_at(x, s);
  cplx sum{};
  for (std::size_t b = cy.size(); b-- > 0;) sum = sum * y + cy[b];
  return sum;
}

TriPoly TriPoly::dx() const {
  TriPoly r;
  for (const auto& t : terms()) {
    if (t.a > 0) r.add_term(t.a - 1, t.b, t.k, t.c * static_cast<double>(t.a));
  }
  return r;
}

TriPoly TriPoly::dy() const {
  TriPoly r;
  for (const auto& t : terms()) {
    if (t.b > 0) r.add_term(t.a, t.b - 1, t.k, t.c * static_cast<double>(t.b));
  }
  return r;
}

TriPoly TriPoly::ds() const {
  TriPoly r;
  for (const auto& t : terms()) {
    if (t.k > 0) r.add_term(t.a, t.b, t.k - 1, t.c * static_cast<double>(t.k));
  }
  return r;
}

BiPoly TriPoly::at_s(cplx s) const {
  BiPoly r;
  for (const auto& t : terms()) r.add_term(t.a, t.b, t.c * std::pow(s, t.k));
  return r;
}

int TriPoly::y_degree(double eps) const {
  int deg = -1;
  for (const auto& t : terms(eps)) deg = std::max(deg, t.b);
  return deg;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& t : o.terms()) add_term(t.a, t.b, t.k, t.c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& t : o.terms()) add_term(t.a, t.b, t.k, -t.c);
  return *this;
}

TriPoly& TriPoly::operator*=(cplx s) {
  for (auto& layer : c_) {
    for (auto& row : layer) {
      for (auto& c : row) c *= s;
    }
  }
  return *this;
}

TriPoly operator*(const TriPoly& p, const TriPoly& q) {
  TriPoly r;
  const auto tq = q.terms();
  for (const auto& t1 : p.terms()) {
    for (const auto& t2 : tq) r.add_term(t1.a + t2.a, t1.b + t2.b, t1.k + t2.k, t1.c * t2.c);
  }
  return r;
}

TriPoly substitute_y(const BiPoly& p, const TriPoly& y_value) {
  const int deg = p.y_degree();
  if (deg < 0) return TriPoly();
  auto coeff_poly = [&p](int b) {
    TriPoly c;
    const Poly pb = p.y_coeff(b);
    for (int a = 0; a < pb.size(); ++a) {
      if (pb[a] != cplx{}) c.add_term(a, 0, 0, pb[a]);
    }
    return c;
  };
  TriPoly result = coeff_poly(deg);
  for (int b = deg - 1; b >= 0; --b) result = result * y_value + coeff_poly(b);
  return result;
}

// ---------------------------------------------------------------------------

Poly resultant_y(const BiPoly& p, const BiPoly& q) {
  const int m = p.y_degree();
  const int n = q.y_degree();
  if (m < 0 || n < 0) return Poly();
  const int size = m + n;
  if (size == 0) return Poly::constant(1.0);
  std::vector<std::vector<Poly>> s(static_cast<std::size_t>(size),
                                   std::vector<Poly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = p.y_coeff(m - j);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) {
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = q.y_coeff(n - j);
    }
  }
  return berkowitz_det(s, Poly(), Poly::constant(1.0)).trimmed();
}

Poly discriminant_x(const BiPoly& monic) {
  const int d = monic.y_degree();
  Poly res = resultant_y(monic, monic.dy());
  if ((d * (d - 1) / 2) % 2 == 1) res = -res;
  return res;
}

}  // namespace germdeform
