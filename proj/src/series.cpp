#include "germdeform/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "germdeform/error.hpp"

namespace germdeform {

namespace {

int clamp_order(long long order) {
  return static_cast<int>(std::min<long long>(order, kInfiniteOrder));
}

}  // namespace

TruncSeries::TruncSeries() : valuation_(kInfiniteOrder), order_(kInfiniteOrder) {}

TruncSeries TruncSeries::zero(int order) {
  TruncSeries s;
  s.order_ = std::min(order, kInfiniteOrder);
  s.valuation_ = s.order_;
  return s;
}

TruncSeries TruncSeries::constant(cplx c, int order) { return monomial(c, 0, order); }

TruncSeries TruncSeries::monomial(cplx c, int exponent, int order) {
  if (exponent >= order) return zero(order);
  TruncSeries s;
  s.valuation_ = exponent;
  s.order_ = order;
  s.coeffs_.assign(static_cast<std::size_t>(order - exponent), cplx{});
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::from_coeffs(int valuation, std::vector<cplx> coeffs) {
  TruncSeries s;
  s.valuation_ = valuation;
  s.order_ = valuation + static_cast<int>(coeffs.size());
  s.coeffs_ = std::move(coeffs);
  return s;
}

TruncSeries TruncSeries::from_polynomial(std::span<const cplx> ascending, int order) {
  if (order <= 0) return zero(order);
  std::vector<cplx> c(static_cast<std::size_t>(order), cplx{});
  for (std::size_t i = 0; i < ascending.size() && i < c.size(); ++i) c[i] = ascending[i];
  return from_coeffs(0, std::move(c));
}

cplx TruncSeries::coeff(int exponent) const {
  if (exponent < valuation_) return {};
  if (exponent >= order_) throw std::out_of_range("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

TruncSeries TruncSeries::normalized(double eps) const {
  std::size_t first = 0;
  while (first < coeffs_.size() && std::abs(coeffs_[first]) <= eps) ++first;
  if (first == coeffs_.size()) return zero(order_);
  if (first == 0) return *this;
  return from_coeffs(valuation_ + static_cast<int>(first),
                     std::vector<cplx>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first), coeffs_.end()));
}

int TruncSeries::leading_valuation(double eps) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (std::abs(coeffs_[i]) > eps) return valuation_ + static_cast<int>(i);
  }
  return order_;
}

bool TruncSeries::is_zero(double eps) const { return leading_valuation(eps) >= order_; }

TruncSeries TruncSeries::truncated(int order) const {
  const int new_order = std::min(order, order_);
  if (valuation_ >= new_order) return zero(new_order);
  return from_coeffs(valuation_,
                     std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + (new_order - valuation_)));
}

TruncSeries TruncSeries::shifted(int k) const {
  if (coeffs_.empty()) return zero(clamp_order(static_cast<long long>(order_) + k));
  return from_coeffs(valuation_ + k, coeffs_);
}

cplx TruncSeries::evaluate(cplx x) const {
  cplx sum{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) sum = sum * x + coeffs_[i];
  if (valuation_ != 0 && !coeffs_.empty()) sum *= std::pow(x, valuation_);
  return sum;
}

double TruncSeries::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  const int order = std::min(order_, other.order_);
  const int val = std::min(valuation_, other.valuation_);
  if (val >= order) {
    *this = zero(order);
    return *this;
  }
  std::vector<cplx> c(static_cast<std::size_t>(order - val), cplx{});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = valuation_ + static_cast<int>(i);
    if (e >= order) break;
    c[static_cast<std::size_t>(e - val)] += coeffs_[i];
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    const int e = other.valuation_ + static_cast<int>(i);
    if (e >= order) break;
    c[static_cast<std::size_t>(e - val)] += other.coeffs_[i];
  }
  valuation_ = val;
  order_ = order;
  coeffs_ = std::move(c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) { return *this += -other; }

TruncSeries& TruncSeries::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const long long val = static_cast<long long>(a.valuation_) + b.valuation_;
  const int order = clamp_order(std::min(static_cast<long long>(a.order_) + b.valuation_,
                                         static_cast<long long>(b.order_) + a.valuation_));
  if (a.coeffs_.empty() || b.coeffs_.empty() || val >= order) return TruncSeries::zero(order);
  const auto n = static_cast<std::size_t>(order - val);
  std::vector<cplx> c(n, cplx{});
  const std::size_t na = std::min(a.coeffs_.size(), n);
  for (std::size_t i = 0; i < na; ++i) {
    if (a.coeffs_[i] == cplx{}) continue;
    const std::size_t nb = std::min(b.coeffs_.size(), n - i);
    for (std::size_t j = 0; j < nb; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncSeries::from_coeffs(static_cast<int>(val), std::move(c));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_inv(const TruncSeries& a) {
  const TruncSeries n = a.normalized();
  if (n.coeffs().empty() || std::abs(n.coeffs()[0]) <= kEpsVal) {
    throw Error(ErrorCode::ZeroLeadingCoefficient, "series has no invertible leading coefficient");
  }
  const auto& c = n.coeffs();
  const std::size_t len = c.size();
  std::vector<cplx> r(len, cplx{});
  const cplx inv0 = 1.0 / c[0];
  r[0] = inv0;
  for (std::size_t i = 1; i < len; ++i) {
    cplx acc{};
    for (std::size_t j = 1; j <= i; ++j) acc += c[j] * r[i - j];
    r[i] = -acc * inv0;
  }
  return TruncSeries::from_coeffs(-n.valuation(), std::move(r));
}

// ---------------------------------------------------------------------------

YPoly::YPoly(std::vector<TruncSeries> coeffs) : coeffs_(std::move(coeffs)) {}

YPoly YPoly::constant(const TruncSeries& c) { return YPoly({c}); }

YPoly YPoly::monomial(cplx c, int x_exp, int y_exp, int order) {
  std::vector<TruncSeries> v(static_cast<std::size_t>(y_exp + 1), TruncSeries::zero(order));
  v[static_cast<std::size_t>(y_exp)] = TruncSeries::monomial(c, x_exp, order);
  return YPoly(std::move(v));
}

YPoly YPoly::identity(int order) { return monomial(1.0, 0, 1, order); }

int YPoly::degree(double eps) const {
  for (int k = size() - 1; k >= 0; --k) {
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero(eps)) return k;
  }
  return -1;
}

const TruncSeries& YPoly::operator[](int k) const {
  static const TruncSeries kZero;
  if (k < 0 || k >= size()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncSeries& YPoly::at(int k) {
  if (k >= size()) coeffs_.resize(static_cast<std::size_t>(k + 1));
  return coeffs_[static_cast<std::size_t>(k)];
}

int YPoly::min_order() const {
  int m = kInfiniteOrder;
  for (const auto& c : coeffs_) m = std::min(m, c.order());
  return m;
}

bool YPoly::is_monic(double eps) const {
  const int d = degree(eps);
  if (d < 0) return false;
  const TruncSeries& top = coeffs_[static_cast<std::size_t>(d)];
  if (top.valuation() > 0 || top.order() <= 0) return false;
  for (int e = top.valuation(); e < top.order(); ++e) {
    const cplx want = (e == 0) ? cplx{1.0} : cplx{};
    if (std::abs(top.coeff(e) - want) > eps) return false;
  }
  return true;
}

YPoly YPoly::derivative() const {
  if (size() <= 1) return YPoly({TruncSeries{}});
  std::vector<TruncSeries> v;
  v.reserve(coeffs_.size() - 1);
  for (int k = 1; k < size(); ++k) v.push_back(coeffs_[static_cast<std::size_t>(k)] * cplx(k));
  return YPoly(std::move(v));
}

YPoly YPoly::truncated(int order) const {
  YPoly r = *this;
  for (auto& c : r.coeffs_) c = c.truncated(order);
  return r;
}

YPoly YPoly::trimmed(double eps) const {
  YPoly r = *this;
  while (!r.coeffs_.empty() && r.coeffs_.back().is_zero(eps)) r.coeffs_.pop_back();
  return r;
}

YPoly YPoly::resized(int size) const {
  YPoly r = *this;
  r.coeffs_.resize(static_cast<std::size_t>(size));
  return r;
}

cplx YPoly::evaluate(cplx x, cplx y) const {
  cplx sum{};
  for (int k = size() - 1; k >= 0; --k) sum = sum * y + coeffs_[static_cast<std::size_t>(k)].evaluate(x);
  return sum;
}

double YPoly::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, c.max_abs());
  return m;
}

YPoly YPoly::operator-() const {
  YPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

YPoly& YPoly::operator+=(const YPoly& other) {
  if (other.size() > size()) coeffs_.resize(other.coeffs_.size());
  for (int k = 0; k < other.size(); ++k) coeffs_[static_cast<std::size_t>(k)] += other[k];
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& other) { return *this += -other; }

YPoly& YPoly::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

YPoly& YPoly::operator*=(const TruncSeries& s) {
  for (auto& c : coeffs_) c = c * s;
  return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.size() == 0 || b.size() == 0) return YPoly{};
  std::vector<TruncSeries> v(static_cast<std::size_t>(a.size() + b.size() - 1));
  for (int i = 0; i < a.size(); ++i) {
    if (a[i].coeffs().empty() && a[i].order() >= kInfiniteOrder) continue;
    for (int j = 0; j < b.size(); ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return YPoly(std::move(v));
}

YPolyDivision ypoly_divmod(const YPoly& p, const YPoly& m) {
  const YPoly mt = m.trimmed(0.0);
  if (!mt.is_monic()) throw Error(ErrorCode::InvalidInput, "divisor is not monic in y");
  const int d = mt.size() - 1;
  std::vector<TruncSeries> r = p.coeffs();
  if (static_cast<int>(r.size()) < d) r.resize(static_cast<std::size_t>(d));
  const int top = static_cast<int>(r.size()) - 1;
  std::vector<TruncSeries> q(static_cast<std::size_t>(std::max(top - d + 1, 1)));
  for (int k = top; k >= d; --k) {
    const TruncSeries lead = r[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(k - d)] = lead;
    for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(k - d + j)] -= lead * mt[j];
    r[static_cast<std::size_t>(k)] = TruncSeries{};
  }
  r.resize(static_cast<std::size_t>(d));
  return {YPoly(std::move(q)), YPoly(std::move(r))};
}

YPoly ypoly_reduce(const YPoly& p, const YPoly& m) { return ypoly_divmod(p, m).remainder; }

YPoly ypoly_subst(const YPoly& p, const YPoly& u) {
  if (p.size() == 0) return YPoly{};
  YPoly result = YPoly::constant(p[p.size() - 1]);
  for (int k = p.size() - 2; k >= 0; --k) {
    result = result * u;
    result += YPoly::constant(p[k]);
  }
  return result;
}

YPoly subst_invert(const YPoly& u, ContractionRadii radii) {
  const int order = u.min_order();
  const YPoly y = YPoly::identity(order);
  const YPoly w = u - y;
  double bound = 0.0;
  for (int k = 0; k < w.size(); ++k) {
    const TruncSeries& c = w[k];
    if (!c.is_zero() && c.leading_valuation() < 1) {
      throw Error(ErrorCode::NoContraction, "u - y must vanish at x = 0");
    }
    if (k == 0) continue;
    double s = 0.0;
    for (int e = c.valuation(); e < c.order(); ++e) s += std::abs(c.coeff(e)) * std::pow(radii.x, e);
    bound += k * std::pow(radii.y, k - 1) * s;
  }
  if (bound >= 0.5) {
    throw Error(ErrorCode::NoContraction, "sup |du/dy - 1| estimate is not below 1/2");
  }
  YPoly v = y;
  for (int iter = 0; iter < order + 4; ++iter) {
    const YPoly uv = ypoly_subst(u, v).trimmed(0.0);
    const YPoly next = (v - (uv - y)).trimmed(0.0);
    const double change = (next - v).max_abs();
    v = next;
    if (change <= 1e-15) break;
  }
  return v;
}

// ---------------------------------------------------------------------------

BiGrid::BiGrid(double radius_, int nodes_, int per_node)
    : radius(radius_), nodes(nodes_),
      values(static_cast<std::size_t>(nodes_), std::vector<cplx>(static_cast<std::size_t>(per_node))) {}

cplx BiGrid::node(int k) const {
  return std::polar(radius, 2.0 * std::numbers::pi * k / nodes);
}

void BiGrid::validate() const {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidInput, "grid radius must be positive");
  if (!is_power_of_two(nodes)) throw Error(ErrorCode::InvalidInput, "grid node count must be a power of two");
  if (static_cast<int>(values.size()) != nodes) throw Error(ErrorCode::InvalidInput, "grid sample count mismatch");
  for (const auto& row : values) {
    for (const auto& v : row) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorCode::InvalidInput, "grid samples must be finite");
      }
    }
  }
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace germdeform
