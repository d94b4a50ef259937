#include "germdeform/local_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "germdeform/contour.hpp"
#include "germdeform/error.hpp"

namespace germdeform {

SeriesMatrix identity_matrix(int n, int order) {
  SeriesMatrix m(static_cast<std::size_t>(n), std::vector<TruncSeries>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i == j) ? TruncSeries::constant(1.0, order) : TruncSeries{};
    }
  }
  return m;
}

SeriesMatrix matmul(const SeriesMatrix& a, const SeriesMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  SeriesMatrix c(n, std::vector<TruncSeries>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

SeriesMatrix mult_matrix(const YPoly& f, const YPoly& phi) {
  const int d = f.trimmed(0.0).size() - 1;
  const int order = f.min_order();
  SeriesMatrix m(static_cast<std::size_t>(d), std::vector<TruncSeries>(static_cast<std::size_t>(d)));
  for (int k = 0; k < d; ++k) {
    const YPoly col = ypoly_reduce(phi * YPoly::monomial(1.0, 0, k, order), f);
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = col[i];
  }
  return m;
}

SmithForm smith_over_series(const SeriesMatrix& m) {
  const int n = static_cast<int>(m.size());
  int order = kInfiniteOrder;
  for (const auto& row : m) {
    for (const auto& e : row) order = std::min(order, e.order());
  }
  SmithForm out;
  SeriesMatrix a = m;
  out.u = identity_matrix(n, order);
  out.v = identity_matrix(n, order);
  auto at = [](SeriesMatrix& mm, int i, int j) -> TruncSeries& {
    return mm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };

  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1, best_val = kInfiniteOrder;
    double best_lead = 0.0;
    for (int i = k; i < n; ++i) {
      for (int j = k; j < n; ++j) {
        const TruncSeries& e = at(a, i, j);
        const int v = e.leading_valuation();
        if (v >= e.order()) continue;
        const double lead = std::abs(e.coeff(v));
        if (v < best_val || (v == best_val && lead > best_lead)) {
          best_val = v;
          best_lead = lead;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) throw Error(ErrorCode::RankDeficient, "no pivot below the truncation order");
    std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pi)]);
    std::swap(out.u[static_cast<std::size_t>(k)], out.u[static_cast<std::size_t>(pi)]);
    for (int i = 0; i < n; ++i) {
      std::swap(at(a, i, k), at(a, i, pj));
      std::swap(at(out.v, i, k), at(out.v, i, pj));
    }
    const TruncSeries pivot = at(a, k, k).normalized();
    at(a, k, k) = pivot;
    const int v = pivot.valuation();
    const TruncSeries inv = series_inv(pivot.shifted(-v));

    for (int i = k + 1; i < n; ++i) {
      const TruncSeries e = at(a, i, k).normalized();
      if (e.is_zero()) {
        at(a, i, k) = TruncSeries{};
        continue;
      }
      const TruncSeries factor = e.shifted(-v) * inv;
      for (int j = k; j < n; ++j) at(a, i, j) -= factor * at(a, k, j);
      for (int j = 0; j < n; ++j) at(out.u, i, j) -= factor * at(out.u, k, j);
      at(a, i, k) = TruncSeries{};
    }
    for (int j = k + 1; j < n; ++j) {
      const TruncSeries e = at(a, k, j).normalized();
      if (e.is_zero()) {
        at(a, k, j) = TruncSeries{};
        continue;
      }
      const TruncSeries factor = e.shifted(-v) * inv;
      for (int i = k; i < n; ++i) at(a, i, j) -= factor * at(a, i, k);
      for (int i = 0; i < n; ++i) at(out.v, i, j) -= factor * at(out.v, i, k);
      at(a, k, j) = TruncSeries{};
    }
  }
  out.diag = a;
  out.orders.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.orders[static_cast<std::size_t>(k)] = at(a, k, k).valuation();
  return out;
}

TruncSeries trace_coefficient(const YPoly& phi, int d) { return phi[d - 1]; }

LocalAlgebra::LocalAlgebra(const Germ& g, int order) : order_(order), d_(g.d), r_(0), f_(g.series(order)) {
  const YPoly fy = f_.derivative();
  smith_ = smith_over_series(mult_matrix(f_, fy));
  for (const int e : smith_.orders) r_ += e;
  // q = V D^-1 U e_0
  std::vector<TruncSeries> w(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) {
    w[static_cast<std::size_t>(i)] =
        smith_.u[static_cast<std::size_t>(i)][0] * series_inv(smith_.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  }
  std::vector<TruncSeries> q(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      q[static_cast<std::size_t>(i)] += smith_.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    }
  }
  q_ = YPoly(std::move(q));
}

Eigen::VectorXcd LocalAlgebra::coords(const YPoly& phi) const {
  const YPoly red = ypoly_reduce(phi, f_);
  Eigen::VectorXcd out(r_);
  int pos = 0;
  for (int i = 0; i < d_; ++i) {
    TruncSeries s;
    for (int j = 0; j < d_; ++j) s += smith_.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * red[j];
    const int e = smith_.orders[static_cast<std::size_t>(i)];
    for (int k = 0; k < e; ++k) {
      if (k >= s.order()) throw Error(ErrorCode::TruncationUnstable, "jet order too low for quotient coordinates");
      out(pos++) = s.coeff(k);
    }
  }
  return out;
}

cplx LocalAlgebra::pairing(const YPoly& g, const YPoly& h) const {
  const YPoly phi = ypoly_reduce(g * h * q_, f_);
  const TruncSeries tr = trace_coefficient(phi, d_);
  if (tr.order() <= -1) throw Error(ErrorCode::TruncationUnstable, "residue coefficient beyond the jet order");
  return tr.coeff(-1);
}

YPoly fy_inverse_mod_f(const Germ& g, int order) { return LocalAlgebra(g, order).fy_inverse(); }

cplx residue_pairing(const BiPoly& g, const BiPoly& h, const Germ& germ) {
  const cplx lo = LocalAlgebra(germ, germ.order).pairing(g, h);
  const cplx hi = LocalAlgebra(germ, germ.order + 4).pairing(g, h);
  if (std::abs(lo - hi) > 1e-8) throw Error(ErrorCode::TruncationUnstable, "pairing changes under order increase");
  return hi;
}

cplx residue_pairing_contour(const BiPoly& g, const BiPoly& h, const BiPoly& f, double rho, int nodes) {
  const BiPoly fy = f.dy();
  const SheetSamples ss = roots_on_circle([&f](cplx x) { return f.y_coeffs_at(x); }, rho, nodes);
  std::vector<cplx> vals(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) {
    const cplx x = ss.x[static_cast<std::size_t>(k)];
    cplx sum{};
    for (const cplx y : ss.sheets[static_cast<std::size_t>(k)]) {
      const cplx dy = fy.eval(x, y);
      sum += g.eval(x, y) * h.eval(x, y) / (dy * dy);
    }
    vals[static_cast<std::size_t>(k)] = sum;
  }
  return contour_residue(vals, rho);
}

namespace {

int rank_of(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * std::max(1.0, s(0))) ++rank;
  }
  return rank;
}

}  // namespace

int quotient_rank(const LocalAlgebra& la, const std::vector<BiPoly>& elems, double rel_tol) {
  Eigen::MatrixXcd m(la.r(), static_cast<Eigen::Index>(elems.size()));
  for (std::size_t j = 0; j < elems.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = la.coords(elems[j]);
  return rank_of(m, rel_tol);
}

std::vector<BiPoly> monomial_basis(const LocalAlgebra& la) {
  const int r = la.r();
  std::vector<BiPoly> basis;
  if (r == 0) return basis;
  int emax = 0;
  for (const int e : la.smith().orders) emax = std::max(emax, e);
  struct Cand {
    int a, b;
  };
  std::vector<Cand> cands;
  for (int b = 0; b < la.d(); ++b) {
    for (int a = 0; a < emax; ++a) cands.push_back({a, b});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& rr) {
    if (l.a + l.b != rr.a + rr.b) return l.a + l.b < rr.a + rr.b;
    if (l.b != rr.b) return l.b < rr.b;
    return l.a < rr.a;
  });
  Eigen::MatrixXcd m(r, 0);
  for (const auto& c : cands) {
    const BiPoly mono = BiPoly::monomial(1.0, c.a, c.b);
    Eigen::MatrixXcd trial(r, m.cols() + 1);
    trial << m, la.coords(mono);
    if (rank_of(trial, 1e-8) > static_cast<int>(basis.size())) {
      m = trial;
      basis.push_back(mono);
      if (static_cast<int>(basis.size()) == r) break;
    }
  }
  if (static_cast<int>(basis.size()) != r) throw Error(ErrorCode::RankDeficient, "monomials do not span the quotient");
  return basis;
}

std::vector<BiPoly> monomial_basis(const Germ& g) { return monomial_basis(LocalAlgebra(g, g.order)); }

Eigen::MatrixXcd pairing_matrix(const LocalAlgebra& la, const std::vector<BiPoly>& a, const std::vector<BiPoly>& b) {
  Eigen::MatrixXcd p(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = la.pairing(a[i], b[j]);
    }
  }
  return p;
}

double condition_number(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  const double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

std::vector<BiPoly> dual_basis(const LocalAlgebra& la, const std::vector<BiPoly>& basis_g) {
  const Eigen::MatrixXcd p = pairing_matrix(la, basis_g, basis_g);
  if (basis_g.empty()) return {};
  if (condition_number(p) > 1e12) throw Error(ErrorCode::SingularPairing, "pairing matrix is singular");
  const Eigen::MatrixXcd pinv = p.inverse();
  std::vector<BiPoly> h;
  for (std::size_t j = 0; j < basis_g.size(); ++j) {
    BiPoly hj;
    for (std::size_t k = 0; k < basis_g.size(); ++k) {
      hj += basis_g[k] * pinv(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
    }
    h.push_back(hj);
  }
  return h;
}

std::vector<BiPoly> dual_basis(const Germ& g, const std::vector<BiPoly>& basis_g) {
  return dual_basis(LocalAlgebra(g, g.order), basis_g);
}

QuotientData analyze_quotient(const Germ& g, const std::optional<std::vector<BiPoly>>& basis) {
  QuotientData out;
  out.order = g.order;
  const LocalAlgebra la(g, g.order);
  if (la.r() != g.r) throw Error(ErrorCode::TruncationUnstable, "elementary divisors do not sum to r");
  out.divisor_orders = la.smith().orders;
  if (basis) {
    for (const auto& b : *basis) {
      if (b.y_degree() >= g.d) throw Error(ErrorCode::InvalidInput, "basis elements must have y-degree < d");
    }
    if (static_cast<int>(basis->size()) != g.r || quotient_rank(la, *basis) != g.r) {
      throw Error(ErrorCode::SingularPairing, "given elements do not form a basis of the quotient");
    }
    out.basis_g = *basis;
  } else {
    out.basis_g = monomial_basis(la);
  }
  out.pairing_matrix_at_0 = pairing_matrix(la, out.basis_g, out.basis_g);
  out.condition = condition_number(out.pairing_matrix_at_0);
  out.dual_h = dual_basis(la, out.basis_g);

  const LocalAlgebra hi(g, g.order + 4);
  const Eigen::MatrixXcd p_hi = pairing_matrix(hi, out.basis_g, out.basis_g);
  if (p_hi.size() > 0 && (p_hi - out.pairing_matrix_at_0).cwiseAbs().maxCoeff() > 1e-8) {
    throw Error(ErrorCode::TruncationUnstable, "pairing matrix changes under order increase");
  }
  const Eigen::MatrixXcd cert = pairing_matrix(la, out.basis_g, out.dual_h);
  if (cert.size() > 0) {
    out.dual_certificate =
        (cert - Eigen::MatrixXcd::Identity(cert.rows(), cert.cols())).cwiseAbs().maxCoeff();
  }
  return out;
}

}  // namespace germdeform
