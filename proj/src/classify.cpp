#include "germdeform/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "germdeform/contour.hpp"
#include "germdeform/error.hpp"

namespace germdeform {

namespace {

cplx polyval(std::span<const cplx> c, cplx y) {
  cplx sum{};
  for (std::size_t k = c.size(); k-- > 0;) sum = sum * y + c[k];
  return sum;
}

cplx polyder(std::span<const cplx> c, cplx y) {
  cplx sum{};
  for (std::size_t k = c.size(); k-- > 1;) sum = sum * y + c[k] * static_cast<double>(k);
  return sum;
}

// Coefficients (length n) of the interpolant of degree < n through (ys, ws).
std::vector<cplx> lagrange(std::span<const cplx> ys, std::span<const cplx> ws, std::size_t out_size) {
  const std::size_t n = ys.size();
  if (min_separation(ys) < 1e-8) throw Error(ErrorCode::SheetCollision, "interpolation nodes coalesce");
  const auto pi = poly_from_roots(ys);
  std::vector<cplx> out(std::max(out_size, n), cplx{});
  for (std::size_t i = 0; i < n; ++i) {
    // Q_i = Pi / (y - y_i) by synthetic division
    std::vector<cplx> q(n, cplx{});
    cplx carry{};
    for (std::size_t k = n; k-- > 0;) {
      carry = pi[k + 1] + carry * ys[i];
      q[k] = carry;
    }
    const cplx scale = ws[i] / polyval(q, ys[i]);
    for (std::size_t k = 0; k < n; ++k) out[k] += scale * q[k];
  }
  return out;
}

std::vector<cplx> inner_sheets(std::span<const cplx> roots, double delta2, std::size_t d) {
  std::vector<cplx> ys;
  for (const cplx y : roots) {
    if (std::abs(y) < delta2) ys.push_back(y);
  }
  if (ys.size() != d) throw Error(ErrorCode::OutOfDomain, "deformed fiber does not have d sheets inside |y| < delta2");
  return ys;
}

std::vector<cplx> sheets_at(const TriPoly& F, cplx x, double s, double delta2, std::size_t d,
                            std::vector<cplx>* cache) {
  const auto coeffs = F.y_coeffs_at(x, s);
  std::vector<cplx> roots = cache ? poly_roots(coeffs, *cache) : poly_roots(coeffs);
  if (cache) *cache = roots;
  return inner_sheets(roots, delta2, d);
}

using Flat = std::vector<cplx>;

Flat flatten(const FlowState& st) {
  Flat v(st.t);
  for (const auto& row : st.u) v.insert(v.end(), row.begin(), row.end());
  return v;
}

FlowState unflatten(const Flat& v, int r, int m, int dd) {
  FlowState st;
  st.t.assign(v.begin(), v.begin() + r);
  st.u.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const auto first = v.begin() + r + static_cast<std::ptrdiff_t>(k) * dd;
    st.u[static_cast<std::size_t>(k)].assign(first, first + dd);
  }
  return st;
}

Flat flatten(const FieldValue& f) {
  Flat v(f.dt);
  for (const auto& row : f.du) v.insert(v.end(), row.begin(), row.end());
  return v;
}

Flat axpy(const Flat& x, cplx a, const Flat& y) {
  Flat out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
  return out;
}

// Values on |x| = rho at new nodes from samples on the M-point circle, using
// the nonnegative Fourier modes below M/2. Also returns the largest negative mode.
std::vector<cplx> spectral_extend(std::span<const cplx> values, double rho, std::span<const cplx> new_x,
                                  double* defect) {
  const int m = static_cast<int>(values.size());
  std::vector<cplx> modes(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    cplx sum{};
    for (int k = 0; k < m; ++k) {
      sum += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) * k / m);
    }
    modes[static_cast<std::size_t>(j)] = sum / static_cast<double>(m);
  }
  if (defect) {
    for (int j = m / 2 + 1; j < m; ++j) *defect = std::max(*defect, std::abs(modes[static_cast<std::size_t>(j)]));
  }
  std::vector<cplx> out;
  out.reserve(new_x.size());
  for (const cplx x : new_x) {
    const cplx z = x / rho;
    cplx sum{};
    for (int j = m / 2; j-- > 0;) sum = sum * z + modes[static_cast<std::size_t>(j)];
    out.push_back(sum);
  }
  return out;
}

}  // namespace

void validate_path(const DeformationPath& path, const UniversalFamily& fam) {
  if (!(path.s_max > 0.0)) throw Error(ErrorCode::InvalidInput, "s_max must be positive");
  const BiPoly f0 = path.F.at_s(0.0);
  if ((f0 - fam.germ.f).max_abs() > 1e-12) throw Error(ErrorCode::InvalidInput, "F(x, y, 0) differs from the germ");
}

TriPoly manufactured_path(const UniversalFamily& fam, const TriPoly& u, const std::vector<TriPoly>& phi,
                          const TriPoly& unit) {
  if (static_cast<int>(phi.size()) != fam.r) throw Error(ErrorCode::InvalidInput, "phi has the wrong length");
  TriPoly g = substitute_y(fam.germ.f, u);
  for (int i = 0; i < fam.r; ++i) g += phi[static_cast<std::size_t>(i)] * substitute_y(fam.basis()[static_cast<std::size_t>(i)], u);
  return unit * g;
}

TriPoly reparametrize(const TriPoly& F, const TriPoly& sigma) {
  TriPoly out;
  for (const auto& t : F.terms()) {
    TriPoly term = TriPoly::from_terms({{t.a, t.b, 0, t.c}});
    for (int k = 0; k < t.k; ++k) term = term * sigma;
    out += term;
  }
  return out;
}

NumericDecomposition decompose_numeric(const UniversalFamily& fam, std::span<const cplx> x_nodes,
                                       const std::vector<std::vector<cplx>>& sheets,
                                       const std::vector<std::vector<cplx>>& h_values, const FlowState& state,
                                       double field_tol) {
  const int r = fam.r;
  const int m = static_cast<int>(x_nodes.size());
  const BiPoly g = fam.fiber(state.t);
  const BiPoly gu = g.dy();
  NumericDecomposition out;

  Eigen::VectorXcd p = Eigen::VectorXcd::Zero(r);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(r, r);
  Eigen::VectorXcd gv(r), hv(r);
  auto basis_at = [&](cplx x, cplx u) {
    for (int i = 0; i < r; ++i) {
      gv(i) = fam.basis()[static_cast<std::size_t>(i)].eval(x, u);
      hv(i) = fam.dual()[static_cast<std::size_t>(i)].eval(x, u);
    }
  };
  for (int k = 0; k < m; ++k) {
    const cplx x = x_nodes[static_cast<std::size_t>(k)];
    const auto& ys = sheets[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const cplx u = polyval(state.u[static_cast<std::size_t>(k)], ys[i]);
      out.on_curve = std::max(out.on_curve, std::abs(g.eval(x, u)));
      if (r == 0) continue;
      const cplx du = gu.eval(x, u);
      basis_at(x, u);
      const cplx w = x / (du * du);
      p += (w * h_values[static_cast<std::size_t>(k)][i]) * hv;
      b += w * gv * hv.transpose();
    }
  }
  if (out.on_curve > field_tol) throw Error(ErrorCode::OutOfDomain, "transformed sheets leave the universal fiber");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(r);
  if (r > 0) {
    p /= static_cast<double>(m);
    b /= static_cast<double>(m);
    c = b.transpose().partialPivLu().solve(p);
  }
  out.c.assign(c.data(), c.data() + r);

  const std::size_t dd = state.u.empty() ? 0 : state.u[0].size();
  out.b.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const cplx x = x_nodes[static_cast<std::size_t>(k)];
    const auto& ys = sheets[static_cast<std::size_t>(k)];
    std::vector<cplx> w(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const cplx u = polyval(state.u[static_cast<std::size_t>(k)], ys[i]);
      cplx cg{};
      for (int j = 0; j < r; ++j) cg += c(j) * fam.basis()[static_cast<std::size_t>(j)].eval(x, u);
      w[i] = (h_values[static_cast<std::size_t>(k)][i] - cg) / gu.eval(x, u);
    }
    out.b[static_cast<std::size_t>(k)] = lagrange(ys, w, dd);
  }
  return out;
}

FieldValue vector_field(const DeformationPath& path, const UniversalFamily& fam, double s, const FlowState& state,
                        std::span<const cplx> x_nodes, std::vector<std::vector<cplx>>* sheet_cache,
                        double field_tol) {
  const TriPoly fs = path.F.ds();
  const TriPoly fy = path.F.dy();
  const BiPoly gu = fam.fiber(state.t).dy();
  const int m = static_cast<int>(x_nodes.size());
  const auto d = static_cast<std::size_t>(fam.germ.d);
  if (sheet_cache && sheet_cache->size() != static_cast<std::size_t>(m)) sheet_cache->assign(static_cast<std::size_t>(m), {});

  std::vector<std::vector<cplx>> sheets(static_cast<std::size_t>(m));
  std::vector<std::vector<cplx>> hv(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const cplx x = x_nodes[static_cast<std::size_t>(k)];
    auto ys = sheets_at(path.F, x, s, fam.germ.delta2, d, sheet_cache ? &(*sheet_cache)[static_cast<std::size_t>(k)] : nullptr);
    const auto& uk = state.u[static_cast<std::size_t>(k)];
    auto& h = hv[static_cast<std::size_t>(k)];
    h.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      const cplx fyv = fy.eval(x, ys[i], s);
      if (std::abs(fyv) < 1e-10) throw Error(ErrorCode::SingularSheet, "F_y vanishes at a sheet point on the contour");
      const cplx u = polyval(uk, ys[i]);
      h[i] = fs.eval(x, ys[i], s) * gu.eval(x, u) * polyder(uk, ys[i]) / fyv;
    }
    sheets[static_cast<std::size_t>(k)] = std::move(ys);
  }
  const auto dec = decompose_numeric(fam, x_nodes, sheets, hv, state, field_tol);
  return {dec.c, dec.b, dec.on_curve};
}

double on_curve_residual(const DeformationPath& path, const UniversalFamily& fam, double s,
                         std::span<const cplx> t, std::span<const cplx> x_nodes,
                         const std::vector<std::vector<cplx>>& u_nodes) {
  const BiPoly g = fam.fiber(t);
  double res = 0.0;
  for (std::size_t k = 0; k < x_nodes.size(); ++k) {
    const cplx x = x_nodes[k];
    for (const cplx y : sheets_at(path.F, x, s, fam.germ.delta2, static_cast<std::size_t>(fam.germ.d), nullptr)) {
      res = std::max(res, std::abs(g.eval(x, polyval(u_nodes[k], y))));
    }
  }
  return res;
}

ClassifyResult integrate_path(const DeformationPath& path, const UniversalFamily& fam, const ClassifyOptions& opts) {
  validate_path(path, fam);
  if (opts.steps < 1) throw Error(ErrorCode::InvalidInput, "steps must be positive");
  if (!is_power_of_two(opts.nodes) || opts.nodes > 4096) {
    throw Error(ErrorCode::InvalidInput, "nodes must be a power of two <= 4096");
  }
  const int m = opts.nodes;
  const int r = fam.r;
  const int dd = std::max(fam.germ.d, 2);
  const double rho = opts.rho > 0.0 ? opts.rho : 0.75 * fam.germ.delta1;
  const auto x_nodes = circle_nodes(rho, m);

  FlowState st;
  st.t.assign(static_cast<std::size_t>(r), cplx{});
  st.u.assign(static_cast<std::size_t>(m), std::vector<cplx>(static_cast<std::size_t>(dd), cplx{}));
  for (int k = 0; k < m; ++k) {
    auto& row = st.u[static_cast<std::size_t>(k)];
    if (opts.initial_u) {
      const auto c = opts.initial_u->y_coeffs_at(x_nodes[static_cast<std::size_t>(k)]);
      if (opts.initial_u->y_degree() >= dd) throw Error(ErrorCode::InvalidInput, "initial u has too high a y-degree");
      for (std::size_t j = 0; j < c.size() && j < row.size(); ++j) row[j] = c[j];
    } else {
      row[1] = 1.0;
    }
  }

  ClassifyResult res;
  res.steps = opts.steps;
  res.nodes = m;
  res.rho = rho;
  res.residual_tol = opts.residual_tol;
  res.order = std::min(opts.order > 0 ? opts.order : fam.germ.order, m / 2);

  std::vector<std::vector<cplx>> cache;
  auto field = [&](double s, const Flat& v) {
    return flatten(vector_field(path, fam, s, unflatten(v, r, m, dd), x_nodes, &cache, opts.field_tol));
  };
  auto record = [&](double s, const Flat& v, const Flat& dv) {
    const FlowState fs = unflatten(v, r, m, dd);
    const FlowState dfs = unflatten(dv, r, m, dd);
    res.s.push_back(s);
    res.phi.push_back(fs.t);
    res.states.push_back(fs);
    res.dphi.push_back(dfs.t);
    res.du.push_back(dfs.u);
  };

  const double h = path.s_max / opts.steps;
  Flat y = flatten(st);
  for (int n = 0; n < opts.steps; ++n) {
    const double s = n * h;
    const Flat k1 = field(s, y);
    record(s, y, k1);
    const Flat k2 = field(s + h / 2, axpy(y, h / 2, k1));
    const Flat k3 = field(s + h / 2, axpy(y, h / 2, k2));
    const Flat k4 = field(s + h, axpy(y, h, k3));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  record(path.s_max, y, field(path.s_max, y));

  const FlowState& last = res.states.back();
  res.residual = on_curve_residual(path, fam, path.s_max, last.t, x_nodes, last.u);
  for (int j = 0; j < dd; ++j) {
    std::vector<cplx> vals(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) vals[static_cast<std::size_t>(k)] = last.u[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    res.u_final.push_back(cauchy_taylor(vals, rho, res.order));
  }
  if (res.residual > opts.residual_tol) {
    throw Error(ErrorCode::ToleranceExceeded, "on-curve residual above tolerance");
  }
  if (opts.halving_check) {
    ClassifyOptions fine = opts;
    fine.steps = 2 * opts.steps;
    fine.halving_check = false;
    const ClassifyResult other = integrate_path(path, fam, fine);
    double diff = 0.0;
    for (int i = 0; i < r; ++i) diff = std::max(diff, std::abs(other.t_final()[static_cast<std::size_t>(i)] - res.t_final()[static_cast<std::size_t>(i)]));
    res.halving_diff = diff;
    if (diff >= 10.0 * opts.residual_tol) {
      throw Error(ErrorCode::ToleranceExceeded, "step halving moves the endpoint");
    }
  }
  return res;
}

PullbackReport verify_pullback(const DeformationPath& path, const ClassifyResult& result, const UniversalFamily& fam) {
  PullbackReport rep;
  const int m = result.nodes;
  const int r = fam.r;
  const auto coarse = circle_nodes(result.rho, m);
  const auto fine = circle_nodes(result.rho, 2 * m);
  const std::size_t dd = result.states.front().u.front().size();

  auto extend = [&](const std::vector<std::vector<cplx>>& u) {
    std::vector<std::vector<cplx>> out(fine.size(), std::vector<cplx>(dd));
    for (std::size_t j = 0; j < dd; ++j) {
      std::vector<cplx> vals(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) vals[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)][j];
      const auto ext = spectral_extend(vals, result.rho, fine, &rep.holomorphy_defect);
      for (std::size_t k = 0; k < fine.size(); ++k) out[k][j] = ext[k];
    }
    return out;
  };

  const std::size_t n = result.s.size();
  for (std::size_t i = 0; i < n; ++i) {
    rep.residual = std::max(rep.residual, on_curve_residual(path, fam, result.s[i], result.phi[i], fine,
                                                            extend(result.states[i].u)));
    if (i + 1 == n) break;
    const double h = result.s[i + 1] - result.s[i];
    std::vector<cplx> t(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      t[jj] = 0.5 * (result.phi[i][jj] + result.phi[i + 1][jj]) + h / 8 * (result.dphi[i][jj] - result.dphi[i + 1][jj]);
    }
    std::vector<std::vector<cplx>> u(static_cast<std::size_t>(m), std::vector<cplx>(dd));
    for (int k = 0; k < m; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      for (std::size_t j = 0; j < dd; ++j) {
        u[kk][j] = 0.5 * (result.states[i].u[kk][j] + result.states[i + 1].u[kk][j]) +
                   h / 8 * (result.du[i][kk][j] - result.du[i + 1][kk][j]);
      }
    }
    rep.residual = std::max(rep.residual,
                            on_curve_residual(path, fam, 0.5 * (result.s[i] + result.s[i + 1]), t, fine, extend(u)));
  }

  const TriPoly fy = path.F.dy();
  const BiPoly gu = fam.fiber(result.phi.front()).dy();
  for (int k = 0; k < m; ++k) {
    const cplx x = coarse[static_cast<std::size_t>(k)];
    const auto& uk = result.states.front().u[static_cast<std::size_t>(k)];
    for (const cplx y : sheets_at(path.F, x, 0.0, fam.germ.delta2, static_cast<std::size_t>(fam.germ.d), nullptr)) {
      const cplx hval = fy.eval(x, y, 0.0) / (gu.eval(x, polyval(uk, y)) * polyder(uk, y));
      rep.unit_deviation = std::max(rep.unit_deviation, std::abs(hval - 1.0));
    }
  }
  return rep;
}

namespace {

// Drops coefficients at negative exponents, which must be negligible.
TruncSeries holomorphic_part(const TruncSeries& s) {
  if (s.valuation() >= 0) return s;
  double worst = 0.0;
  for (int e = s.valuation(); e < std::min(0, s.order()); ++e) worst = std::max(worst, std::abs(s.coeff(e)));
  if (worst > 1e-8) throw Error(ErrorCode::TruncationUnstable, "division by f_y left a pole");
  if (s.order() <= 0) throw Error(ErrorCode::TruncationUnstable, "jet order exhausted");
  return TruncSeries::from_coeffs(0, std::vector<cplx>(s.coeffs().begin() - s.valuation(), s.coeffs().end()));
}

}  // namespace

ExactDecomposition decompose_exact(const BiPoly& h, const YPoly& u, const UniversalFamily& fam, int order) {
  const Germ& germ = fam.germ;
  const int n = std::min(order > 0 ? order : germ.order, u.min_order());
  const int d = germ.d;
  const int r = fam.r;
  const LocalAlgebra la(germ, n);
  const YPoly& f = la.f();
  const YPoly& q = la.fy_inverse();

  const YPoly v = subst_invert(u);
  const YPoly ht = ypoly_reduce(ypoly_subst(h.to_ypoly(n), v), f);

  ExactDecomposition out;
  YPoly rest = ht;
  for (int j = 0; j < r; ++j) {
    const cplx cj = la.pairing(ht, fam.dual()[static_cast<std::size_t>(j)].to_ypoly(n));
    out.c.push_back(cj);
    rest -= fam.basis()[static_cast<std::size_t>(j)].to_ypoly(n) * cj;
  }
  YPoly bt = ypoly_reduce(rest * q, f);
  for (int k = 0; k < bt.size(); ++k) bt.at(k) = holomorphic_part(bt[k]);

  // W = prod (y - v(y_i)) from the traces of v^k and Newton's identities
  std::vector<TruncSeries> psum(static_cast<std::size_t>(d + 1));
  YPoly vk = YPoly::constant(TruncSeries::constant(1.0, n));
  const YPoly vred = ypoly_reduce(v, f);
  for (int k = 1; k <= d; ++k) {
    vk = ypoly_reduce(vk * vred, f);
    const SeriesMatrix mm = mult_matrix(f, vk);
    TruncSeries tr;
    for (int i = 0; i < d; ++i) tr += mm[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    psum[static_cast<std::size_t>(k)] = tr;
  }
  std::vector<TruncSeries> e(static_cast<std::size_t>(d + 1));
  e[0] = TruncSeries::constant(1.0, n);
  for (int k = 1; k <= d; ++k) {
    TruncSeries acc = TruncSeries::zero(n);
    for (int i = 1; i <= k; ++i) {
      const TruncSeries term = e[static_cast<std::size_t>(k - i)] * psum[static_cast<std::size_t>(i)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[static_cast<std::size_t>(k)] = acc * cplx(1.0 / k);
  }
  std::vector<TruncSeries> wc(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) wc[static_cast<std::size_t>(d - k)] = e[static_cast<std::size_t>(k)] * cplx(k % 2 == 0 ? 1.0 : -1.0);
  wc[static_cast<std::size_t>(d)] = TruncSeries::constant(1.0, n);
  const YPoly w(std::move(wc));

  out.b = ypoly_reduce(ypoly_subst(bt, u), w).trimmed(0.0);

  // a = (h - b f_y(u) - c g(u)) / f(u), x-adically
  const YPoly fu = ypoly_subst(f, u);
  YPoly rem = h.to_ypoly(n) - out.b * ypoly_subst(f.derivative(), u);
  for (int j = 0; j < r; ++j) rem -= ypoly_subst(fam.basis()[static_cast<std::size_t>(j)].to_ypoly(n), u) * out.c[static_cast<std::size_t>(j)];
  const int kmax = std::max(0, std::min({n, rem.min_order(), fu.min_order(), out.b.size() ? out.b.min_order() : n}));

  auto x_major = [kmax](const YPoly& p) {
    std::vector<std::vector<cplx>> m(static_cast<std::size_t>(kmax), std::vector<cplx>(static_cast<std::size_t>(std::max(p.size(), 1)), cplx{}));
    for (int j = 0; j < p.size(); ++j) {
      for (int k = std::max(0, p[j].valuation()); k < kmax; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = p[j].coeff(k);
    }
    return m;
  };
  const auto rk = x_major(rem);
  const auto pk = x_major(fu);
  for (std::size_t j = 0; kmax > 0 && j < pk[0].size(); ++j) {
    const cplx want = (static_cast<int>(j) == d) ? cplx{1.0} : cplx{};
    if (std::abs(pk[0][j] - want) > 1e-10) throw Error(ErrorCode::NoContraction, "f(x, u) is not y^d at x = 0");
  }
  for (int k = 0; k < kmax; ++k) {
    std::vector<cplx> num = rk[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) {
      const auto& aj = out.a[static_cast<std::size_t>(j)];
      const auto& pj = pk[static_cast<std::size_t>(k - j)];
      if (num.size() < aj.size() + pj.size()) num.resize(aj.size() + pj.size(), cplx{});
      for (std::size_t i1 = 0; i1 < aj.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < pj.size(); ++i2) num[i1 + i2] -= aj[i1] * pj[i2];
      }
    }
    for (int j = 0; j < d && j < static_cast<int>(num.size()); ++j) {
      out.residual = std::max(out.residual, std::abs(num[static_cast<std::size_t>(j)]));
    }
    std::vector<cplx> ak;
    if (static_cast<int>(num.size()) > d) ak.assign(num.begin() + d, num.end());
    while (!ak.empty() && ak.back() == cplx{}) ak.pop_back();
    out.a.push_back(std::move(ak));
  }
  return out;
}

}  // namespace germdeform
