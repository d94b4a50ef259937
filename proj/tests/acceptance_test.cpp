// Acceptance suite: one PASS/FAIL line per criterion.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "germdeform/classify.hpp"
#include "germdeform/error.hpp"

using namespace germdeform;

namespace {

constexpr std::uint64_t kSeed = 20240611;

std::vector<Term> pure(int n, int k) { return {{0, n, {1.0, 0.0}}, {k, 0, {-1.0, 0.0}}}; }

const std::vector<std::pair<int, int>> kCorpus{{2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 2}, {4, 3}};

UniversalFamily family_of(const std::vector<Term>& terms) {
  FamilyOptions o;
  o.seed = kSeed;
  return build_family(normalize_germ(terms), o);
}

const UniversalFamily& e1() {
  static const UniversalFamily fam = family_of(pure(3, 2));
  return fam;
}

double sup(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Zeros of p inside |x| = rho by the winding number of p on the circle;
// independent of any root finder.
int winding_count(const Poly& p, double rho, int samples = 8192) {
  double turn = 0;
  cplx prev = p.eval(rho);
  for (int k = 1; k <= samples; ++k) {
    const cplx cur = p.eval(std::polar(rho, 2 * std::numbers::pi * k / samples));
    turn += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(turn / (2 * std::numbers::pi)));
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %2d  %-34s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void guarded(int id, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

std::vector<TriPoly> linear_phi(const std::vector<cplx>& t) {
  std::vector<TriPoly> phi;
  for (const cplx c : t) phi.push_back(TriPoly::var_s() * c);
  return phi;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  guarded(1, "e1 anchor basis", [] {
    Germ g = normalize_germ(pure(3, 2));
    auto q = analyze_quotient(g);
    std::string got;
    for (const auto& b : q.basis_g) got += (got.empty() ? "" : ",") + b.to_string();
    const bool ok = g.d == 3 && g.r == 4 && got == "1,x,y,x*y";
    report(1, "e1 anchor basis", ok, "d=" + std::to_string(g.d) + " r=" + std::to_string(g.r) + " basis={" + got + "}");
  });

  guarded(2, "Z3 equivariance of dis", [] {
    const cplx q = std::polar(1.0, 2 * std::numbers::pi / 3);
    std::mt19937_64 rng(kSeed + 2);
    double err = 0;
    for (int i = 0; i < 50; ++i) {
      auto t = random_parameter(rng, 4, 0.01);
      auto tq = t;
      tq[2] *= q;
      tq[3] *= q;
      err = std::max(err, sup(dis_map(e1(), t), dis_map(e1(), tq)));
    }
    report(2, "Z3 equivariance of dis", err < 1e-8, fmt("max err %.3g < %.0e", err, 1e-8));
  });

  guarded(3, "trace identities", [] {
    std::mt19937_64 rng(kSeed + 3);
    std::normal_distribution<double> nd;
    double err = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 1 + trial % 6;
      std::vector<cplx> roots;
      while (static_cast<int>(roots.size()) < d) {
        const cplx z{nd(rng), nd(rng)};
        bool apart = true;
        for (const cplx w : roots) apart = apart && std::abs(z - w) > 1e-2;
        if (apart) roots.push_back(z);
      }
      const auto coeffs = poly_from_roots(roots);
      const Poly f(coeffs);
      const Poly fp = f.derivative();
      const auto found = poly_roots(coeffs);
      for (int n = 0; n < d; ++n) {
        cplx s = 0;
        for (const cplx y : found) s += std::pow(y, n) / fp.eval(y);
        err = std::max(err, std::abs(s - (n == d - 1 ? 1.0 : 0.0)));
      }
    }
    report(3, "trace identities", err < 1e-10, fmt("max err %.3g < %.0e", err, 1e-10));
  });

  guarded(4, "exact vs contour pairing", [] {
    double err = 0;
    for (auto [n, k] : kCorpus) {
      Germ g = normalize_germ(pure(n, k));
      std::vector<BiPoly> mons;
      for (int b = 0; b < n; ++b)
        for (int a = 0; a <= 2; ++a) mons.push_back(BiPoly::monomial(1.0, a, b));
      for (const auto& p : mons)
        for (const auto& q : mons) {
          const cplx ex = residue_pairing(p, q, g);
          const cplx ct = residue_pairing_contour(p, q, g.f, 0.75 * g.delta1, 512);
          err = std::max(err, std::abs(ex - ct));
        }
    }
    report(4, "exact vs contour pairing", err < 1e-8, fmt("max err %.3g < %.0e", err, 1e-8));
  });

  guarded(5, "dual basis certificate and B(t)", [] {
    double cert = 0, b0 = 0;
    for (auto [n, k] : kCorpus) {
      auto fam = family_of(pure(n, k));
      LocalAlgebra la(fam.germ, fam.germ.order);
      auto P = pairing_matrix(la, fam.basis(), fam.dual());
      cert = std::max(cert, (P - Eigen::MatrixXcd::Identity(fam.r, fam.r)).cwiseAbs().maxCoeff());
      auto B = B_matrix(fam, std::vector<cplx>(static_cast<std::size_t>(fam.r)));
      b0 = std::max(b0, (B - Eigen::MatrixXcd::Identity(fam.r, fam.r)).cwiseAbs().maxCoeff());
    }
    std::mt19937_64 rng(kSeed + 5);
    double bt = 0;
    for (int i = 0; i < 20; ++i) {
      auto t = random_parameter(rng, 4, 1e-3);
      auto B = B_matrix(e1(), t);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B - Eigen::MatrixXcd::Identity(4, 4));
      bt = std::max(bt, svd.singularValues()(0));
    }
    const bool ok = cert < 1e-10 && b0 < 1e-10 && bt < 0.2;
    char buf[200];
    std::snprintf(buf, sizeof buf, "pairing %.3g, B(0) %.3g (< 1e-10); max ||B(t)-I|| %.3g < 0.2", cert, b0, bt);
    report(5, "dual basis certificate and B(t)", ok, buf);
  });

  guarded(6, "local constancy of multiplicity", [] {
    std::mt19937_64 rng(kSeed + 6);
    int bad = 0, oracle_bad = 0, total = 0;
    for (auto [n, k] : kCorpus) {
      auto fam = family_of(pure(n, k));
      for (int i = 0; i < 100; ++i) {
        auto t = random_parameter(rng, fam.r, fam.param_box);
        ++total;
        if (fiber_classification(fam, t).multiplicity_sum != fam.r) ++bad;
        if (winding_count(discriminant_x(fam.fiber(t)), fam.germ.delta1 / 2) != fam.r) ++oracle_bad;
      }
    }
    report(6, "local constancy of multiplicity", bad == 0 && oracle_bad == 0,
           std::to_string(total - bad) + "/" + std::to_string(total) + " library, " + std::to_string(total - oracle_bad) +
               "/" + std::to_string(total) + " winding-number oracle");
  });

  guarded(7, "density of T*", [] {
    std::mt19937_64 rng(kSeed + 7);
    int good = 0;
    for (int i = 0; i < 200; ++i) {
      auto rep = fiber_classification(e1(), random_parameter(rng, 4, e1().param_box));
      if (rep.smooth && rep.simple_branch) ++good;
    }
    report(7, "density of T*", good >= 190, fmt("%.0f/%.0f in T* (>= 95%%)", good, 200));
  });

  guarded(8, "branch map rank", [] {
    std::mt19937_64 rng(kSeed + 8);
    double worst = 1e300;
    int points = 0;
    const double h = 1e-6;
    while (points < 20) {
      auto t = random_parameter(rng, 4, 0.5 * e1().param_box);
      auto rep = fiber_classification(e1(), t);
      if (!(rep.smooth && rep.simple_branch)) continue;
      Eigen::MatrixXcd J(4, 4);
      for (int j = 0; j < 4; ++j) {
        auto tp = t, tm = t;
        tp[static_cast<std::size_t>(j)] += h;
        tm[static_cast<std::size_t>(j)] -= h;
        auto dp = dis_map(e1(), tp), dm = dis_map(e1(), tm);
        for (int i = 0; i < 4; ++i) J(i, j) = (dp[static_cast<std::size_t>(i)] - dm[static_cast<std::size_t>(i)]) / (2 * h);
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J);
      worst = std::min(worst, svd.singularValues()(3));
      ++points;
    }
    report(8, "branch map rank", worst > 1e-6, fmt("min singular value %.3g > %.0e", worst, 1e-6));
  });

  guarded(9, "decomposition reconstruction", [] {
    const auto& fam = e1();
    std::mt19937_64 rng(kSeed + 9);
    std::uniform_real_distribution<double> u(0, 1);
    double res = 0, stab = 0;
    const auto t = random_parameter(rng, 4, 0.5 * fam.param_box);
    const BiPoly G = fam.fiber(t);
    const BiPoly Gy = G.dy();
    std::vector<NumericDecomposition> prev;
    for (int M : {128, 256}) {
      auto ss = roots_on_circle([&](cplx x) { return G.y_coeffs_at(x); }, 0.75 * fam.germ.delta1, M);
      FlowState st;
      st.t = t;
      st.u.assign(ss.x.size(), std::vector<cplx>{0.0, 1.0, 0.0});
      std::mt19937_64 hr(kSeed + 99);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> terms;
        for (int b = 0; b < 3; ++b)
          for (int a = 0; a < 3; ++a) terms.push_back({a, b, std::polar(u(hr), 2 * std::numbers::pi * u(hr))});
        const BiPoly h = BiPoly::from_terms(terms);
        std::vector<std::vector<cplx>> hv(ss.x.size());
        for (std::size_t k = 0; k < ss.x.size(); ++k)
          for (const cplx y : ss.sheets[k]) hv[k].push_back(h.eval(ss.x[k], y));
        auto d = decompose_numeric(fam, ss.x, ss.sheets, hv, st);
        for (std::size_t k = 0; k < ss.x.size(); ++k) {
          for (const cplx y : ss.sheets[k]) {
            const cplx x = ss.x[k];
            cplx b = 0;
            for (int j = static_cast<int>(d.b[k].size()) - 1; j >= 0; --j) b = b * y + d.b[k][static_cast<std::size_t>(j)];
            cplx v = b * Gy.eval(x, y);
            for (int l = 0; l < 4; ++l) v += d.c[static_cast<std::size_t>(l)] * fam.basis()[static_cast<std::size_t>(l)].eval(x, y);
            res = std::max(res, std::abs(v - h.eval(x, y)));
          }
        }
        if (M == 128) {
          prev.push_back(d);
        } else {
          stab = std::max(stab, sup(prev[static_cast<std::size_t>(trial)].c, d.c));
        }
      }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "on-curve residual %.3g < 1e-9; c change under 2M %.3g < 1e-9", res, stab);
    report(9, "decomposition reconstruction", res < 1e-9 && stab < 1e-9, buf);
  });

  guarded(10, "classification round trips", [] {
    const auto& fam = e1();
    const std::vector<cplx> target{0.002, 0.0, 0.001, 0.0};
    ClassifyOptions o;
    o.nodes = 64;
    o.steps = 64;

    // (i) straight line
    DeformationPath line{manufactured_path(fam, TriPoly::var_y(), linear_phi(target), TriPoly::constant(1.0)), 1.0};
    const double e_i = sup(integrate_path(line, fam, o).t_final(), target);

    // (ii) shear u = y + 1e-3 s x
    const auto s = TriPoly::var_s();
    DeformationPath shear{manufactured_path(fam, TriPoly::var_y() + s * TriPoly::var_x() * cplx(1e-3), linear_phi(target),
                                            TriPoly::constant(1.0)),
                          1.0};
    auto rs = integrate_path(shear, fam, o);
    const double e_ii = sup(rs.t_final(), target);
    double eu = 0;
    const auto xs = circle_nodes(rs.rho, rs.nodes);
    for (std::size_t k = 0; k < xs.size(); ++k)
      eu = std::max(eu, sup(rs.states.back().u[k], std::vector<cplx>{1e-3 * xs[k], 1.0, 0.0}));

    // (iii) step halving on a nonlinear manufactured family: RK4 is exact on (i) and (ii)
    const std::vector<cplx> t2{0.003, -0.002, 0.001, 0.002};
    std::vector<TriPoly> phi;
    std::vector<cplx> want;
    for (const cplx c : t2) {
      phi.push_back(s * c + s * s * (c * cplx(0, 1)));
      want.push_back(c * cplx(1, 1));
    }
    const auto u3 = TriPoly::var_y() + s * TriPoly::var_x() * cplx(2e-3) + s * s * TriPoly::var_x() * TriPoly::var_y() * cplx(1e-2);
    const auto H = TriPoly::constant(1.0) + s * TriPoly::var_y() * cplx(0.1);
    DeformationPath nonlin{manufactured_path(fam, u3, phi, H), 1.0};
    ClassifyOptions oc = o;
    oc.halving_check = false;
    oc.field_tol = 1e-2;
    oc.steps = 8;
    const double e8 = sup(integrate_path(nonlin, fam, oc).t_final(), want);
    oc.steps = 16;
    const double e16 = sup(integrate_path(nonlin, fam, oc).t_final(), want);
    const double ratio = e8 / e16;

    // (iv) restart from a perturbed initial u on a path leaving the basis directions
    DeformationPath off{TriPoly::from_bipoly(fam.germ.f) + s * TriPoly::from_bipoly(BiPoly::monomial(0.01, 2, 2)), 1.0};
    auto r1 = integrate_path(off, fam, o);
    ClassifyOptions op = o;
    op.initial_u = BiPoly::monomial(1.0, 0, 1) + BiPoly::monomial(1e-8, 1, 0) + BiPoly::monomial(1e-8, 0, 1);
    op.halving_check = false;
    auto r2 = integrate_path(off, fam, op);
    const double e_iv = sup(r1.t_final(), r2.t_final());

    const bool ok = e_i < 1e-6 && e_ii < 1e-6 && eu < 1e-7 && ratio >= 8.0 && e_iv < 1e-6 && r1.residual < 1e-7;
    char buf[300];
    std::snprintf(buf, sizeof buf,
                  "(i) %.2g (ii) phi %.2g u %.2g (iii) %.3g/%.3g = %.1fx (iv) %.2g, residual %.2g", e_i, e_ii, eu, e8, e16,
                  ratio, e_iv, r1.residual);
    report(10, "classification round trips", ok, buf);
  });

  guarded(11, "hyperelliptic prescription", [] {
    auto sb = symmetric_basis(normalize_germ(pure(4, 2)), SigmaType::Fixed);
    std::string got;
    for (const auto& b : sb.basis) got += (got.empty() ? "" : ",") + b.to_string();
    const bool ok = got == "1,y" && sb.span_deficit && sb.reference_dim == sb.r + 1;
    report(11, "hyperelliptic prescription", ok,
           "basis=(" + got + ") reference_dim=" + std::to_string(sb.reference_dim) + " warning: " + sb.warning);
  });

  guarded(12, "reality slice", [] {
    // y^2 - i x and its conjugate y^2 + i x swapped by eta; e1 fixed
    auto a = family_of({{0, 2, 1.0}, {1, 0, {0.0, -1.0}}});
    auto b = family_of({{0, 2, 1.0}, {1, 0, {0.0, 1.0}}});
    auto coll = assemble_collection({a, b, e1()}, std::nullopt, std::vector<int>{1, 0, 2});
    std::mt19937_64 rng(kSeed + 12);
    std::normal_distribution<double> nd;
    double idem = 0, keep = 0;
    bool membership = true;
    for (int i = 0; i < 50; ++i) {
      std::vector<cplx> t;
      for (int j = 0; j < coll.total_dim; ++j) t.push_back({nd(rng), nd(rng)});
      auto p = reality_constrain(coll, t);
      auto pp = reality_constrain(coll, p.t);
      idem = std::max(idem, sup(p.t, pp.t));
      membership = membership && !p.member && pp.member;
      // constructed member: t_b = conj(t_a), e1 block real
      std::vector<cplx> m = t;
      m[1] = std::conj(m[0]);
      for (int j = 2; j < 6; ++j) m[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)].real();
      auto pm = reality_constrain(coll, m);
      membership = membership && pm.member;
      keep = std::max(keep, sup(pm.t, m));
    }
    const bool ok = idem < 1e-12 && keep < 1e-12 && membership && coll.real_slice_dim == 1 + 1 + 4;
    char buf[200];
    std::snprintf(buf, sizeof buf, "idempotence %.2g, member drift %.2g (< 1e-12), membership %s, real dim %d", idem, keep,
                  membership ? "exact" : "WRONG", coll.real_slice_dim);
    report(12, "reality slice", ok, buf);
  });

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 12 criteria failed; %.1f s\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
