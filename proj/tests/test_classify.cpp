#include <doctest.h>

#include <random>

#include "germdeform/classify.hpp"
#include "germdeform/error.hpp"
#include "helpers.hpp"

using namespace germdeform;
using th::near;

namespace {

const UniversalFamily& e1() {
  static const UniversalFamily fam = build_family(normalize_germ(th::pure(3, 2)));
  return fam;
}

const std::vector<cplx> kTarget{0.002, 0.0, 0.001, 0.0};

std::vector<TriPoly> linear_phi(const std::vector<cplx>& t) {
  std::vector<TriPoly> phi;
  for (const cplx c : t) phi.push_back(TriPoly::var_s() * c);
  return phi;
}

DeformationPath straight_line() {
  return {manufactured_path(e1(), TriPoly::var_y(), linear_phi(kTarget), TriPoly::constant(1.0)), 1.0};
}

// t(s) = s t2 + i s^2 t2, u = y + 2e-3 s x + 1e-2 s^2 x y, H = 1 + 0.1 s y
const std::vector<cplx> kT2{0.003, -0.002, 0.001, 0.002};

DeformationPath manufactured() {
  std::vector<TriPoly> phi;
  const auto s = TriPoly::var_s();
  for (const cplx c : kT2) phi.push_back(s * c + s * s * (c * cplx(0, 1)));
  const auto u = TriPoly::var_y() + s * TriPoly::var_x() * cplx(2e-3) + s * s * TriPoly::var_x() * TriPoly::var_y() * cplx(1e-2);
  const auto H = TriPoly::constant(1.0) + s * TriPoly::var_y() * cplx(0.1);
  return {manufactured_path(e1(), u, phi, H), 1.0};
}

FlowState state_at(std::vector<cplx> t, std::span<const cplx> xs, const std::function<std::vector<cplx>(cplx)>& u) {
  FlowState st;
  st.t = std::move(t);
  for (const cplx x : xs) st.u.push_back(u(x));
  return st;
}

double sup(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("path validation") {
  auto bad = TriPoly::from_bipoly(th::bp(th::pure(3, 1)));
  CHECK_THROWS_AS(validate_path({bad, 1.0}, e1()), Error);
  CHECK_NOTHROW(validate_path(straight_line(), e1()));
}

TEST_CASE("field of the straight line is constant") {
  auto xs = circle_nodes(0.75, 64);
  auto path = straight_line();
  for (double s : {0.0, 0.5}) {
    std::vector<cplx> t;
    for (const cplx c : kTarget) t.push_back(s * c);
    auto st = state_at(t, xs, [](cplx) { return std::vector<cplx>{0.0, 1.0, 0.0}; });
    auto fv = vector_field(path, e1(), s, st, xs);
    CHECK(sup(fv.dt, kTarget) < 1e-12);
    double du = 0;
    for (const auto& row : fv.du)
      for (const cplx c : row) du = std::max(du, std::abs(c));
    CHECK(du < 1e-12);
  }
}

TEST_CASE("field of the constant path vanishes") {
  auto xs = circle_nodes(0.75, 64);
  DeformationPath path{TriPoly::from_bipoly(e1().germ.f), 1.0};
  auto st = state_at(std::vector<cplx>(4), xs, [](cplx) { return std::vector<cplx>{0.0, 1.0, 0.0}; });
  auto fv = vector_field(path, e1(), 0.3, st, xs);
  for (const cplx c : fv.dt) CHECK(std::abs(c) < 1e-14);
}

TEST_CASE("field matches the manufactured derivatives") {
  auto xs = circle_nodes(0.75, 64);
  auto path = manufactured();
  const double s = 0.3;
  std::vector<cplx> t, dt;
  for (const cplx c : kT2) {
    t.push_back(s * c + s * s * c * cplx(0, 1));
    dt.push_back(c + 2.0 * s * c * cplx(0, 1));
  }
  auto st = state_at(t, xs, [&](cplx x) { return std::vector<cplx>{2e-3 * s * x, 1.0 + 1e-2 * s * s * x, 0.0}; });
  auto fv = vector_field(path, e1(), s, st, xs);
  CHECK(sup(fv.dt, dt) < 1e-7);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const std::vector<cplx> du{2e-3 * xs[k], 2e-2 * s * xs[k], 0.0};
    CHECK(sup(fv.du[k], du) < 1e-7);
  }
}

TEST_CASE("numeric decomposition") {
  const auto& fam = e1();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cplx> c_prev;
  for (int M : {128, 256}) {
    auto sheets = roots_on_circle([&](cplx x) { return fam.germ.f.y_coeffs_at(x); }, 0.75, M);
    auto st = state_at(std::vector<cplx>(4), sheets.x, [](cplx) { return std::vector<cplx>{0.0, 1.0, 0.0}; });

    // h = g_1 decomposes as e_1
    std::vector<std::vector<cplx>> hv(sheets.x.size(), std::vector<cplx>(3, 1.0));
    auto d1 = decompose_numeric(fam, sheets.x, sheets.sheets, hv, st);
    CHECK(sup(d1.c, std::vector<cplx>{1.0, 0.0, 0.0, 0.0}) < 1e-9);
    for (const auto& b : d1.b)
      for (const cplx c : b) CHECK(std::abs(c) < 1e-9);

    // random h of y-degree < 3: h = b f_y + c.g on the sheets
    rng.seed(17);
    std::vector<Term> terms;
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) terms.push_back({a, b, std::polar(std::abs(u(rng)), 3.0 * u(rng))});
    auto h = th::bp(terms);
    for (std::size_t k = 0; k < sheets.x.size(); ++k)
      for (int i = 0; i < 3; ++i) hv[k][static_cast<std::size_t>(i)] = h.eval(sheets.x[k], sheets.sheets[k][static_cast<std::size_t>(i)]);
    auto d = decompose_numeric(fam, sheets.x, sheets.sheets, hv, st);
    double res = 0;
    const auto fy = fam.germ.f.dy();
    for (std::size_t k = 0; k < sheets.x.size(); ++k) {
      for (int i = 0; i < 3; ++i) {
        const cplx x = sheets.x[k], y = sheets.sheets[k][static_cast<std::size_t>(i)];
        cplx b = 0;
        for (int j = 2; j >= 0; --j) b = b * y + d.b[k][static_cast<std::size_t>(j)];
        cplx v = b * fy.eval(x, y);
        for (int l = 0; l < 4; ++l) v += d.c[static_cast<std::size_t>(l)] * fam.basis()[static_cast<std::size_t>(l)].eval(x, y);
        res = std::max(res, std::abs(v - h.eval(x, y)));
      }
    }
    CHECK(res < 1e-9);
    if (!c_prev.empty()) CHECK(sup(c_prev, d.c) < 1e-9);
    c_prev = d.c;
  }
}

TEST_CASE("straight line classification") {
  ClassifyOptions o;
  o.nodes = 64;
  auto path = straight_line();
  auto res = integrate_path(path, e1(), o);
  CHECK(sup(res.t_final(), kTarget) < 1e-6);
  CHECK(res.residual < 1e-12);
  CHECK(res.halving_diff >= 0.0);
  for (const auto& row : res.states.back().u) CHECK(sup(row, std::vector<cplx>{0.0, 1.0, 0.0}) < 1e-8);
  auto pull = verify_pullback(path, res, e1());
  CHECK(pull.residual < 1e-12);
  CHECK(pull.unit_deviation < 1e-12);
}

TEST_CASE("manufactured classification and step order") {
  auto path = manufactured();
  std::vector<cplx> want;
  for (const cplx c : kT2) want.push_back(c * cplx(1, 1));
  double prev = 0;
  for (int K : {8, 16}) {
    ClassifyOptions o;
    o.nodes = 64;
    o.steps = K;
    o.halving_check = false;
    o.field_tol = 1e-2;
    auto res = integrate_path(path, e1(), o);
    const double err = sup(res.t_final(), want);
    CHECK(err < 1e-6);
    if (prev > 0) CHECK(prev / err >= 8.0);
    prev = err;
    auto pull = verify_pullback(path, res, e1());
    CHECK(pull.residual < 1e-8);
  }
}

TEST_CASE("corrupted result is detected") {
  ClassifyOptions o;
  o.nodes = 64;
  o.halving_check = false;
  auto path = straight_line();
  auto res = integrate_path(path, e1(), o);
  auto t = res.t_final();
  t[0] += 1e-3;
  auto xs = circle_nodes(res.rho, res.nodes);
  CHECK(on_curve_residual(path, e1(), 1.0, t, xs, res.states.back().u) > 1e-5);
}

TEST_CASE("exact decomposition examples") {
  const auto& fam = e1();
  const int N = fam.germ.order;
  auto id = YPoly::identity(N);
  auto d1 = decompose_exact(fam.basis()[0], id, fam);
  CHECK(sup(d1.c, std::vector<cplx>{1.0, 0.0, 0.0, 0.0}) < 1e-12);
  CHECK(d1.b.max_abs() < 1e-12);

  auto d2 = decompose_exact(fam.germ.f, id, fam);
  CHECK(near(d2.a[0][0], 1.0, 1e-12));
  CHECK(sup(d2.c, std::vector<cplx>(4)) < 1e-12);

  auto d3 = decompose_exact(fam.germ.f.dy() * BiPoly::monomial(1.0, 0, 1), id, fam);
  CHECK(near(d3.b[1].coeff(0), 1.0, 1e-12));
  CHECK(d3.residual < 1e-12);

  auto u = id + YPoly::monomial(0.1, 1, 2, N) + YPoly::monomial(0.05, 1, 0, N);
  auto h = th::bp({{0, 0, 0.3}, {1, 1, 0.5}, {0, 2, 0.7}, {2, 1, -0.2}});
  CHECK(decompose_exact(h, u, fam).residual < 1e-10);
}
