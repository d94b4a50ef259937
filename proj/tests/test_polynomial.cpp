#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "germdeform/contour.hpp"
#include "germdeform/polynomial.hpp"
#include "helpers.hpp"

using namespace germdeform;
using th::near;

TEST_CASE("monomial names") {
  CHECK(monomial_name(0, 0) == "1");
  CHECK(monomial_name(1, 0) == "x");
  CHECK(monomial_name(1, 1) == "x*y");
  CHECK(monomial_name(2, 3) == "x^2*y^3");
  auto p = th::bp({{1, 1, 3.0}, {0, 0, 2.0}});
  CHECK(p.to_string() == "2 + 3*x*y");
}

TEST_CASE("bivariate arithmetic and derivatives") {
  auto f = th::bp({{0, 3, 1.0}, {2, 0, -1.0}});
  CHECK(f.y_degree() == 3);
  CHECK(f.x_degree() == 2);
  CHECK(near(f.eval(2.0, 1.0), -3.0, 1e-15));
  CHECK(near(f.dy().eval(0.0, 2.0), 12.0, 1e-15));
  CHECK(near(f.dx().eval(3.0, 0.0), -6.0, 1e-15));
  auto g = f * f;
  CHECK(near(g.eval(0.3, 0.7), f.eval(0.3, 0.7) * f.eval(0.3, 0.7), 1e-14));
  CHECK(near(f.scale_x(2.0).eval(1.0, 0.0), -4.0, 1e-15));
  CHECK(near(f.reflect_x().eval(1.0, 1.0), f.eval(-1.0, 1.0), 1e-15));
}

TEST_CASE("trivariate evaluation and substitution") {
  auto F = TriPoly::from_bipoly(th::bp({{0, 2, 1.0}, {1, 0, -1.0}})) + TriPoly::var_s() * TriPoly::var_x() * TriPoly::var_y();
  CHECK(near(F.eval(0.5, 2.0, 3.0), 4.0 - 0.5 + 3.0, 1e-14));
  CHECK(near(F.ds().eval(0.5, 2.0, 7.0), 1.0, 1e-15));
  CHECK(near(F.at_s(2.0).eval(1.0, 1.0), 2.0, 1e-15));
  // p(x, y + s x) at a point
  auto u = TriPoly::var_y() + TriPoly::var_s() * TriPoly::var_x();
  auto p = th::bp({{0, 3, 1.0}, {2, 0, -1.0}});
  auto q = substitute_y(p, u);
  const cplx x{0.3, 0.1}, y{-0.2, 0.4}, s{0.7, 0};
  CHECK(near(q.eval(x, y, s), p.eval(x, y + s * x), 1e-14));
}

TEST_CASE("berkowitz determinant matches LU") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<cplx>> a(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(n)));
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cplx v{nd(rng), nd(rng)};
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        m(i, j) = v;
      }
    const cplx det = berkowitz_det<cplx>(a, 0.0, 1.0);
    CHECK(near(det, m.determinant(), 1e-10 * (1 + std::abs(det))));
  }
}

TEST_CASE("discriminant examples") {
  auto d1 = discriminant_x(th::bp(th::pure(3, 2)));
  CHECK(d1.valuation() == 4);
  CHECK(near(d1[4], -27.0, 1e-12));
  auto d2 = discriminant_x(th::bp(th::pure(2, 1)));
  CHECK(near(d2[1], 4.0, 1e-12));
  CHECK(near(d2[0], 0.0, 1e-12));
  auto d3 = discriminant_x(th::bp({{0, 2, 1.0}, {0, 0, -1.0}}));
  CHECK(d3.degree() == 0);
  CHECK(near(d3[0], 4.0, 1e-12));
  auto r = resultant_y(th::bp(th::pure(2, 3)), th::bp({{0, 1, 2.0}}));
  CHECK(r.valuation() == 3);
  CHECK(near(r[3], -4.0, 1e-12));  // 4 y1 y2 = -4 x^3
}

TEST_CASE("discriminant equals product of squared root differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 4;
    std::vector<Term> terms{{0, d, 1.0}};
    for (int b = 0; b < d; ++b)
      for (int a = 0; a < 3; ++a) terms.push_back({a, b, {u(rng), u(rng)}});
    auto P = th::bp(terms);
    auto disc = discriminant_x(P);
    const cplx x{u(rng), u(rng)};
    auto roots = poly_roots(P.y_coeffs_at(x));
    cplx prod = 1;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    CHECK(near(disc.eval(x), prod, 1e-8 * (1 + std::abs(prod))));
  }
}
