#include "germdeform/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "germdeform/error.hpp"

namespace germdeform {

namespace {

// p(z) and p'(z) for monic ascending coefficients.
std::pair<cplx, cplx> horner2(std::span<const cplx> a, cplx z) {
  cplx p{}, dp{};
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  return {p, dp};
}

}  // namespace

std::vector<cplx> poly_roots(std::span<const cplx> ascending, std::span<const cplx> warm) {
  std::size_t top = ascending.size();
  while (top > 0 && ascending[top - 1] == cplx{}) --top;
  if (top <= 1) return {};
  std::size_t low = 0;
  while (ascending[low] == cplx{}) ++low;

  std::vector<cplx> roots(low, cplx{});
  const std::size_t n = top - 1 - low;
  if (n == 0) return roots;

  std::vector<cplx> a(ascending.begin() + static_cast<std::ptrdiff_t>(low),
                      ascending.begin() + static_cast<std::ptrdiff_t>(top));
  const cplx lead = a.back();
  for (auto& c : a) c /= lead;

  std::vector<cplx> z(n);
  bool seeded = false;
  if (warm.size() == n + low) {
    std::size_t j = 0;
    for (const auto& w : warm) {
      if (w != cplx{} && j < n) z[j++] = w;
    }
    seeded = (j == n);
  }
  if (!seeded) {
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / static_cast<double>(n - k)));
    }
    if (radius == 0.0) radius = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      z[j] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.4);
    }
  }

  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [p, dp] = horner2(a, z[i]);
      if (p == cplx{}) continue;
      cplx sum{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const cplx ratio = p / dp;
      cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = 1e-3 * (1.0 + std::abs(z[i]));
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  for (auto& zi : z) {
    for (int k = 0; k < 3; ++k) {
      const auto [p, dp] = horner2(a, zi);
      if (p == cplx{} || dp == cplx{}) break;
      const cplx cand = zi - p / dp;
      if (std::abs(horner2(a, cand).first) < std::abs(p)) {
        zi = cand;
      } else {
        break;
      }
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

double min_separation(std::span<const cplx> pts) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, std::abs(pts[i] - pts[j]));
  }
  return m;
}

std::vector<cplx> match_roots(std::span<const cplx> prev, std::vector<cplx> next) {
  if (prev.size() != next.size()) return next;
  std::vector<cplx> out(prev.size());
  std::vector<bool> used(next.size(), false);
  for (std::size_t i = 0; i < prev.size(); ++i) {
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (used[j]) continue;
      const double dd = std::abs(next[j] - prev[i]);
      if (dd < dist) {
        dist = dd;
        best = j;
      }
    }
    used[best] = true;
    out[i] = next[best];
  }
  return out;
}

std::vector<cplx> circle_nodes(double rho, int nodes) {
  std::vector<cplx> x(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) x[static_cast<std::size_t>(k)] = std::polar(rho, 2.0 * std::numbers::pi * k / nodes);
  return x;
}

SheetSamples roots_on_circle(const YCoeffFn& coeffs, double rho, int nodes, double sep_tol) {
  if (!is_power_of_two(nodes)) throw Error(ErrorCode::InvalidInput, "node count must be a power of two");
  SheetSamples out;
  out.radius = rho;
  out.nodes = nodes;
  out.x = circle_nodes(rho, nodes);
  out.sheets.resize(static_cast<std::size_t>(nodes));
  std::vector<cplx> prev;
  for (int k = 0; k < nodes; ++k) {
    const auto c = coeffs(out.x[static_cast<std::size_t>(k)]);
    auto r = poly_roots(c, prev);
    if (min_separation(r) < sep_tol) {
      throw Error(ErrorCode::ContourTooClose, "fiber roots collide on the contour");
    }
    r = match_roots(prev, std::move(r));
    out.sheets[static_cast<std::size_t>(k)] = r;
    prev = std::move(r);
  }
  return out;
}

cplx contour_residue(std::span<const cplx> values, double rho) {
  const int m = static_cast<int>(values.size());
  if (m == 0) return {};
  cplx sum{};
  for (int k = 0; k < m; ++k) sum += values[static_cast<std::size_t>(k)] * std::polar(rho, 2.0 * std::numbers::pi * k / m);
  return sum / static_cast<double>(m);
}

TruncSeries cauchy_taylor(std::span<const cplx> values, double rho, int order) {
  const int m = static_cast<int>(values.size());
  if (order < 1 || 2 * order > m) throw Error(ErrorCode::InvalidInput, "need 1 <= order <= nodes / 2");
  std::vector<cplx> c(static_cast<std::size_t>(order), cplx{});
  for (int j = 0; j < order; ++j) {
    cplx sum{};
    for (int k = 0; k < m; ++k) {
      sum += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) * k / m);
    }
    c[static_cast<std::size_t>(j)] = sum / (static_cast<double>(m) * std::pow(rho, j));
  }
  if (order >= 2) {
    double biggest = 0.0;
    for (int j = 0; j < order; ++j) biggest = std::max(biggest, std::abs(c[static_cast<std::size_t>(j)]) * std::pow(rho, j));
    const double tail = std::abs(c.back()) * std::pow(rho, order - 1);
    if (tail > 0.1 * biggest && tail > 1e-13) {
      throw Error(ErrorCode::AliasingDetected, "Taylor tail not resolved by the contour samples");
    }
  }
  return TruncSeries::from_coeffs(0, std::move(c));
}

std::vector<std::vector<cplx>> numeric_weierstrass_prepare(const PEval& p, double rho_y, int d,
                                                           std::span<const cplx> x_nodes, int y_nodes) {
  if (d < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  const auto ys = circle_nodes(rho_y, y_nodes);
  std::vector<std::vector<cplx>> out;
  out.reserve(x_nodes.size());
  for (const cplx x : x_nodes) {
    std::vector<cplx> psum(static_cast<std::size_t>(d + 1), cplx{});
    for (const cplx y : ys) {
      const auto [val, dval] = p(x, y);
      if (std::abs(val) < 1e-300) throw Error(ErrorCode::ContourTooClose, "root on the y contour");
      // (1 / 2 pi i) contour integral of y^n P_y / P dy = mean of y^(n+1) P_y / P
      cplx w = dval / val * y;
      for (int n = 0; n <= d; ++n) {
        psum[static_cast<std::size_t>(n)] += w;
        w *= y;
      }
    }
    for (auto& v : psum) v /= static_cast<double>(y_nodes);
    if (std::abs(psum[0] - static_cast<double>(d)) > 0.25) {
      throw Error(ErrorCode::RootCountMismatch, "winding number differs from the degree");
    }
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<cplx> e(static_cast<std::size_t>(d + 1), cplx{});
    e[0] = 1.0;
    for (int k = 1; k <= d; ++k) {
      cplx acc{};
      for (int i = 1; i <= k; ++i) {
        const double sign = (i % 2 == 1) ? 1.0 : -1.0;
        acc += sign * e[static_cast<std::size_t>(k - i)] * psum[static_cast<std::size_t>(i)];
      }
      e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    std::vector<cplx> coeffs(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {
      coeffs[static_cast<std::size_t>(d - k)] = ((k % 2 == 0) ? 1.0 : -1.0) * e[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

std::vector<cplx> poly_from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{1.0};
  for (const cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx{});
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace germdeform
