#include "eit2des/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include "eit2des/errors.hpp"
#include "eit2des/units.hpp"

namespace eit2des {

namespace {

struct UnionFind {
  std::vector<std::int64_t> parent;

  explicit UnionFind(std::size_t n) : parent(n, -1) {}

  bool active(std::size_t x) const { return parent[x] >= 0; }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent[root] != static_cast<std::int64_t>(root)) {
      root = static_cast<std::size_t>(parent[root]);
    }
    while (parent[x] != static_cast<std::int64_t>(root)) {
      const auto next = static_cast<std::size_t>(parent[x]);
      parent[x] = static_cast<std::int64_t>(root);
      x = next;
    }
    return root;
  }
};

struct Birth {
  std::size_t node;
  double prominence;  // absolute units
};

// Persistence sweep over the superlevel sets of `v` on an n3 x n1 grid with
// 8-connectivity. Each returned birth is the highest node of a blob; its
// prominence is the drop to the saddle where the blob merges into a higher
// one. The global maximum survives with prominence = full range.
std::vector<Birth> superlevel_births(const std::vector<double>& v, std::size_t n3,
                                     std::size_t n1) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });

  UnionFind uf(v.size());
  std::vector<std::size_t> birth_of(v.size(), 0);  // root -> birth node
  std::vector<Birth> births;

  for (const std::size_t node : order) {
    const std::size_t i = node / n1;
    const std::size_t j = node % n1;
    std::size_t roots[8];
    int nroots = 0;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        const auto ii = static_cast<std::int64_t>(i) + di;
        const auto jj = static_cast<std::int64_t>(j) + dj;
        if (ii < 0 || jj < 0 || ii >= static_cast<std::int64_t>(n3) ||
            jj >= static_cast<std::int64_t>(n1)) {
          continue;
        }
        const auto neighbor = static_cast<std::size_t>(ii) * n1 + static_cast<std::size_t>(jj);
        if (!uf.active(neighbor)) continue;
        const std::size_t root = uf.find(neighbor);
        bool seen = false;
        for (int k = 0; k < nroots; ++k) seen = seen || roots[k] == root;
        if (!seen) roots[nroots++] = root;
      }
    }
    uf.parent[node] = static_cast<std::int64_t>(node);
    if (nroots == 0) {
      birth_of[node] = node;  // new blob, candidate extremum
      continue;
    }
    // Merge everything into the blob with the highest birth; lower blobs die
    // here, at saddle level v[node].
    std::size_t main_root = roots[0];
    for (int k = 1; k < nroots; ++k) {
      const std::size_t r = roots[k];
      const bool higher = v[birth_of[r]] > v[birth_of[main_root]] ||
                          (v[birth_of[r]] == v[birth_of[main_root]] &&
                           birth_of[r] < birth_of[main_root]);
      if (higher) main_root = r;
    }
    for (int k = 0; k < nroots; ++k) {
      const std::size_t r = roots[k];
      if (r == main_root) continue;
      births.push_back(Birth{birth_of[r], v[birth_of[r]] - v[node]});
      uf.parent[r] = static_cast<std::int64_t>(main_root);
    }
    uf.parent[node] = static_cast<std::int64_t>(main_root);
  }

  // Survivors (one per connected component; a single one on our grids).
  const double global_min = *std::min_element(v.begin(), v.end());
  std::vector<bool> is_root(v.size(), false);
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (uf.find(x) == x) is_root[x] = true;
  }
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (is_root[x]) births.push_back(Birth{birth_of[x], v[birth_of[x]] - global_min});
  }
  return births;
}

// Least-squares quadratic over the 3x3 neighborhood (orthogonal-polynomial
// coefficients), then the stationary point of the fitted surface. A separable
// per-axis parabola misplaces peaks that sit on diagonal ridges; the cross
// term fixes that. Offsets are clamped to one step.
struct RefinedOffset {
  double dx, dy;
};

RefinedOffset quadratic_offset(const double f[3][3]) {
  double sum = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (int iy = -1; iy <= 1; ++iy) {
    for (int ix = -1; ix <= 1; ++ix) {
      const double v = f[iy + 1][ix + 1];
      sum += v;
      sx += ix * v;
      sy += iy * v;
      sxx += ix * ix * v;
      syy += iy * iy * v;
      sxy += ix * iy * v;
    }
  }
  const double b = sx / 6.0;
  const double c = sy / 6.0;
  const double d = 0.5 * (sxx - 2.0 * sum / 3.0);   // coefficient of x^2
  const double e = sxy / 4.0;                        // coefficient of xy
  const double g = 0.5 * (syy - 2.0 * sum / 3.0);   // coefficient of y^2
  // stationary point of a + b x + c y + d x^2 + e x y + g y^2
  const double det = 4.0 * d * g - e * e;
  if (det == 0.0) return {0.0, 0.0};
  const double dx = (-2.0 * g * b + e * c) / det;
  const double dy = (-2.0 * d * c + e * b) / det;
  return {std::clamp(dx, -1.0, 1.0), std::clamp(dy, -1.0, 1.0)};
}

}  // namespace

std::vector<ExtremumReport> find_extrema(const Spectrum2D& spectrum,
                                         double min_prominence) {
  if (!(min_prominence > 0.0) || !(min_prominence < 1.0)) {
    throw ConfigError("min_prominence must lie in (0, 1)");
  }
  const std::size_t n1 = spectrum.grid.n1();
  const std::size_t n3 = spectrum.grid.n3();
  const auto [mn_it, mx_it] =
      std::minmax_element(spectrum.values.begin(), spectrum.values.end());
  const double range = *mx_it - *mn_it;
  std::vector<ExtremumReport> out;
  if (range <= 0.0) return out;  // flat spectrum

  auto collect = [&](const std::vector<double>& v, ExtremumKind kind, double sign) {
    for (const Birth& b : superlevel_births(v, n3, n1)) {
      if (b.prominence / range <= min_prominence) continue;
      const std::size_t i3 = b.node / n1;
      const std::size_t i1 = b.node % n1;
      if (i3 == 0 || i1 == 0 || i3 + 1 == n3 || i1 + 1 == n1) continue;  // boundary
      double patch[3][3];
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          patch[dy + 1][dx + 1] = v[(i3 + dy) * n1 + (i1 + dx)];
        }
      }
      const RefinedOffset offset = quadratic_offset(patch);
      out.push_back(ExtremumReport{
          spectrum.grid.omega1(i1) + offset.dx * spectrum.grid.omega1_step,
          spectrum.grid.omega3(i3) + offset.dy * spectrum.grid.omega3_step,
          sign * v[b.node], kind, true, b.prominence / range});
    }
  };

  collect(spectrum.values, ExtremumKind::maximum, +1.0);
  std::vector<double> negated(spectrum.values.size());
  for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = -spectrum.values[i];
  collect(negated, ExtremumKind::minimum, -1.0);

  std::stable_sort(out.begin(), out.end(), [](const ExtremumReport& a,
                                              const ExtremumReport& b) {
    if (a.kind != b.kind) return a.kind == ExtremumKind::maximum;
    return a.prominence > b.prominence;
  });
  return out;
}

namespace {

// Given omega and kappa (rad/ps), solve the linear subproblem for
// (offset, B, C) in offset + e^{-kappa t}(B cos(omega t) + C sin(omega t))
// and return the SSE. Normal equations of a 3-parameter linear LS.
struct LinearSolution {
  double offset, b, c, sse;
};

LinearSolution solve_linear(std::span<const std::pair<double, double>> trace,
                            double omega, double kappa) {
  double m[3][3] = {};
  double rhs[3] = {};
  for (const auto& [t, y] : trace) {
    const double e = std::exp(-kappa * t);
    const double basis[3] = {1.0, e * std::cos(omega * t), e * std::sin(omega * t)};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
      rhs[r] += basis[r] * y;
    }
  }
  // 3x3 Gaussian elimination with partial pivoting.
  int idx[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::fabs(m[idx[r]][col]) > std::fabs(m[idx[piv]][col])) piv = r;
    }
    std::swap(idx[col], idx[piv]);
    const double diag = m[idx[col]][col];
    if (diag == 0.0) return {0.0, 0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[idx[r]][col] / diag;
      for (int c = col; c < 3; ++c) m[idx[r]][c] -= f * m[idx[col]][c];
      rhs[idx[r]] -= f * rhs[idx[col]];
    }
  }
  double x[3];
  for (int col = 2; col >= 0; --col) {
    double acc = rhs[idx[col]];
    for (int c = col + 1; c < 3; ++c) acc -= m[idx[col]][c] * x[c];
    x[col] = acc / m[idx[col]][col];
  }
  double sse = 0.0;
  for (const auto& [t, y] : trace) {
    const double e = std::exp(-kappa * t);
    const double fit = x[0] + e * (x[1] * std::cos(omega * t) + x[2] * std::sin(omega * t));
    sse += (y - fit) * (y - fit);
  }
  return {x[0], x[1], x[2], sse};
}

}  // namespace

OscillationFit fit_damped_oscillation(std::span<const std::pair<double, double>> trace) {
  if (trace.size() < 20) {
    throw ConfigError("damped-oscillation fit needs at least 20 samples");
  }
  const double t0 = trace.front().first;
  const double t_span = trace.back().first - t0;
  if (!(t_span > 0.0)) throw ConfigError("trace must span a positive time interval");

  double mean = 0.0, lo = trace.front().second, hi = lo;
  for (const auto& [t, y] : trace) {
    mean += y;
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  mean /= static_cast<double>(trace.size());
  const double range = hi - lo;
  if (range == 0.0) {
    return OscillationFit{0.0, 0.0, mean, 0.0, 0.0, 0.0, false};
  }

  // Periodogram seed: centered trace against an oversampled frequency comb.
  const double omega_max =
      std::numbers::pi * static_cast<double>(trace.size() - 1) / t_span;
  const double omega_res = 2.0 * std::numbers::pi / t_span;
  double best_omega = omega_res, best_power = -1.0;
  for (double w = omega_res * 0.25; w <= omega_max; w += omega_res * 0.25) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [t, y] : trace) {
      acc += (y - mean) * std::polar(1.0, -w * (t - t0));
    }
    const double power = std::norm(acc);
    if (power > best_power) {
      best_power = power;
      best_omega = w;
    }
  }

  // Decay seed: coarse geometric grid, linear subproblem solved exactly.
  double best_kappa = 0.0;
  LinearSolution best = solve_linear(trace, best_omega, 0.0);
  for (double kappa = 0.05 / t_span; kappa <= 30.0 / t_span; kappa *= 1.8) {
    const LinearSolution s = solve_linear(trace, best_omega, kappa);
    if (s.sse < best.sse) {
      best = s;
      best_kappa = kappa;
    }
  }

  // Full 5-parameter Levenberg-Marquardt with analytic Jacobian,
  // p = (offset, B, C, omega, kappa).
  double p[5] = {best.offset, best.b, best.c, best_omega, best_kappa};
  const auto model_sse = [&](const double q[5]) {
    double acc = 0.0;
    for (const auto& [t, y] : trace) {
      const double e = std::exp(-q[4] * t);
      const double f =
          q[0] + e * (q[1] * std::cos(q[3] * t) + q[2] * std::sin(q[3] * t));
      acc += (y - f) * (y - f);
    }
    return acc;
  };
  double sse = model_sse(p);
  if (!std::isfinite(sse)) {
    throw FitError("damped-oscillation fit seeded on non-finite data", {});
  }
  std::vector<double> history{std::sqrt(sse / static_cast<double>(trace.size()))};
  double lambda = 1e-3;
  bool converged = false;
  for (int iter = 0; iter < 200 && !converged; ++iter) {
    double jtj[5][5] = {};
    double jtr[5] = {};
    for (const auto& [t, y] : trace) {
      const double e = std::exp(-p[4] * t);
      const double cw = std::cos(p[3] * t);
      const double sw = std::sin(p[3] * t);
      const double f = p[0] + e * (p[1] * cw + p[2] * sw);
      const double r = y - f;
      const double jac[5] = {1.0, e * cw, e * sw, e * t * (-p[1] * sw + p[2] * cw),
                             -t * e * (p[1] * cw + p[2] * sw)};
      for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) jtj[a][b] += jac[a] * jac[b];
        jtr[a] += jac[a] * r;
      }
    }
    bool improved = false;
    for (int tries = 0; tries < 40; ++tries) {
      double m[5][5];
      double rhs[5];
      for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) m[a][b] = jtj[a][b];
        m[a][a] += lambda * std::max(jtj[a][a], 1e-300);
        rhs[a] = jtr[a];
      }
      // Gaussian elimination with partial pivoting.
      int idx[5] = {0, 1, 2, 3, 4};
      bool singular = false;
      for (int col = 0; col < 5 && !singular; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r) {
          if (std::fabs(m[idx[r]][col]) > std::fabs(m[idx[piv]][col])) piv = r;
        }
        std::swap(idx[col], idx[piv]);
        if (m[idx[col]][col] == 0.0) {
          singular = true;
          break;
        }
        for (int r = col + 1; r < 5; ++r) {
          const double f = m[idx[r]][col] / m[idx[col]][col];
          for (int c = col; c < 5; ++c) m[idx[r]][c] -= f * m[idx[col]][c];
          rhs[idx[r]] -= f * rhs[idx[col]];
        }
      }
      if (singular) {
        lambda *= 10.0;
        continue;
      }
      double delta[5];
      for (int col = 4; col >= 0; --col) {
        double acc = rhs[idx[col]];
        for (int c = col + 1; c < 5; ++c) acc -= m[idx[col]][c] * delta[c];
        delta[col] = acc / m[idx[col]][col];
      }
      double q[5];
      for (int a = 0; a < 5; ++a) q[a] = p[a] + delta[a];
      q[4] = std::max(q[4], 0.0);
      q[3] = std::fabs(q[3]);
      const double trial = model_sse(q);
      if (trial < sse) {
        for (int a = 0; a < 5; ++a) p[a] = q[a];
        const double prev = sse;
        sse = trial;
        lambda = std::max(lambda * 0.3, 1e-14);
        improved = true;
        history.push_back(std::sqrt(sse / static_cast<double>(trace.size())));
        if (prev - sse <= 1e-14 * std::max(prev, 1e-300)) converged = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) converged = true;  // stationary to machine precision
  }
  if (!converged) {
    throw FitError("damped-oscillation fit did not converge", history);
  }

  const double amplitude = std::hypot(p[1], p[2]);
  const double rms = std::sqrt(sse / static_cast<double>(trace.size()));
  const bool oscillatory = amplitude > std::max(10.0 * rms, 1e-12 * range);
  return OscillationFit{from_angular_rate(p[3]), from_angular_rate(p[4]), p[0],
                        amplitude, std::atan2(-p[2], p[1]), rms, oscillatory};
}

SteadyStatePopulations steady_state_populations(const SystemParams& params) {
  const double sum = params.Gamma1 + params.Gamma2;
  if (sum <= 0.0) {
    throw NumericalError("steady state undefined: Gamma1 + Gamma2 = 0");
  }
  // Control-on limits for a start in |a>; control-independent for |b>.
  const double start_a_scale = (params.Omega > 0.0) ? 0.5 : 1.0;
  return SteadyStatePopulations{start_a_scale * params.Gamma2 / sum,
                                start_a_scale * params.Gamma1 / sum,
                                params.Gamma2 / sum, params.Gamma1 / sum};
}

}  // namespace eit2des
