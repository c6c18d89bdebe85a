#include "dissrho/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dissrho {

namespace {

constexpr int kCheckPeriod = 8;
constexpr int kStallChecks = 64;

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j : g.neighbors(i)) s += x[j];
    out[i] = s;
  }
}

double norm2(const std::vector<double>& x) { return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)); }

// Solves (A - shift I) z = rhs by Gaussian elimination with partial pivoting.
// Returns false if the matrix is numerically singular.
bool shifted_solve(const Graph& g, double shift, const std::vector<double>& rhs, std::vector<double>& z) {
  const int n = g.order();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors(i)) at(i, j) = 1.0;
    at(i, i) = -shift;
  }
  z = rhs;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i) {
      if (std::abs(at(i, col)) > std::abs(at(piv, col))) piv = i;
    }
    if (std::abs(at(piv, col)) < 1e-300) return false;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      std::swap(z[piv], z[col]);
    }
    for (int i = col + 1; i < n; ++i) {
      const double f = at(i, col) / at(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) at(i, j) -= f * at(col, j);
      z[i] -= f * z[col];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = z[i];
    for (int j = i + 1; j < n; ++j) s -= at(i, j) * z[j];
    z[i] = s / at(i, i);
  }
  return std::all_of(z.begin(), z.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, long max_iterations) {
  if (!(tol > 0.0)) throw PreconditionError("spectral_radius: tolerance must be positive");
  if (!is_connected(g)) throw PreconditionError("spectral_radius: graph is not connected");
  const int n = g.order();
  if (n == 1) return SpectralResult{0.0, {1.0}, 0, 0.0};

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n), ax(n), z(n);
  long iterations = 0;
  double best_residual = std::numeric_limits<double>::infinity();
  int stalled = 0;

  while (true) {
    for (int k = 0; k < kCheckPeriod; ++k) {
      multiply(g, x, y);
      for (int i = 0; i < n; ++i) y[i] += x[i];
      const double len = norm2(y);
      for (int i = 0; i < n; ++i) x[i] = y[i] / len;
      ++iterations;
    }

    multiply(g, x, ax);
    double rq = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double residual = 0.0;
    for (int i = 0; i < n; ++i) residual += (ax[i] - rq * x[i]) * (ax[i] - rq * x[i]);
    residual = std::sqrt(residual);

    if (residual > tol && residual < 1e-2 * (1.0 + rq) && shifted_solve(g, rq, x, z)) {
      const double len = norm2(z);
      const double sign = std::accumulate(z.begin(), z.end(), 0.0) < 0 ? -1.0 : 1.0;
      for (double& v : z) v *= sign / len;
      if (*std::min_element(z.begin(), z.end()) > 0.0) {
        multiply(g, z, y);
        const double rq_z = std::inner_product(z.begin(), z.end(), y.begin(), 0.0);
        if (rq_z >= rq - 1e-15 * (1.0 + rq)) {
          x = z;
          ax = y;
          rq = rq_z;
          residual = 0.0;
          for (int i = 0; i < n; ++i) residual += (ax[i] - rq * x[i]) * (ax[i] - rq * x[i]);
          residual = std::sqrt(residual);
        }
      }
      ++iterations;
    }

    if (residual <= tol) {
      double inf = 0.0;
      for (int i = 0; i < n; ++i) inf = std::max(inf, std::abs(ax[i] - rq * x[i]));
      return SpectralResult{rq, std::move(x), iterations, inf};
    }
    if (residual < best_residual * 0.999) {
      best_residual = residual;
      stalled = 0;
    } else if (residual < 1e-6 && ++stalled > kStallChecks) {
      throw ConvergenceError("spectral_radius: residual stalled at " + std::to_string(residual) +
                             " above tolerance");
    }
    if (iterations >= max_iterations) {
      throw ConvergenceError("spectral_radius: no convergence within " + std::to_string(max_iterations) +
                             " iterations");
    }
  }
}

double perron_component(const SpectralResult& res, int v) {
  if (v < 0 || v >= static_cast<int>(res.perron.size())) {
    throw PreconditionError("perron_component: vertex " + std::to_string(v) + " out of range");
  }
  return res.perron[v];
}

double charpoly_rho1(double rho, int r) {
  const double x2 = rho * rho;
  return x2 * x2 * x2 - (2.0 * r + 7.0) * x2 * x2 + (r + 3.0) * (r + 4.0) * x2 - 1.0;
}

double charpoly_rho2(double rho, int r) {
  const double x2 = rho * rho;
  return x2 * x2 - (r + 4.0) * x2 - rho + 1.0;
}

double solve_charpoly(CharpolyBranch which, int r) {
  if (r < 0) throw PreconditionError("solve_charpoly: r must be nonnegative");
  auto f = [&](double x) { return which == CharpolyBranch::kRho1 ? charpoly_rho1(x, r) : charpoly_rho2(x, r); };
  double lo = std::sqrt(r + 4.0);
  double hi = lo + 1.0;
  while (f(hi) <= 0.0) hi = 2.0 * hi;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<long long> characteristic_polynomial(const Graph& g) {
  // Faddeev-LeVerrier over the integers; every division by k is exact.
  const int n = g.order();
  if (n > kCharPolyMaxOrder) throw PreconditionError("characteristic_polynomial: order too large");
  using Int = __int128;
  std::vector<Int> m(static_cast<std::size_t>(n) * n, 0), am(m.size());
  std::vector<Int> c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    // m <- A * m_prev + c[n-k+1] I   (m_prev = 0 for k = 1)
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int t : g.neighbors(i)) s += m[static_cast<std::size_t>(t) * n + j];
        am[static_cast<std::size_t>(i) * n + j] = s;
      }
    }
    for (int i = 0; i < n; ++i) am[static_cast<std::size_t>(i) * n + i] += c[n - k + 1];
    m.swap(am);
    Int trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int t : g.neighbors(i)) trace += m[static_cast<std::size_t>(t) * n + i];
    }
    c[n - k] = -trace / k;
  }
  std::vector<long long> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (c[i] > std::numeric_limits<long long>::max() || c[i] < std::numeric_limits<long long>::min()) {
      throw Error("characteristic_polynomial: coefficient overflow");
    }
    out[i] = static_cast<long long>(c[i]);
  }
  return out;
}

}  // namespace dissrho
