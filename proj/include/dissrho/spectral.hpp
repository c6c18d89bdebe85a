#pragma once

#include <vector>

#include "dissrho/graph.hpp"

namespace dissrho {

inline constexpr double kDefaultTol = 1e-10;
/// Tolerance for comparisons against spectral radius 2 (Smith graphs).
inline constexpr double kSmithTol = 1e-12;
inline constexpr long kMaxIterations = 1'000'000;
/// Two spectral radii closer than this are treated as a tie.
inline constexpr double kTieGap = 1e-8;

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;  ///< positive, unit 2-norm
  long iterations = 0;
  double residual = 0.0;  ///< max_i |(A x - rho x)_i|
};

/// Spectral radius and Perron vector of a connected graph.
///
/// Power iteration on A + I from the all-ones vector (the shift keeps bipartite graphs from
/// oscillating), with a Rayleigh-quotient inverse-iteration step attempted at every residual
/// check once the residual is small. A step is accepted only if it keeps the iterate strictly
/// positive and does not lower the Rayleigh quotient, so the iteration stays on the Perron pair.
/// Stops when ||A x - rho x||_2 <= tol, which bounds |rho - rho(G)| by tol.
///
/// Throws PreconditionError for disconnected input or tol <= 0, ConvergenceError when the
/// residual cannot be brought under tol within max_iterations.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol, long max_iterations = kMaxIterations);

double perron_component(const SpectralResult& res, int v);

/// rho^6 - (2r+7) rho^4 + (r+3)(r+4) rho^2 - 1, satisfied by rho(G3(0, r+1, 0, r+2)).
double charpoly_rho1(double rho, int r);
/// rho^4 - (r+4) rho^2 - rho + 1, satisfied by rho(G3(1, r+1, 1, r+1)).
double charpoly_rho2(double rho, int r);

enum class CharpolyBranch { kRho1, kRho2 };

/// The unique root above sqrt(r+4), by bisection to 1e-12.
double solve_charpoly(CharpolyBranch which, int r);

inline constexpr int kCharPolyMaxOrder = 24;

/// Integer coefficients of det(xI - A): element i multiplies x^i. Order at most kCharPolyMaxOrder.
std::vector<long long> characteristic_polynomial(const Graph& g);

}  // namespace dissrho
