#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

namespace subdiff {

/// Backward Euler convolution-quadrature weights of the fractional derivative:
/// the coefficients b_0..b_N of (1-xi)^alpha, so that
///   d_tau^alpha v(t_n) ~= tau^{-alpha} * sum_{j=0..n} b_{n-j} v(t_j).
struct CqWeights {
    double alpha = 0.0;
    double tau = 0.0;
    std::vector<double> b;
    int history_length() const { return static_cast<int>(b.size()) - 1; }
};

/// Weights by the stable multiplicative recurrence b_0 = 1,
/// b_j = b_{j-1} * (j-1-alpha)/j. Requires alpha in (0,1], n_steps >= 0, tau > 0.
CqWeights cq_weights(double alpha, int n_steps, double tau);

/// Coefficients q_0..q_N of (1-xi)^{-alpha}, the discrete fractional integral.
/// Convolving them with cq_weights(...).b gives the identity sequence.
std::vector<double> cq_dual_weights(double alpha, int n_steps);

std::vector<double> partial_sums(std::span<const double> values);

/// Discrete Caputo derivative at the last history entry:
/// tau^{-alpha} * sum_{j=0..n} b_{n-j} (v^j - v^0), with n = history.size()-1.
Eigen::VectorXd caputo_apply(const CqWeights& w, std::span<const Eigen::VectorXd> history);
double caputo_apply(const CqWeights& w, std::span<const double> history);

/// Backward Euler CQ solution of the scalar problem
/// d_t^alpha u + lambda u = 0, u(0) = u0, on [0, final_time] with n_steps steps.
/// Returns u^0..u^N; the exact solution is E_alpha(-lambda t^alpha) u0.
std::vector<double> scalar_fode_solve(double alpha, double lambda, double u0,
                                      double final_time, int n_steps);

}  // namespace subdiff
