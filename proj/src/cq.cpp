#include "subdiff/cq.hpp"

#include <cmath>
#include <stdexcept>

namespace subdiff {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("fractional order must lie in (0, 1]");
    }
}

}  // namespace

CqWeights cq_weights(double alpha, int n_steps, double tau) {
    check_alpha(alpha);
    if (n_steps < 0) throw std::invalid_argument("history length must be nonnegative");
    if (!(tau > 0.0)) throw std::invalid_argument("time step must be positive");

    CqWeights w;
    w.alpha = alpha;
    w.tau = tau;
    w.b.resize(n_steps + 1);
    w.b[0] = 1.0;
    for (int j = 1; j <= n_steps; ++j) {
        w.b[j] = w.b[j - 1] * (j - 1 - alpha) / j;
    }
    return w;
}

std::vector<double> cq_dual_weights(double alpha, int n_steps) {
    check_alpha(alpha);
    if (n_steps < 0) throw std::invalid_argument("history length must be nonnegative");
    std::vector<double> q(n_steps + 1);
    q[0] = 1.0;
    for (int j = 1; j <= n_steps; ++j) {
        q[j] = q[j - 1] * (j - 1 + alpha) / j;
    }
    return q;
}

std::vector<double> partial_sums(std::span<const double> values) {
    std::vector<double> s(values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += values[i];
        s[i] = acc;
    }
    return s;
}

Eigen::VectorXd caputo_apply(const CqWeights& w, std::span<const Eigen::VectorXd> history) {
    if (history.empty()) throw std::invalid_argument("history must be nonempty");
    const int n = static_cast<int>(history.size()) - 1;
    if (n > w.history_length()) {
        throw std::invalid_argument("history exceeds the weight table length");
    }
    const Eigen::Index dim = history[0].size();
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
    for (int j = 1; j <= n; ++j) {  // the j = 0 term vanishes identically
        if (history[j].size() != dim) {
            throw std::invalid_argument("history vectors must share one dimension");
        }
        const double bw = w.b[n - j];
        if (bw != 0.0) acc += bw * (history[j] - history[0]);
    }
    return std::pow(w.tau, -w.alpha) * acc;
}

double caputo_apply(const CqWeights& w, std::span<const double> history) {
    if (history.empty()) throw std::invalid_argument("history must be nonempty");
    const int n = static_cast<int>(history.size()) - 1;
    if (n > w.history_length()) {
        throw std::invalid_argument("history exceeds the weight table length");
    }
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
        acc += w.b[n - j] * (history[j] - history[0]);
    }
    return std::pow(w.tau, -w.alpha) * acc;
}

std::vector<double> scalar_fode_solve(double alpha, double lambda, double u0,
                                      double final_time, int n_steps) {
    check_alpha(alpha);
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (n_steps < 1) throw std::invalid_argument("need at least one time step");
    if (!(final_time > 0.0)) throw std::invalid_argument("final time must be positive");

    const double tau = final_time / n_steps;
    const CqWeights w = cq_weights(alpha, n_steps, tau);
    const double c = std::pow(tau, -alpha);

    std::vector<double> u(n_steps + 1);
    u[0] = u0;
    for (int n = 1; n <= n_steps; ++n) {
        double hist = 0.0;
        for (int j = 1; j < n; ++j) {
            hist += w.b[n - j] * (u[j] - u0);
        }
        // (c b_0 + lambda) u^n = c (b_0 u^0 - hist); implicit term solved exactly.
        u[n] = c * (w.b[0] * u0 - hist) / (c * w.b[0] + lambda);
    }
    return u;
}

}  // namespace subdiff
