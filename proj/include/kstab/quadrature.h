#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace kstab {

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg, double best)
        : std::runtime_error(msg), best_estimate(best) {}
    double best_estimate;
};

// Nodes and weights on [-1, 1], computed by Newton iteration on the Legendre
// recurrence; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre_nodes(int order);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive Gauss-Legendre: order-32 rule per panel, initial panels cut at the
// supplied split points, then bisection until the per-panel refinement error
// clears rel_tol * (1 + |integral|). Throws ConvergenceError (carrying the
// best estimate) when the panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    std::vector<double> splits, double rel_tol,
                                    int max_panels = 1 << 16);

}  // namespace kstab
