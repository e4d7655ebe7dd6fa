#include "kstab/quadrature.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace kstab {

const std::vector<std::pair<double, double>>& gauss_legendre_nodes(int order) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<double, double>> nw(static_cast<std::size_t>(order));
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[static_cast<std::size_t>(i)] = {-x, w};
        nw[static_cast<std::size_t>(order - 1 - i)] = {x, w};
    }
    auto [pos, inserted] = cache.emplace(order, std::move(nw));
    (void)inserted;
    return pos->second;
}

namespace {

double gl_panel(const std::function<double(double)>& f, double a, double b,
                const std::vector<std::pair<double, double>>& nw) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (const auto& [x, w] : nw) s += w * f(mid + half * x);
    return s * half;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    std::vector<double> splits, double rel_tol, int max_panels) {
    QuadratureResult out;
    if (!(a < b)) return out;
    const auto& nw = gauss_legendre_nodes(32);

    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

    struct Panel {
        double lo, hi, coarse;
    };
    std::vector<Panel> stack;
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        if (splits[i] < a || splits[i + 1] > b) continue;
        const double coarse = gl_panel(f, splits[i], splits[i + 1], nw);
        stack.push_back({splits[i], splits[i + 1], coarse});
        rough += coarse;
    }

    double sum = 0.0;
    double err = 0.0;
    int used = static_cast<int>(stack.size());
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.lo + p.hi);
        const double left = gl_panel(f, p.lo, mid, nw);
        const double right = gl_panel(f, mid, p.hi, nw);
        const double refined = left + right;
        const double delta = std::abs(refined - p.coarse);
        const double scale = 1.0 + std::abs(rough);
        if (delta <= rel_tol * scale * std::max(1e-30, (p.hi - p.lo) / (b - a)) ||
            (p.hi - p.lo) < 1e-14 * (b - a)) {
            sum += refined;
            err += delta;
            continue;
        }
        used += 2;
        if (used > max_panels) {
            double best = sum + refined;
            for (const auto& q : stack) best += q.coarse;
            throw ConvergenceError("adaptive quadrature: panel budget exhausted", best);
        }
        stack.push_back({p.lo, mid, left});
        stack.push_back({mid, p.hi, right});
    }
    out.value = sum;
    out.error_estimate = err;
    out.panels = used;
    return out;
}

}  // namespace kstab
