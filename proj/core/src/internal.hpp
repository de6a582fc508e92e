#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace vblind::detail {

// Golden-section search for the maximum of g on [lo, hi].
inline double golden_max(const std::function<double(double)>& g, double lo, double hi,
                         double* argmax = nullptr) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        }
    }
    double best_x = x1;
    double best = g1;
    for (double x : {x2, lo, hi}) {
        const double v = g(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    if (argmax) {
        *argmax = best_x;
    }
    return best;
}

// Global maximum of g on [lo, hi]: a 257-point seed grid, then golden-section
// refinement around every local peak of the grid.
inline double seeded_max(const std::function<double(double)>& g, double lo, double hi,
                         double* argmax = nullptr) {
    constexpr int n = 257;
    if (hi <= lo) {
        if (argmax) {
            *argmax = lo;
        }
        return g(lo);
    }
    std::vector<double> xs(n);
    std::vector<double> vs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
        vs[i] = g(xs[i]);
    }
    const auto top = std::max_element(vs.begin(), vs.end());
    double best = *top;
    double best_x = xs[static_cast<std::size_t>(top - vs.begin())];
    for (int i = 0; i < n; ++i) {
        const bool left_ok = i == 0 || vs[i] >= vs[i - 1];
        const bool right_ok = i == n - 1 || vs[i] >= vs[i + 1];
        if (left_ok && right_ok) {
            double x = 0.0;
            const double v =
                golden_max(g, xs[std::max(i - 1, 0)], xs[std::min(i + 1, n - 1)], &x);
            if (v > best) {
                best = v;
                best_x = x;
            }
        }
    }
    if (argmax) {
        *argmax = best_x;
    }
    return best;
}

// Runs body(i) for i in [0, n) on a few threads. Results go to fixed slots so
// the outcome does not depend on scheduling; the lowest-index exception wins.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min<std::size_t>(n, std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::exception_ptr> errors(n);
    const auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace vblind::detail
