#pragma once

#include <functional>

namespace rfso::quad {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    long evals = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-9, double abs_tol = 0.0, int max_depth = 28);

// Integral over [lo, inf): doubling segments until two consecutive
// segments are negligible against the accumulated total.
Result integrate_semi_infinite(const std::function<double(double)>& f, double lo,
                               double rel_tol = 1e-8, double abs_tol = 1e-12);

}  // namespace rfso::quad
