#pragma once

#include <complex>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso::specfun {

// log Gamma(x) for x > 0, relative error <= 1e-13.
double ln_gamma(double x);

// log Gamma(z) on the principal branch, any z off the poles. Individual
// values may differ from the principal branch by 2*pi*i; callers only
// exponentiate sums of these, so that is immaterial.
std::complex<double> ln_gamma(std::complex<double> z);

// log |Gamma(x)| for any non-pole real x, and the sign of Gamma(x).
double log_abs_gamma(double x);
int gamma_sign(double x);

// Lower incomplete gamma(a, z) = int_0^z t^{a-1} e^{-t} dt, a > 0, z >= 0.
double lower_incomplete_gamma(double a, double z);

// Regularized P(a, z) = gamma(a, z) / Gamma(a).
double regularized_gamma_p(double a, double z);

// Modified Bessel function of the first kind, nu >= 0, x >= 0.
double bessel_i(double nu, double x);

// Parameter block of G^{m,n}_{p,q}[z | a_1..a_p ; b_1..b_q].
struct MeijerGSpec {
    int m, n, p, q;
    std::vector<double> a, b;

    MeijerGSpec(int m_, int n_, int p_, int q_,
                std::vector<double> a_, std::vector<double> b_);

    double delta_star() const { return m + n - 0.5 * (p + q); }
};

struct MeijerGResult {
    double value = 0.0;
    bool regularized = false;  // epsilon-regularization was applied
};

// G^{m,n}_{p,q}[z | a; b] for z > 0 by closed-form reduction, reflection
// (p > q), or Mellin-Barnes contour quadrature. Relative target 1e-8.
double meijer_g(const MeijerGSpec& spec, double z);

// Finite residue-sum expansion over the first m lower-parameter poles
// (the Phi-style small-z leading behavior). Coincident parameters are
// handled by +/-eps perturbation and averaging, flagged in the result.
MeijerGResult meijer_g_residue_tail(const MeijerGSpec& spec, double z,
                                    double eps = 1e-6);

}  // namespace rfso::specfun
