#include "rfso/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rfso/quadrature.hpp"

namespace rfso::specfun {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLnSqrt2Pi = 0.9189385332046727417803297364056176398;

// Lanczos g=7, 9 coefficients.
constexpr double lanczos_c[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

template <typename T>
T lanczos_ln_gamma_half_plane(T z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    T x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    T t = z + 7.5;
    return kLnSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool near_nonpositive_int(double x, double tol = 1e-12) {
    return x < 0.5 && std::abs(x - std::round(x)) < tol;
}

std::complex<double> log_sin_pi(std::complex<double> z) {
    if (std::abs(z.imag()) < 8.0) return std::log(std::sin(kPi * z));
    const std::complex<double> i(0.0, 1.0);
    if (z.imag() > 0.0)
        return -i * kPi * z - std::log(std::complex<double>(0.0, 2.0)) +
               std::log(1.0 - std::exp(2.0 * i * kPi * z));
    return i * kPi * z - std::log(std::complex<double>(0.0, -2.0)) +
           std::log(1.0 - std::exp(-2.0 * i * kPi * z));
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
    if (x < 0.5) {
        // Reflection keeps the Lanczos sum in its accurate half-plane.
        return std::log(kPi / std::sin(kPi * x)) - lanczos_ln_gamma_half_plane(1.0 - x);
    }
    return lanczos_ln_gamma_half_plane(x);
}

std::complex<double> ln_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return lanczos_ln_gamma_half_plane(z);
    if (z.imag() == 0.0 && near_nonpositive_int(z.real()))
        throw DomainError("ln_gamma: pole of Gamma");
    return std::log(std::complex<double>(kPi)) - log_sin_pi(z) -
           lanczos_ln_gamma_half_plane(1.0 - z);
}

double log_abs_gamma(double x) {
    if (x > 0.0) return ln_gamma(x);
    if (near_nonpositive_int(x)) throw DomainError("log_abs_gamma: pole of Gamma");
    return std::log(kPi / std::abs(std::sin(kPi * x))) - ln_gamma(1.0 - x);
}

int gamma_sign(double x) {
    if (x > 0.0) return 1;
    if (near_nonpositive_int(x)) throw DomainError("gamma_sign: pole of Gamma");
    // Gamma alternates sign between consecutive negative integers.
    return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

double regularized_gamma_p(double a, double z) {
    if (!(a > 0.0)) throw DomainError("regularized_gamma_p: a must be positive");
    if (z < 0.0) throw DomainError("regularized_gamma_p: z must be non-negative");
    if (z == 0.0) return 0.0;
    const double lg = ln_gamma(a);
    const double lpre = a * std::log(z) - z - lg;
    if (z < a + 1.0) {
        // Series for P(a,z).
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= z / (a + n);
            sum += term;
            if (term < sum * 1e-16) break;
        }
        return std::exp(lpre) * sum;
    }
    // Lentz continued fraction for Q(a,z).
    const double tiny = 1e-300;
    double b = z + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(lpre) * h;
}

double lower_incomplete_gamma(double a, double z) {
    if (!(a > 0.0)) throw DomainError("lower_incomplete_gamma: a must be positive");
    if (z < 0.0) throw DomainError("lower_incomplete_gamma: z must be non-negative");
    return regularized_gamma_p(a, z) * std::exp(ln_gamma(a));
}

double bessel_i(double nu, double x) {
    if (nu < 0.0) throw DomainError("bessel_i: order must be >= 0");
    if (x < 0.0) throw DomainError("bessel_i: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x - 0.5 * std::log(2.0 * kPi * x) > 709.0)
        throw OverflowError("bessel_i: result overflows double range");
    // Ascending series; all-positive, stable up to the overflow guard.
    double term = std::exp(nu * std::log(0.5 * x) - ln_gamma(nu + 1.0));
    double sum = term;
    const double q = 0.25 * x * x;
    for (int j = 1; j < 100000; ++j) {
        term *= q / (j * (nu + j));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

MeijerGSpec::MeijerGSpec(int m_, int n_, int p_, int q_,
                         std::vector<double> a_, std::vector<double> b_)
    : m(m_), n(n_), p(p_), q(q_), a(std::move(a_)), b(std::move(b_)) {
    if (m < 0 || n < 0 || p < 0 || q < 0 || m > q || n > p)
        throw DomainError("MeijerGSpec: order indices out of range");
    if (static_cast<int>(a.size()) != p || static_cast<int>(b.size()) != q)
        throw DomainError("MeijerGSpec: parameter list sizes do not match p/q");
    if (delta_star() <= 0.0)
        throw DomainError("MeijerGSpec: convergence margin delta* must be positive");
}

namespace {

struct Mellin {
    const MeijerGSpec& s;
    double lnz;

    std::complex<double> log_f(std::complex<double> sp) const {
        std::complex<double> acc = sp * lnz;
        for (int j = 0; j < s.m; ++j) acc += ln_gamma(std::complex<double>(s.b[j]) - sp);
        for (int j = 0; j < s.n; ++j) acc += ln_gamma(1.0 - s.a[j] + sp);
        for (int j = s.m; j < s.q; ++j) acc -= ln_gamma(1.0 - s.b[j] + sp);
        for (int j = s.n; j < s.p; ++j) acc -= ln_gamma(std::complex<double>(s.a[j]) - sp);
        return acc;
    }

    double log_abs_f(double sigma) const {
        double acc = sigma * lnz;
        for (int j = 0; j < s.m; ++j) acc += log_abs_gamma(s.b[j] - sigma);
        for (int j = 0; j < s.n; ++j) acc += log_abs_gamma(1.0 - s.a[j] + sigma);
        for (int j = s.m; j < s.q; ++j) acc -= log_abs_gamma(1.0 - s.b[j] + sigma);
        for (int j = s.n; j < s.p; ++j) acc -= log_abs_gamma(s.a[j] - sigma);
        return acc;
    }
};

// Product over all gamma factors at a real point, excluding one upper factor
// (used for residues at crossed upper poles). Returns log-magnitude + sign.
struct LogSigned {
    double lg = 0.0;
    int sign = 1;
    void mul_gamma(double x) { lg += log_abs_gamma(x); sign *= gamma_sign(x); }
    void div_gamma(double x) { lg -= log_abs_gamma(x); sign *= gamma_sign(x); }
};

double contour_integral(const MeijerGSpec& s, double z) {
    // Coincident pole families: a_j - b_i a positive integer makes the
    // Mellin-Barnes contour impossible.
    for (int j = 0; j < s.n; ++j)
        for (int i = 0; i < s.m; ++i) {
            double d = s.a[j] - s.b[i];
            if (d > 0.5 && std::abs(d - std::round(d)) < 1e-12)
                throw DegenerateParameterError(
                    "meijer_g: upper and lower pole families coincide");
        }

    const Mellin mel{s, std::log(z)};
    double left = -std::numeric_limits<double>::infinity();
    double right = std::numeric_limits<double>::infinity();
    for (int j = 0; j < s.n; ++j) left = std::max(left, s.a[j] - 1.0);
    for (int i = 0; i < s.m; ++i) right = std::min(right, s.b[i]);

    bool crossed = false;
    double lo, hi;
    if (std::isinf(right)) {  // m == 0
        lo = left + 0.02;
        hi = left + 6.0;
    } else if (std::isinf(left)) {  // n == 0
        lo = right - 6.0;
        hi = right - 0.02;
    } else if (left < right - 1e-9) {
        double w = right - left;
        lo = left + 0.02 * w;
        hi = right - 0.02 * w;
    } else {
        // Pole families overlap but do not coincide: run the contour left of
        // every lower pole and add back residues of the upper poles crossed.
        crossed = true;
        lo = right - 1.0 + 0.01;
        hi = right - 0.01;
    }

    // Abscissa minimizing the integrand magnitude on the line (the midpoint
    // suffers catastrophic cancellation for the paper's kernels).
    double sigma = 0.5 * (lo + hi), best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 49; ++i) {
        double cand = lo + (hi - lo) * i / 48.0;
        double v;
        try {
            v = mel.log_abs_f(cand);
        } catch (const DomainError&) {
            continue;  // grid point hit a pole (possible in the crossed case)
        }
        if (std::isfinite(v) && v < best) {
            best = v;
            sigma = cand;
        }
    }

    // Truncation scan: |F| decays like exp(-delta* pi t); cut where it has
    // fallen 16 decades below its running peak.
    double logpeak = mel.log_abs_f(sigma);
    double T = std::max(1.0, 4.0 / s.delta_star());
    for (int it = 0; it < 200; ++it) {
        double lf = mel.log_f(std::complex<double>(sigma, T)).real();
        logpeak = std::max(logpeak, lf);
        if (lf < logpeak + std::log(1e-16)) break;
        T *= 1.5;
        if (T > 1e6)
            throw NumericalError("meijer_g: integrand truncation point not found", T);
    }

    const double scale = logpeak;
    auto f = [&](double t) {
        std::complex<double> lf = mel.log_f(std::complex<double>(sigma, t));
        double re = lf.real() - scale;
        if (re < -745.0) return 0.0;
        return std::exp(re) * std::cos(lf.imag());
    };
    quad::Result r = quad::integrate(f, 0.0, T, 1e-9, 1e-16 * T);
    if (!r.converged && std::abs(r.value) > 1e-280)
        throw NumericalError("meijer_g: contour quadrature did not converge",
                             r.abs_error / std::max(std::abs(r.value), 1e-300));
    double value = (scale < -700.0) ? 0.0 : r.value * std::exp(scale) / kPi;

    if (crossed) {
        // Residues of F(s)/(2 pi i) at upper poles s0 = a_j - 1 - l >= sigma.
        for (int j = 0; j < s.n; ++j) {
            for (int l = 0;; ++l) {
                double s0 = s.a[j] - 1.0 - l;
                if (s0 < sigma) break;
                LogSigned r0;
                r0.lg = s0 * std::log(z) - ln_gamma(l + 1.0);
                r0.sign = (l % 2 == 0) ? 1 : -1;
                for (int i = 0; i < s.m; ++i) r0.mul_gamma(s.b[i] - s0);
                for (int j2 = 0; j2 < s.n; ++j2) {
                    if (j2 == j) continue;
                    double arg = 1.0 - s.a[j2] + s0;
                    if (near_nonpositive_int(arg))
                        throw NumericalError(
                            "meijer_g: higher-order crossed pole unsupported", 0.0);
                    r0.mul_gamma(arg);
                }
                for (int i = s.m; i < s.q; ++i) r0.div_gamma(1.0 - s.b[i] + s0);
                for (int j2 = s.n; j2 < s.p; ++j2) r0.div_gamma(s.a[j2] - s0);
                value += r0.sign * std::exp(r0.lg);
            }
        }
    }
    return value;
}

}  // namespace

double meijer_g(const MeijerGSpec& spec, double z) {
    if (!(z > 0.0)) throw DomainError("meijer_g: argument must be positive");

    // Elementary reductions.
    if (spec.m == 1 && spec.n == 0 && spec.p == 0 && spec.q == 1)
        return std::pow(z, spec.b[0]) * std::exp(-z);
    if (spec.m == 1 && spec.n == 1 && spec.p == 1 && spec.q == 2 &&
        spec.a[0] == 1.0 && spec.b[1] == 0.0 && spec.b[0] > 0.0)
        return lower_incomplete_gamma(spec.b[0], z);

    if (spec.p > spec.q) {
        // G^{m,n}_{p,q}(z | a; b) = G^{n,m}_{q,p}(1/z | 1-b; 1-a).
        std::vector<double> ra(spec.q), rb(spec.p);
        for (int i = 0; i < spec.q; ++i) ra[i] = 1.0 - spec.b[i];
        for (int i = 0; i < spec.p; ++i) rb[i] = 1.0 - spec.a[i];
        MeijerGSpec flipped(spec.n, spec.m, spec.q, spec.p, std::move(ra), std::move(rb));
        return contour_integral(flipped, 1.0 / z);
    }
    return contour_integral(spec, z);
}

MeijerGResult meijer_g_residue_tail(const MeijerGSpec& spec, double z, double eps) {
    if (!(z > 0.0)) throw DomainError("meijer_g_residue_tail: argument must be positive");

    auto evaluate = [&](const std::vector<double>& b_first) -> double {
        double total = 0.0;
        for (int l = 0; l < spec.m; ++l) {
            LogSigned t;
            t.lg = b_first[l] * std::log(z);
            for (int j = 0; j < spec.m; ++j)
                if (j != l) t.mul_gamma(b_first[j] - b_first[l]);
            for (int j = 0; j < spec.n; ++j) t.mul_gamma(1.0 + b_first[l] - spec.a[j]);
            for (int j = spec.m; j < spec.q; ++j) t.div_gamma(1.0 + b_first[l] - spec.b[j]);
            for (int j = spec.n; j < spec.p; ++j) t.div_gamma(spec.a[j] - b_first[l]);
            total += t.sign * std::exp(t.lg);
        }
        return total;
    };

    std::vector<double> bf(spec.b.begin(), spec.b.begin() + spec.m);
    bool degenerate = false;
    for (int l = 0; l < spec.m && !degenerate; ++l) {
        for (int j = 0; j < spec.m; ++j)
            if (j != l && near_nonpositive_int(bf[j] - bf[l])) degenerate = true;
        for (int j = spec.m; j < spec.q; ++j)
            if (near_nonpositive_int(1.0 + bf[l] - spec.b[j])) degenerate = true;
        for (int j = 0; j < spec.n; ++j)
            if (near_nonpositive_int(1.0 + bf[l] - spec.a[j])) degenerate = true;
        for (int j = spec.n; j < spec.p; ++j)
            if (near_nonpositive_int(spec.a[j] - bf[l])) degenerate = true;
    }
    // A duplicate anywhere in the lower list (e.g. the SOP kernel at r=2 with
    // odd k) signals the Gamma(0) collisions of the naive expansion; perturb
    // and average to stay on the safe side of the parameter arithmetic.
    for (int i = 0; i < spec.q && !degenerate; ++i)
        for (int j = i + 1; j < spec.q; ++j)
            if (std::abs(spec.b[i] - spec.b[j]) < 1e-9) degenerate = true;

    MeijerGResult out;
    if (!degenerate) {
        out.value = evaluate(bf);
        return out;
    }
    std::vector<double> up = bf, dn = bf;
    for (int l = 0; l < spec.m; ++l) {
        up[l] += (l + 1) * eps;
        dn[l] -= (l + 1) * eps;
    }
    out.value = 0.5 * (evaluate(up) + evaluate(dn));
    out.regularized = true;
    return out;
}

}  // namespace rfso::specfun
