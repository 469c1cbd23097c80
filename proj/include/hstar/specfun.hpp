#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "hstar/errors.hpp"

namespace hstar {

using Complex = std::complex<double>;

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczosCoeffs[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Distance tolerance for treating an argument as sitting on a pole.
inline constexpr double kPoleTol = 1e-12;

// If z is within kPoleTol of a non-positive integer -p, returns p >= 0.
inline bool near_nonpositive_integer(const Complex& z, long& p) {
    if (std::abs(z.imag()) > kPoleTol) return false;
    const double r = std::round(z.real());
    if (r > 0.5 || std::abs(z.real() - r) > kPoleTol) return false;
    p = static_cast<long>(-r);
    return true;
}

inline Complex log_gamma_core(Complex z) {
    // Re z >= 0.5 assumed.
    Complex acc = kLanczosCoeffs[0];
    for (int k = 1; k < 15; ++k) acc += kLanczosCoeffs[k] / (z - 1.0 + static_cast<double>(k));
    const Complex t = z + (kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace detail

// Principal branch of log Gamma(z). Throws PoleError when z sits on a
// non-positive integer (within 1e-12).
inline Complex log_gamma(Complex z) {
    long p;
    if (detail::near_nonpositive_integer(z, p))
        throw PoleError("log_gamma: argument at non-positive integer pole");
    if (z.real() >= 0.5) return detail::log_gamma_core(z);
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
    return std::log(detail::kPi) - std::log(std::sin(detail::kPi * z)) -
           detail::log_gamma_core(1.0 - z);
}

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

// Gamma(x) / Gamma(y), defined by continuation when both arguments sit on
// poles. The limit taken is the lockstep one: x and y are perturbed at the
// same rate, which matches every use in this library (both arguments are
// affine in the continuation parameter with equal slope).
//   * both at poles -p, -q:  (-1)^{p+q} q!/p!
//   * only the denominator at a pole: 0
//   * only the numerator at a pole: PoleError
inline Complex gamma_ratio(const Complex& x, const Complex& y) {
    long p, q;
    const bool xp = detail::near_nonpositive_integer(x, p);
    const bool yp = detail::near_nonpositive_integer(y, q);
    if (xp && yp) {
        const double lg = std::lgamma(static_cast<double>(q) + 1.0) -
                          std::lgamma(static_cast<double>(p) + 1.0);
        const double sign = ((p + q) % 2 == 0) ? 1.0 : -1.0;
        return sign * std::exp(lg);
    }
    if (yp) return 0.0;
    if (xp) throw PoleError("gamma_ratio: numerator pole not matched by denominator");
    return std::exp(log_gamma(x) - log_gamma(y));
}

struct GammaFactor {
    Complex arg;
    double rate;  // derivative of arg in the continuation parameter
};

// Continuation limit of prod Gamma(num_i) / prod Gamma(den_j) where every
// argument is affine in one continuation parameter with the stated rate.
// Each factor sitting on a pole -p contributes its residue behavior
// (-1)^p / (p! * rate * eps); the eps powers must cancel between numerator
// and denominator. A net numerator pole throws, a net denominator pole
// yields 0, a balanced product yields the finite joint limit.
inline Complex gamma_product_ratio(std::initializer_list<GammaFactor> num,
                                   std::initializer_list<GammaFactor> den) {
    int order = 0;
    Complex log_part = 0.0;
    double pole_part = 1.0;
    long p;
    for (const GammaFactor& f : num) {
        if (detail::near_nonpositive_integer(f.arg, p)) {
            ++order;
            const double sign = (p % 2 == 0) ? 1.0 : -1.0;
            pole_part *= sign / (std::exp(std::lgamma(p + 1.0)) * f.rate);
        } else {
            log_part += log_gamma(f.arg);
        }
    }
    for (const GammaFactor& f : den) {
        if (detail::near_nonpositive_integer(f.arg, p)) {
            --order;
            const double sign = (p % 2 == 0) ? 1.0 : -1.0;
            pole_part *= sign * std::exp(std::lgamma(p + 1.0)) * f.rate;
        } else {
            log_part -= log_gamma(f.arg);
        }
    }
    if (order > 0)
        throw PoleError("gamma_product_ratio: numerator poles exceed denominator poles");
    if (order < 0) return 0.0;
    return std::exp(log_part) * pole_part;
}

// Gegenbauer polynomial C_l^alpha(x) by the forward three-term recurrence
//   k C_k = 2(k-1+alpha) x C_{k-1} - (k-2+2 alpha) C_{k-2}.
inline double gegenbauer(int l, double alpha, double x) {
    if (l == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * alpha * x;
    for (int k = 2; k <= l; ++k) {
        const double next =
            (2.0 * (k - 1 + alpha) * x * cur - (k - 2 + 2.0 * alpha) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

// C_l^alpha(1) = (2 alpha)_l / l!
inline double gegenbauer_at_one(int l, double alpha) {
    double v = 1.0;
    for (int j = 0; j < l; ++j) v *= (2.0 * alpha + j) / (j + 1.0);
    return v;
}

// Monomial coefficients of a polynomial, coeffs[k] multiplying x^k.
struct PolynomialCoeffs {
    int degree = 0;
    std::vector<double> coeffs;  // size degree + 1

    double eval(double x) const {
        double v = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
        return v;
    }
};

// Monomial coefficients of C_l^alpha, by the same recurrence on coefficient
// arrays. Parity is preserved exactly: coeffs[k] == 0 for k != l (mod 2).
inline PolynomialCoeffs gegenbauer_coeffs(int l, double alpha) {
    std::vector<double> prev{1.0};
    if (l == 0) return {0, prev};
    std::vector<double> cur{0.0, 2.0 * alpha};
    for (int k = 2; k <= l; ++k) {
        std::vector<double> next(k + 1, 0.0);
        for (int j = 0; j < k; ++j)
            next[j + 1] += 2.0 * (k - 1 + alpha) / k * cur[j];
        for (int j = 0; j + 2 <= k; ++j)
            next[j] -= (k - 2 + 2.0 * alpha) / k * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {l, cur};
}

// Dimension of the space of degree-l spherical harmonics on S^{n-1}:
//   binom(l+n-1, l) - binom(l+n-3, l-2).
inline long harmonic_dim(int n, int l) {
    auto binom = [](long a, long b) {
        if (b < 0 || b > a) return 0L;
        b = std::min(b, a - b);
        long r = 1;
        for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    return binom(l + n - 1, l) - binom(l + n - 3, l - 2);
}

} // namespace hstar
