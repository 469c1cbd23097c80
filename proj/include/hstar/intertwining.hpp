#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstar/errors.hpp"
#include "hstar/harmonics.hpp"
#include "hstar/quadrature.hpp"
#include "hstar/specfun.hpp"

namespace hstar {

namespace detail {

inline double gamma_half_ratio(int n) {
    // Gamma(n/2) / sqrt(pi)
    return std::exp(std::lgamma(n / 2.0)) / std::sqrt(kPi);
}

} // namespace detail

// Scalar factor attached to the kernel transform of the distribution
// |r|^mu on the line:
//   e(mu) = Gamma(n/2)/sqrt(pi) * Gamma((-mu-n+1)/2) / Gamma(-mu/2).
// Both Gamma arguments move at rate -1/2 in mu, so matched poles take the
// lockstep limit.
inline Complex e_mu(int n, Complex mu) {
    return detail::gamma_half_ratio(n) *
           gamma_ratio((-mu - static_cast<double>(n) + 1.0) / 2.0, -mu / 2.0);
}

// c(mu) = e(mu) e(-mu-n). Invariant under mu -> -mu-n.
inline Complex c_mu(int n, Complex mu) {
    return e_mu(n, mu) * e_mu(n, -mu - static_cast<double>(n));
}

// Normalizing constant of the calculus at spectral parameter sigma:
//   d(sigma) = sqrt(pi)/Gamma(n/2) * Gamma((n/2+is)/2) / Gamma((-n/2+is+1)/2),
// equal to 1 / e(-mu-n) at mu = -n/2 + i sigma. sigma = 0 is outside the
// admissible parameter set.
inline Complex d_sigma(int n, double sigma) {
    if (sigma == 0.0 || std::isnan(sigma))
        throw InvalidSigma("d_sigma: sigma must be nonzero");
    const Complex is(0.0, sigma);
    return (1.0 / detail::gamma_half_ratio(n)) *
           std::exp(log_gamma((n / 2.0 + is) / 2.0) -
                    log_gamma((-n / 2.0 + is + 1.0) / 2.0));
}

// Eigenvalue of the kernel operator f -> int |<s,t>|^{-mu-n} f(t) ds(t) on
// degree-l spherical harmonics (Funk-Hecke). Series route: expand the
// degree-l Gegenbauer kernel polynomial in monomials, integrate each
// moment, so with nu = -mu - n and C = C_l^{(n-2)/2},
//   eta_l(mu) = Gamma(n/2)/sqrt(pi) * 1/C(1)
//             * sum_k coeff_k(C) Gamma((k+nu+1)/2) / Gamma((k+nu+n)/2).
// Matched Gamma poles again move in lockstep (rate 1/2 in nu). Odd degrees
// are annihilated outright: the kernel is even in <s,t>.
inline Complex eta_ell(int n, int l, Complex mu) {
    if (l % 2 != 0) return 0.0;
    const Complex nu = -mu - static_cast<double>(n);
    const double alpha = (n - 2) / 2.0;
    const auto poly = gegenbauer_coeffs(l, alpha);
    Complex sum = 0.0;
    for (int k = l % 2; k <= l; k += 2)
        sum += poly.coeffs[k] * gamma_ratio((nu + (k + 1.0)) / 2.0,
                                            (nu + (k + static_cast<double>(n))) / 2.0);
    return detail::gamma_half_ratio(n) / gegenbauer_at_one(l, alpha) * sum;
}

// Same eigenvalue by a closed product of Gamma factors:
//   2^{-2l} * Gamma(n/2)/sqrt(pi)
//   * [Gamma(n-2+l) Gamma((n-2)/2)] / [Gamma(n-2) Gamma((n-2)/2+l)]
//   * [Gamma(nu+1) Gamma((nu-l+1)/2)] / [Gamma(nu-l+1) Gamma((nu+n+l)/2)].
// This route normalizes the degree-l kernel polynomial by its LEADING
// coefficient, whereas eta_ell normalizes by the value at 1; the two
// therefore differ by the exact rational factor
//   eta_ell_gamma / eta_ell = prod_{j<l} (n-2+j)/(n-2+2j),
// which the tests pin degree by degree. Poles of individual Gamma factors
// cancel jointly across the product (the arguments move at rates 1 and
// 1/2 in nu), so the limit is taken over all four factors at once.
inline Complex eta_ell_gamma(int n, int l, Complex mu) {
    if (l % 2 != 0) return 0.0;
    const Complex nu = -mu - static_cast<double>(n);
    const double a2 = static_cast<double>(n) - 2.0;  // 2 * alpha
    // Degree-dependent real factor; n >= 3 keeps every Gamma argument positive.
    const double k_l = std::exp(std::lgamma(a2 + l) - std::lgamma(a2) +
                                std::lgamma(a2 / 2.0) - std::lgamma(a2 / 2.0 + l));
    const double ll = static_cast<double>(l);
    const Complex mu_part =
        gamma_product_ratio({{nu + 1.0, 1.0}, {(nu - ll + 1.0) / 2.0, 0.5}},
                            {{nu - ll + 1.0, 1.0}, {(nu + (ll + n)) / 2.0, 0.5}});
    return std::pow(2.0, -2 * l) * detail::gamma_half_ratio(n) * k_l * mu_part;
}

struct EigenvalueEstimate {
    Complex value;
    double rel_residual;  // ||K f - value f|| / ||K f|| in the grid L2 norm
};

// Funk-Hecke eigenvalue measured directly: apply the kernel by quadrature
// to the zonal degree-l basis function and fit the scalar by least squares.
// Only the absolutely convergent regime Re(-mu-n) >= 1 is accepted: there
// the kernel |<s,t>|^nu is at worst a Lipschitz kink and product quadrature
// converges at a usable rate. Below that the estimate degrades sharply and
// below Re(-mu-n) = -1 the integral itself diverges.
inline EigenvalueEstimate eigenvalue_by_quadrature(const HarmonicBasis& basis,
                                                   const SphericalGrid& grid,
                                                   Complex mu, int l) {
    const Complex nu = -mu - static_cast<double>(basis.n());
    if (nu.real() < 1.0)
        throw ConvergenceRegime("eigenvalue_by_quadrature: Re(-mu-n) must be >= 1");

    const std::size_t N = grid.nodes.size();
    std::vector<double> f(N);
    for (std::size_t k = 0; k < N; ++k) f[k] = basis.eval(l, l, grid.nodes[k]);

    const bool real_nu = (nu.imag() == 0.0);
    std::vector<Complex> g(N, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
        const auto& s = grid.nodes[i];
        Complex acc = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
            const auto& t = grid.nodes[k];
            const double dot = std::abs(s[0] * t[0] + s[1] * t[1] + s[2] * t[2]);
            if (dot == 0.0) continue;  // |0|^nu = 0 for Re nu >= 1; avoid complex pow at 0
            const Complex kv = real_nu ? Complex(std::pow(dot, nu.real()), 0.0)
                                       : std::pow(Complex(dot, 0.0), nu);
            acc += grid.weights[k] * f[k] * kv;
        }
        g[i] = acc;
    }

    Complex num = 0.0;
    double den = 0.0, gnorm2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        num += grid.weights[i] * g[i] * f[i];
        den += grid.weights[i] * f[i] * f[i];
        gnorm2 += grid.weights[i] * std::norm(g[i]);
    }
    const Complex lambda = num / den;
    double res2 = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        res2 += grid.weights[i] * std::norm(g[i] - lambda * f[i]);
    const double denom = std::max(std::sqrt(gnorm2), 1e-300);
    return {lambda, std::sqrt(res2) / denom};
}

// All scalar constants of the calculus at (n, sigma), with the eigenvalue
// table e_l = eta_l(-n/2 + i sigma) for even l up to l_max. Built eagerly;
// the identities |d|^2 c = 1 and |e_l|^2 = c hold on the nose.
struct CalculusContext {
    int n = 3;
    double sigma = 0.0;
    int l_max = 0;
    Complex d;
    Complex c;
    std::vector<Complex> e_even;  // e_even[l/2]

    static CalculusContext build(int n, double sigma, int l_max) {
        if (sigma == 0.0 || std::isnan(sigma))
            throw InvalidSigma("CalculusContext: sigma must be nonzero");
        CalculusContext ctx;
        ctx.n = n;
        ctx.sigma = sigma;
        ctx.l_max = l_max;
        const Complex mu(-n / 2.0, sigma);
        ctx.d = d_sigma(n, sigma);
        ctx.c = c_mu(n, mu);
        ctx.e_even.reserve(l_max / 2 + 1);
        for (int l = 0; l <= l_max; l += 2) ctx.e_even.push_back(eta_ell(n, l, mu));
        return ctx;
    }

    const Complex& e(int l) const {
        if (l < 0 || l > l_max || l % 2 != 0)
            throw std::out_of_range("CalculusContext::e: even degrees in [0, l_max] only");
        return e_even[l / 2];
    }
};

} // namespace hstar
