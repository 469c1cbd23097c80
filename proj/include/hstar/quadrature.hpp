#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "hstar/errors.hpp"

namespace hstar {

// Quadrature grid on the unit sphere S^{n-1}. Weights are normalized so that
// the total mass is 1 (the measure ds of total mass one is used throughout).
struct SphericalGrid {
    int n = 3;
    int exactness = 0;  // polynomial degree integrated exactly
    std::vector<std::array<double, 3>> nodes;
    std::vector<double> weights;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int q, std::vector<double>& x, std::vector<double>& w) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    x.resize(q);
    w.resize(q);
    for (int i = 0; i < q; ++i) {
        double z = std::cos(pi * (i + 0.75) / (q + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= q; ++k) {
                const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = q * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

} // namespace detail

// Product grid on S^2: Gauss-Legendre in the polar coordinate, uniform in
// azimuth. Exact for spherical polynomials of total degree <= exactness.
inline SphericalGrid build_grid(int n, int exactness) {
    if (n != 3) throw UnsupportedDimension("build_grid: only n = 3 grids are provided");
    if (exactness < 0) exactness = 0;

    const int q = (exactness + 2) / 2;       // 2q - 1 >= exactness
    const int nphi = exactness + 1;
    std::vector<double> z, glw;
    detail::gauss_legendre(q, z, glw);

    SphericalGrid g;
    g.n = 3;
    g.exactness = exactness;
    g.nodes.reserve(static_cast<std::size_t>(q) * nphi);
    g.weights.reserve(static_cast<std::size_t>(q) * nphi);
    constexpr double two_pi = 6.283185307179586476925286766559005768;
    for (int i = 0; i < q; ++i) {
        const double s = std::sqrt(1.0 - z[i] * z[i]);
        const double wi = glw[i] / 2.0 / nphi;
        for (int j = 0; j < nphi; ++j) {
            const double phi = two_pi * j / nphi;
            g.nodes.push_back({s * std::cos(phi), s * std::sin(phi), z[i]});
            g.weights.push_back(wi);
        }
    }
    return g;
}

template <class F>
auto integrate(const SphericalGrid& g, F&& f) {
    using R = std::invoke_result_t<F, const std::array<double, 3>&>;
    R acc{};
    for (std::size_t i = 0; i < g.nodes.size(); ++i) acc += g.weights[i] * f(g.nodes[i]);
    return acc;
}

} // namespace hstar
