#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "hstar/specfun.hpp"
#include "hstar/symbol.hpp"

namespace hstar {

// Deterministic standard-normal stream, pinned so that seeded verification
// reports reproduce across platforms and reimplementations:
// std::mt19937_64 drives explicit Box-Muller on 53-bit uniforms
//   u = (x >> 11 + 1) * 2^-53 in (0, 1],
//   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2),
// consumed in pairs (z0 first).
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        constexpr double two_pi = 6.283185307179586476925286766559005768;
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    Complex next_complex() {
        const double re = next();
        const double im = next();
        return {re, im};
    }

private:
    double uniform() {
        return ((gen_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline Eigen::VectorXcd random_unit_vector(int dim, NormalStream& rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.next_complex();
    return v / v.norm();
}

// Dense random symbol with every even-degree block up to l_max, entries
// i.i.d. complex standard normal (real and imaginary parts independent),
// filled row degree - column degree - row-major, then scaled to unit norm.
inline Symbol random_symbol(int n, double sigma, int l_max, NormalStream& rng) {
    Symbol out(n, sigma);
    for (int l = 0; l <= l_max; l += 2)
        for (int m = 0; m <= l_max; m += 2) {
            Eigen::MatrixXcd b(harmonic_dim(n, l), harmonic_dim(n, m));
            for (long i = 0; i < b.rows(); ++i)
                for (long j = 0; j < b.cols(); ++j) b(i, j) = rng.next_complex();
            out.set_block(l, m, std::move(b));
        }
    const double nrm = out.norm();
    for (auto& [k, b] : out.blocks) b /= nrm;
    return out;
}

inline KInvariantSymbol random_k_invariant(int n, double sigma, int l_max,
                                           NormalStream& rng) {
    KInvariantSymbol out;
    out.n = n;
    out.sigma = sigma;
    for (int l = 0; l <= l_max; l += 2) out.values[l] = rng.next_complex();
    return out;
}

// Haar-ish random rotation by explicit Gram-Schmidt on three normal
// deviate vectors; the third axis is the cross product, so det = +1.
inline Eigen::Matrix3d random_rotation_matrix(NormalStream& rng) {
    for (;;) {
        Eigen::Vector3d a, b;
        for (int i = 0; i < 3; ++i) a[i] = rng.next();
        for (int i = 0; i < 3; ++i) b[i] = rng.next();
        if (a.norm() < 1e-8) continue;
        const Eigen::Vector3d e1 = a / a.norm();
        const Eigen::Vector3d b_perp = b - e1.dot(b) * e1;
        if (b_perp.norm() < 1e-8) continue;
        const Eigen::Vector3d e2 = b_perp / b_perp.norm();
        Eigen::Matrix3d r;
        r.col(0) = e1;
        r.col(1) = e2;
        r.col(2) = e1.cross(e2);
        return r;
    }
}

} // namespace hstar
