#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>
#include <type_traits>

#include "hstar/errors.hpp"
#include "hstar/quadrature.hpp"
#include "hstar/specfun.hpp"

namespace hstar {

namespace detail {

// Associated Legendre P_l^m without the Condon-Shortley phase, m >= 0.
// P_m^m = (2m-1)!! (1-z^2)^{m/2}, then the standard upward recurrence in l.
inline double assoc_legendre_unphased(int l, int m, double z) {
    double pmm = 1.0;
    if (m > 0) {
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int k = 1; k <= m; ++k) pmm *= (2 * k - 1) * s;
    }
    if (l == m) return pmm;
    double pm1 = z * (2 * m + 1) * pmm;
    if (l == m + 1) return pm1;
    for (int k = m + 2; k <= l; ++k) {
        const double p = ((2 * k - 1) * z * pm1 - (k + m - 1) * pmm) / (k - m);
        pmm = pm1;
        pm1 = p;
    }
    return pm1;
}

} // namespace detail

// Real spherical harmonics on S^2, orthonormal for the total-mass-one
// measure (so each function is sqrt(4 pi) times the unit-measure one).
// Within degree l the index runs over m = -l..l; negative m carries
// sin(|m| phi), positive m carries cos(m phi), and the Condon-Shortley
// phase is not applied.
class HarmonicBasis {
public:
    explicit HarmonicBasis(int n) : n_(n) {
        if (n != 3)
            throw UnsupportedDimension("HarmonicBasis: only n = 3 is provided");
    }

    static const char* tag() { return "realSH-condon-shortley-sqrt4pi-v1"; }

    int n() const { return n_; }
    int dim(int l) const { return static_cast<int>(harmonic_dim(n_, l)); }

    // Value of the basis function with index i = m + l, i in [0, 2l].
    double eval(int l, int i, const std::array<double, 3>& x) const {
        const int m = i - l;
        const double z = x[2];
        if (m == 0)
            return std::sqrt(2.0 * l + 1.0) * detail::assoc_legendre_unphased(l, 0, z);
        const int am = std::abs(m);
        double norm = 2.0 * (2.0 * l + 1.0);
        for (int k = l - am + 1; k <= l + am; ++k) norm /= k;
        const double radial = std::sqrt(norm) * detail::assoc_legendre_unphased(l, am, z);
        const double phi = std::atan2(x[1], x[0]);
        return radial * (m > 0 ? std::cos(am * phi) : std::sin(am * phi));
    }

    Eigen::VectorXd eval_block(int l, const std::array<double, 3>& x) const {
        Eigen::VectorXd v(dim(l));
        for (int i = 0; i < dim(l); ++i) v[i] = eval(l, i, x);
        return v;
    }

    // Zonal reproducing kernel of the degree-l space:
    //   theta_l(u, v) = dim(l) C_l^{(n-2)/2}(<u,v>) / C_l^{(n-2)/2}(1),
    // which for n = 3 is (2l+1) P_l(<u,v>).
    double theta(int l, const std::array<double, 3>& u,
                 const std::array<double, 3>& v) const {
        const double t = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        const double alpha = (n_ - 2) / 2.0;
        return dim(l) * gegenbauer(l, alpha, t) / gegenbauer_at_one(l, alpha);
    }

private:
    int n_;
};

// Coefficients of f against the degree-l block, c_i = int f(x) Y_{l,i}(x) ds.
template <class F>
auto project(const HarmonicBasis& basis, const SphericalGrid& grid, F&& f, int l) {
    using Scalar = std::invoke_result_t<F, const std::array<double, 3>&>;
    Eigen::Vector<Scalar, Eigen::Dynamic> c =
        Eigen::Vector<Scalar, Eigen::Dynamic>::Zero(basis.dim(l));
    for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
        const Scalar fv = grid.weights[k] * f(grid.nodes[k]);
        for (int i = 0; i < basis.dim(l); ++i)
            c[i] += fv * basis.eval(l, i, grid.nodes[k]);
    }
    return c;
}

// Matrix of the rotation action on the degree-l block:
//   Y_j(R^T x) = sum_i D_ij Y_i(x),  D_ij = int Y_i(x) Y_j(R^T x) ds.
// R must be orthogonal; D is then orthogonal as well. The grid must be
// exact to degree 2l.
inline Eigen::MatrixXd rotation_block(const HarmonicBasis& basis,
                                      const SphericalGrid& grid,
                                      const Eigen::Matrix3d& R, int l) {
    const int d = basis.dim(l);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(d, d);
    const Eigen::Matrix3d Rt = R.transpose();
    for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
        const auto& x = grid.nodes[k];
        const Eigen::Vector3d y = Rt * Eigen::Vector3d(x[0], x[1], x[2]);
        const Eigen::VectorXd a = basis.eval_block(l, x);
        const Eigen::VectorXd b = basis.eval_block(l, {y[0], y[1], y[2]});
        D.noalias() += grid.weights[k] * a * b.transpose();
    }
    return D;
}

} // namespace hstar
