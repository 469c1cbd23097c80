#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>

#include "hstar/errors.hpp"
#include "hstar/specfun.hpp"

namespace hstar {

// Graded coefficient form of a square-integrable function on the product of
// two spheres: block (l, m) holds its components against the degree-l basis
// in the first leg and the degree-m basis in the second. Absent blocks are
// zero; only even degrees occur. Shape of block (l, m) is
// harmonic_dim(n, l) x harmonic_dim(n, m), enforced on insertion.
struct Symbol {
    int n = 3;
    double sigma = 0.0;
    std::map<std::pair<int, int>, Eigen::MatrixXcd> blocks;

    Symbol() = default;
    Symbol(int n_, double sigma_) : n(n_), sigma(sigma_) {}

    void set_block(int l, int m, Eigen::MatrixXcd b) {
        if (l < 0 || m < 0 || l % 2 != 0 || m % 2 != 0)
            throw Error("Symbol: block degrees must be even and nonnegative");
        if (b.rows() != harmonic_dim(n, l) || b.cols() != harmonic_dim(n, m))
            throw Error("Symbol: block shape does not match its degrees");
        blocks[{l, m}] = std::move(b);
    }

    const Eigen::MatrixXcd* block(int l, int m) const {
        const auto it = blocks.find({l, m});
        return it == blocks.end() ? nullptr : &it->second;
    }

    double squared_norm() const {
        double s = 0.0;
        for (const auto& [k, b] : blocks) s += b.squaredNorm();
        return s;
    }
    double norm() const { return std::sqrt(squared_norm()); }

    bool same_context(const Symbol& o) const { return n == o.n && sigma == o.sigma; }
};

inline void require_same_context(const Symbol& a, const Symbol& b, const char* who) {
    if (!a.same_context(b))
        throw ContextMismatch(std::string(who) + ": operands carry different (n, sigma)");
}

// Parseval form of the L2 inner product: sum over blocks of
// trace(A^{(l,m)} conj-transpose(B^{(l,m)})).
inline Complex inner_product(const Symbol& a, const Symbol& b) {
    require_same_context(a, b, "inner_product");
    Complex s = 0.0;
    for (const auto& [k, ab] : a.blocks) {
        const Eigen::MatrixXcd* bb = b.block(k.first, k.second);
        if (bb) s += ab.cwiseProduct(bb->conjugate()).sum();
    }
    return s;
}

inline Symbol operator+(const Symbol& a, const Symbol& b) {
    require_same_context(a, b, "operator+");
    Symbol out = a;
    for (const auto& [k, bb] : b.blocks) {
        auto it = out.blocks.find(k);
        if (it == out.blocks.end())
            out.blocks[k] = bb;
        else
            it->second += bb;
    }
    return out;
}

inline Symbol operator*(const Complex& c, const Symbol& a) {
    Symbol out = a;
    for (auto& [k, b] : out.blocks) b *= c;
    return out;
}

inline Symbol operator-(const Symbol& a, const Symbol& b) {
    return a + (Complex(-1.0, 0.0) * b);
}

// K-invariant element: a combination sum_l a_l theta_l of the zonal
// reproducing kernels, stored by its coefficient per even degree. Embeds
// into Symbol as diagonal identity blocks scaled by a_l (theta_l is the
// identity matrix over any orthonormal basis of its degree).
struct KInvariantSymbol {
    int n = 3;
    double sigma = 0.0;
    std::map<int, Complex> values;

    Symbol embed() const {
        Symbol out(n, sigma);
        for (const auto& [l, a] : values) {
            const long d = harmonic_dim(n, l);
            out.set_block(l, l, a * Eigen::MatrixXcd::Identity(d, d));
        }
        return out;
    }
};

// Orthogonal projection onto the K-invariant part: a_l is the normalized
// trace of the diagonal block; off-diagonal and traceless parts drop. A
// block that is exactly scalar projects to its diagonal entry bit for bit,
// so re-projecting an embedded KInvariantSymbol is the identity.
inline KInvariantSymbol k_project(const Symbol& f) {
    KInvariantSymbol out;
    out.n = f.n;
    out.sigma = f.sigma;
    for (const auto& [k, b] : f.blocks) {
        if (k.first != k.second) continue;
        const long d = harmonic_dim(f.n, k.first);
        bool scalar = true;
        for (long i = 1; i < d && scalar; ++i) scalar = (b(i, i) == b(0, 0));
        out.values[k.first] = scalar ? b(0, 0) : b.trace() / static_cast<double>(d);
    }
    return out;
}

} // namespace hstar
