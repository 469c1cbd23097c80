#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hstar/errors.hpp"
#include "hstar/harmonics.hpp"
#include "hstar/intertwining.hpp"
#include "hstar/random.hpp"
#include "hstar/symbol.hpp"

namespace hstar {

inline void require_context(const Symbol& f, const CalculusContext& ctx, const char* who) {
    if (f.n != ctx.n || f.sigma != ctx.sigma)
        throw ContextMismatch(std::string(who) + ": symbol does not match the context");
}

// The graded product: contraction over the shared inner degree, weighted by
// the intertwiner eigenvalue of that degree,
//   (F # G)^{(l,m')} = d * sum_m e_m * F^{(l,m)} G^{(m,m')}.
// Pure block linear algebra; the inner sum only ranges over degrees present
// in both operands, so truncation is exact and the output degrees stay
// inside the union of the input degrees. Accumulation order is fixed
// (ascending inner degree) so results are reproducible bit for bit.
inline Symbol star_product(const Symbol& f, const Symbol& g, const CalculusContext& ctx) {
    require_same_context(f, g, "star_product");
    require_context(f, ctx, "star_product");
    Symbol out(f.n, f.sigma);
    for (const auto& [fk, fb] : f.blocks) {
        const auto [l, m] = fk;
        const Complex w = ctx.e(m);
        for (auto it = g.blocks.lower_bound({m, 0});
             it != g.blocks.end() && it->first.first == m; ++it) {
            const int mp = it->first.second;
            Eigen::MatrixXcd& acc = out.blocks[{l, mp}];
            if (acc.size() == 0)
                acc = Eigen::MatrixXcd::Zero(harmonic_dim(f.n, l), harmonic_dim(f.n, mp));
            acc.noalias() += w * (fb * it->second);
        }
    }
    for (auto& [k, b] : out.blocks) b *= ctx.d;
    return out;
}

// The involution, reduced to blocks:
//   (F*)^{(m,l)} = conj(d)^2 conj(e_l) conj(e_m) conj-transpose(F^{(l,m)}).
// Derivation in docs/algebra.md. F** = F and the adjoint-pairing axiom
// both hinge on |d|^2 c = 1 and |e_l|^2 = c.
inline Symbol involution(const Symbol& f, const CalculusContext& ctx) {
    require_context(f, ctx, "involution");
    const Complex db2 = std::conj(ctx.d) * std::conj(ctx.d);
    Symbol out(f.n, f.sigma);
    for (const auto& [k, b] : f.blocks) {
        const auto [l, m] = k;
        out.blocks[{m, l}] =
            db2 * std::conj(ctx.e(l)) * std::conj(ctx.e(m)) * b.adjoint();
    }
    return out;
}

// Rank-one self-adjoint idempotent built on a unit coefficient vector f of
// degree l: the single block (l,l) = (d e_l)^{-1} f conj-transpose(f).
inline Symbol idempotent_rank_one(int l, const Eigen::VectorXcd& f,
                                  const CalculusContext& ctx) {
    if (f.size() != harmonic_dim(ctx.n, l))
        throw Error("idempotent_rank_one: coefficient vector has wrong dimension");
    if (std::abs(f.norm() - 1.0) > 1e-12)
        throw NotNormalized("idempotent_rank_one: coefficient vector must be unit norm");
    Symbol out(ctx.n, ctx.sigma);
    out.set_block(l, l, (1.0 / (ctx.d * ctx.e(l))) * (f * f.adjoint()));
    return out;
}

// K-invariant idempotent of degree l: phi_l = (d e_l)^{-1} theta_l.
inline KInvariantSymbol k_invariant_idempotent(int l, const CalculusContext& ctx) {
    KInvariantSymbol out;
    out.n = ctx.n;
    out.sigma = ctx.sigma;
    out.values[l] = 1.0 / (ctx.d * ctx.e(l));
    return out;
}

// Sum of the K-invariant idempotents over the given degrees; a two-sided
// identity on symbols whose degrees stay inside that set. (The untruncated
// sum over all degrees has infinite norm and is deliberately not provided.)
inline Symbol truncated_identity(const std::vector<int>& degrees,
                                 const CalculusContext& ctx) {
    Symbol out(ctx.n, ctx.sigma);
    for (int l : degrees) {
        const long dim = harmonic_dim(ctx.n, l);
        out.set_block(l, l, (1.0 / (ctx.d * ctx.e(l))) *
                                Eigen::MatrixXcd::Identity(dim, dim));
    }
    return out;
}

// Block-graded operator: same storage as Symbol but composed by plain
// matrix multiplication, no eigenvalue weights.
struct OperatorMatrix {
    int n = 3;
    double sigma = 0.0;
    std::map<std::pair<int, int>, Eigen::MatrixXcd> blocks;

    double hs_norm() const {
        double s = 0.0;
        for (const auto& [k, b] : blocks) s += b.squaredNorm();
        return std::sqrt(s);
    }
};

inline OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
    OperatorMatrix out;
    out.n = a.n;
    out.sigma = a.sigma;
    for (const auto& [ak, ab] : a.blocks) {
        const auto [l, m] = ak;
        for (auto it = b.blocks.lower_bound({m, 0});
             it != b.blocks.end() && it->first.first == m; ++it) {
            Eigen::MatrixXcd& acc = out.blocks[{l, it->first.second}];
            if (acc.size() == 0) acc = Eigen::MatrixXcd::Zero(ab.rows(), it->second.cols());
            acc.noalias() += ab * it->second;
        }
    }
    return out;
}

inline OperatorMatrix adjoint(const OperatorMatrix& a) {
    OperatorMatrix out;
    out.n = a.n;
    out.sigma = a.sigma;
    for (const auto& [k, b] : a.blocks) out.blocks[{k.second, k.first}] = b.adjoint();
    return out;
}

inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    OperatorMatrix out = a;
    for (const auto& [k, bb] : b.blocks) {
        auto it = out.blocks.find(k);
        if (it == out.blocks.end())
            out.blocks[k] = -bb;
        else
            it->second -= bb;
    }
    return out;
}

// Unitary change of picture that turns # into plain matrix multiplication:
//   M(F)^{(l,m)} = s_l F^{(l,m)} s_m,  s_l = principal sqrt(d e_l).
// Since s_m^2 = d e_m, M(F # G) = M(F) M(G); since |s_l| = 1, M preserves
// the Hilbert-Schmidt norm, and M(F*) = conj-transpose(M(F)). The principal
// branch is an arbitrary but deterministic phase choice; any other
// unimodular choice gives a unitarily equivalent picture.
inline OperatorMatrix matrix_realization(const Symbol& f, const CalculusContext& ctx) {
    require_context(f, ctx, "matrix_realization");
    std::map<int, Complex> s;
    for (int l = 0; l <= ctx.l_max; l += 2) s[l] = std::sqrt(ctx.d * ctx.e(l));
    OperatorMatrix out;
    out.n = f.n;
    out.sigma = f.sigma;
    for (const auto& [k, b] : f.blocks)
        out.blocks[k] = (s.at(k.first) * s.at(k.second)) * b;
    return out;
}

// Rotation acting simultaneously on both tensor legs:
//   (R . F)^{(l,m)} = D_l F^{(l,m)} D_m^T
// with D_l the orthogonal matrix of the rotation on the degree-l space.
// The grid must be exact to degree 2 l_max of the symbol.
inline Symbol rotate_symbol(const Symbol& f, const Eigen::Matrix3d& r,
                            const HarmonicBasis& basis, const SphericalGrid& grid) {
    std::map<int, Eigen::MatrixXd> d;
    Symbol out(f.n, f.sigma);
    for (const auto& [k, b] : f.blocks) {
        for (int l : {k.first, k.second})
            if (!d.count(l)) d[l] = rotation_block(basis, grid, r, l);
        out.blocks[k] = d.at(k.first) * b * d.at(k.second).transpose();
    }
    return out;
}

// Residuals of the Hilbert-algebra axioms on a symbol triple. Callers pick
// tolerances; submultiplicativity is a signed margin that must stay <= 0
// up to rounding, and nondegeneracy must stay bounded away from zero.
struct AxiomReport {
    double associativity;        // ||(F#G)#H - F#(G#H)||
    double adjoint_pairing;      // |<F#G, H> - <G, F*#H>|
    double involution_isometry;  // | ||F*|| - ||F|| |
    double submultiplicativity;  // ||F#G|| - ||F|| ||G||
    double anti_homomorphism;    // ||(F#G)* - G*#F*||
    double nondegeneracy;        // ||F#F*||
};

inline AxiomReport verify_hstar_axioms(const Symbol& f, const Symbol& g, const Symbol& h,
                                       const CalculusContext& ctx) {
    AxiomReport rep{};
    const Symbol fg = star_product(f, g, ctx);
    rep.associativity = (star_product(fg, h, ctx) - star_product(f, star_product(g, h, ctx), ctx)).norm();
    const Symbol fstar = involution(f, ctx);
    rep.adjoint_pairing = std::abs(inner_product(fg, h) - inner_product(g, star_product(fstar, h, ctx)));
    rep.involution_isometry = std::abs(fstar.norm() - f.norm());
    rep.submultiplicativity = fg.norm() - f.norm() * g.norm();
    rep.anti_homomorphism =
        (involution(fg, ctx) - star_product(involution(g, ctx), fstar, ctx)).norm();
    rep.nondegeneracy = star_product(f, fstar, ctx).norm();
    return rep;
}

// Minimal-ideal evidence for the rank-one idempotent E built on f: products
// R # E land in the column space of f (each block B satisfies
// B (I - f conj-transpose(f)) = 0), and E # R # E collapses to a scalar
// multiple of E. Residuals are maxima over the random trials.
struct IdealReport {
    double column_space_residual;
    double scalar_multiple_residual;
};

inline IdealReport minimal_left_ideal_check(int l, const Eigen::VectorXcd& f, int trials,
                                            const CalculusContext& ctx,
                                            std::uint64_t seed) {
    const Symbol e = idempotent_rank_one(l, f, ctx);
    const Eigen::MatrixXcd coproj =
        Eigen::MatrixXcd::Identity(f.size(), f.size()) - f * f.adjoint();
    NormalStream rng(seed);
    IdealReport rep{0.0, 0.0};
    for (int t = 0; t < trials; ++t) {
        const Symbol r = random_symbol(ctx.n, ctx.sigma, ctx.l_max, rng);
        const Symbol re = star_product(r, e, ctx);
        for (const auto& [k, b] : re.blocks)
            rep.column_space_residual =
                std::max(rep.column_space_residual, (b * coproj).norm());
        const Symbol ere = star_product(e, re, ctx);
        const Complex scale = inner_product(ere, e) / inner_product(e, e);
        rep.scalar_multiple_residual =
            std::max(rep.scalar_multiple_residual, (ere - scale * e).norm());
    }
    return rep;
}

} // namespace hstar
