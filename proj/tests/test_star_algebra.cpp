#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "hstar/random.hpp"
#include "hstar/star_algebra.hpp"
#include "hstar/symbol.hpp"

using hstar::Complex;

namespace {

const hstar::CalculusContext& ctx() {
    static const auto c = hstar::CalculusContext::build(3, 1.3, 8);
    return c;
}

Eigen::VectorXcd unit(int dim, std::uint64_t seed) {
    hstar::NormalStream rng(seed);
    return hstar::random_unit_vector(dim, rng);
}

} // namespace

TEST_CASE("rank-one products contract over the shared inner degree") {
    const Eigen::VectorXcd f = unit(5, 1), k = unit(5, 2);
    const Eigen::VectorXcd g = unit(9, 3);

    hstar::Symbol F(3, 1.3), G(3, 1.3);
    F.set_block(2, 4, f * g.adjoint());
    G.set_block(4, 2, g * k.adjoint());

    const hstar::Symbol P = hstar::star_product(F, G, ctx());
    REQUIRE(P.blocks.size() == 1);
    const Eigen::MatrixXcd want = ctx().d * ctx().e(4) * (f * k.adjoint());
    CHECK((*P.block(2, 2) - want).norm() < 1e-14);

    // Mismatched inner degree annihilates.
    hstar::Symbol H(3, 1.3);
    H.set_block(2, 2, Eigen::MatrixXcd::Random(5, 5));
    CHECK(hstar::star_product(F, H, ctx()).norm() == 0.0);
}

TEST_CASE("grading is closed and truncation is exact") {
    hstar::NormalStream rng(77);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 4, rng);
    const hstar::Symbol G = hstar::random_symbol(3, 1.3, 8, rng);
    const hstar::Symbol P = hstar::star_product(F, G, ctx());
    for (const auto& [k, b] : P.blocks) {
        CHECK(k.first <= 4);   // row degrees come from F
        CHECK(k.second <= 8);  // column degrees come from G
    }
}

TEST_CASE("context mismatches are rejected") {
    hstar::Symbol F(3, 1.3), G(3, 0.7);
    F.set_block(0, 0, Eigen::MatrixXcd::Identity(1, 1));
    G.set_block(0, 0, Eigen::MatrixXcd::Identity(1, 1));
    CHECK_THROWS_AS(hstar::star_product(F, G, ctx()), hstar::ContextMismatch);
    CHECK_THROWS_AS(hstar::inner_product(F, G), hstar::ContextMismatch);
    CHECK_THROWS_AS(hstar::involution(G, ctx()), hstar::ContextMismatch);
}

TEST_CASE("inner product is the Parseval pairing") {
    hstar::KInvariantSymbol t2{3, 1.3, {{2, 1.0}}};
    hstar::KInvariantSymbol t4{3, 1.3, {{4, 1.0}}};
    CHECK(std::abs(hstar::inner_product(t2.embed(), t2.embed()) - 5.0) < 1e-15);
    CHECK(std::abs(hstar::inner_product(t2.embed(), t4.embed())) == 0.0);

    hstar::NormalStream rng(5);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 6, rng);
    const Complex self = hstar::inner_product(F, F);
    CHECK(std::abs(self.imag()) < 1e-15);
    CHECK(std::abs(self.real() - F.squared_norm()) < 1e-13);
}

TEST_CASE("involution is an isometric anti-automorphism with F** = F") {
    hstar::NormalStream rng(11);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 8, rng);
    const hstar::Symbol G = hstar::random_symbol(3, 1.3, 8, rng);

    const hstar::Symbol Fs = hstar::involution(F, ctx());
    CHECK(std::abs(Fs.norm() - F.norm()) < 1e-11);
    CHECK((hstar::involution(Fs, ctx()) - F).norm() < 1e-12);

    const hstar::Symbol lhs = hstar::involution(hstar::star_product(F, G, ctx()), ctx());
    const hstar::Symbol rhs =
        hstar::star_product(hstar::involution(G, ctx()), Fs, ctx());
    CHECK((lhs - rhs).norm() < 1e-11);
}

TEST_CASE("K-invariant idempotents are orthogonal self-adjoint projections") {
    for (int l : {0, 2, 6}) {
        const hstar::Symbol phi = hstar::k_invariant_idempotent(l, ctx()).embed();
        CHECK((hstar::star_product(phi, phi, ctx()) - phi).norm() < 1e-11);
        CHECK((hstar::involution(phi, ctx()) - phi).norm() < 1e-11);
        CHECK(std::abs(phi.squared_norm() - hstar::harmonic_dim(3, l)) <
              1e-10 * hstar::harmonic_dim(3, l));
    }
    const hstar::Symbol p2 = hstar::k_invariant_idempotent(2, ctx()).embed();
    const hstar::Symbol p4 = hstar::k_invariant_idempotent(4, ctx()).embed();
    CHECK(hstar::star_product(p2, p4, ctx()).norm() < 1e-15);
}

TEST_CASE("rank-one idempotents behave like minimal projections") {
    const Eigen::VectorXcd f = unit(5, 21);
    const hstar::Symbol E = hstar::idempotent_rank_one(2, f, ctx());
    CHECK((hstar::star_product(E, E, ctx()) - E).norm() < 1e-11);
    CHECK((hstar::involution(E, ctx()) - E).norm() < 1e-11);

    // Orthogonal vector in the same degree: the product vanishes.
    Eigen::VectorXcd g = unit(5, 22);
    g -= f.dot(g) * f;  // f.dot(g) = conj(f)^T g
    g /= g.norm();
    const hstar::Symbol Eg = hstar::idempotent_rank_one(2, g, ctx());
    CHECK(hstar::star_product(E, Eg, ctx()).norm() < 1e-13);

    // Different degree: annihilation by grading.
    const hstar::Symbol E4 = hstar::idempotent_rank_one(4, unit(9, 23), ctx());
    CHECK(hstar::star_product(E, E4, ctx()).norm() == 0.0);

    CHECK_THROWS_AS(hstar::idempotent_rank_one(2, 1.1 * f, ctx()),
                    hstar::NotNormalized);
    CHECK_THROWS_AS(hstar::idempotent_rank_one(4, f, ctx()), hstar::Error);
}

TEST_CASE("K-projection extracts the zonal coefficients") {
    hstar::KInvariantSymbol a{3, 1.3, {{0, {0.3, -0.1}}, {2, {2.0, 1.0}}, {6, {-0.25, 0.0}}}};
    hstar::Symbol F = a.embed();
    // Add off-diagonal and traceless noise that the projection must discard.
    F.set_block(2, 4, Eigen::MatrixXcd::Random(5, 9));
    Eigen::MatrixXcd traceless = Eigen::MatrixXcd::Random(5, 5);
    traceless -= (traceless.trace() / 5.0) * Eigen::MatrixXcd::Identity(5, 5);
    F.blocks[{2, 2}] += traceless;

    const hstar::KInvariantSymbol got = hstar::k_project(F);
    CHECK(got.values.size() == 3);
    CHECK(std::abs(got.values.at(0) - a.values.at(0)) == 0.0);
    CHECK(std::abs(got.values.at(2) - a.values.at(2)) < 1e-14);
    CHECK(std::abs(got.values.at(6) - a.values.at(6)) == 0.0);

    // Re-projection of an embedded projection is exact, bit for bit.
    const hstar::KInvariantSymbol twice = hstar::k_project(hstar::k_project(F).embed());
    for (const auto& [l, v] : got.values) CHECK(twice.values.at(l) == v);

    // Purely off-diagonal symbols project to nothing.
    hstar::Symbol off(3, 1.3);
    off.set_block(0, 2, Eigen::MatrixXcd::Random(1, 5));
    CHECK(hstar::k_project(off).values.empty());
}

TEST_CASE("truncated identity acts as a two-sided unit on covered degrees") {
    const hstar::Symbol I = hstar::truncated_identity({0, 2, 4}, ctx());
    hstar::NormalStream rng(31);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 4, rng);
    CHECK((hstar::star_product(I, F, ctx()) - F).norm() < 1e-11);
    CHECK((hstar::star_product(F, I, ctx()) - F).norm() < 1e-11);
    CHECK((hstar::star_product(I, I, ctx()) - I).norm() < 1e-11);
}

TEST_CASE("K-invariant symbols commute exactly") {
    hstar::NormalStream rng(41);
    for (int t = 0; t < 20; ++t) {
        const hstar::Symbol a = hstar::random_k_invariant(3, 1.3, 8, rng).embed();
        const hstar::Symbol b = hstar::random_k_invariant(3, 1.3, 8, rng).embed();
        const double res = (hstar::star_product(a, b, ctx()) -
                            hstar::star_product(b, a, ctx()))
                               .norm();
        CHECK(res == 0.0);
    }
}

TEST_CASE("hstar axioms hold on random triples") {
    hstar::NormalStream rng(1234);
    for (int t = 0; t < 5; ++t) {
        const auto c6 = hstar::CalculusContext::build(3, 1.3, 6);
        const hstar::Symbol F = hstar::random_symbol(3, 1.3, 6, rng);
        const hstar::Symbol G = hstar::random_symbol(3, 1.3, 6, rng);
        const hstar::Symbol H = hstar::random_symbol(3, 1.3, 6, rng);
        const auto rep = hstar::verify_hstar_axioms(F, G, H, c6);
        CHECK(rep.associativity < 1e-10);
        CHECK(rep.adjoint_pairing < 1e-10);
        CHECK(rep.involution_isometry < 1e-10);
        CHECK(rep.submultiplicativity < 1e-10);
        CHECK(rep.anti_homomorphism < 1e-10);
        CHECK(rep.nondegeneracy > 0.1);
    }
    // A single idempotent satisfies everything on the nose.
    const hstar::Symbol phi = hstar::k_invariant_idempotent(2, ctx()).embed();
    const auto rep = hstar::verify_hstar_axioms(phi, phi, phi, ctx());
    CHECK(rep.associativity < 1e-13);
    CHECK(rep.adjoint_pairing < 1e-12);
    CHECK(rep.anti_homomorphism < 1e-13);
}

TEST_CASE("matrix realization is a unitary picture of the algebra") {
    hstar::NormalStream rng(51);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 8, rng);
    const hstar::Symbol G = hstar::random_symbol(3, 1.3, 8, rng);

    const auto MF = hstar::matrix_realization(F, ctx());
    const auto MG = hstar::matrix_realization(G, ctx());
    CHECK(std::abs(MF.hs_norm() - F.norm()) < 1e-12);

    const auto lhs = hstar::matrix_realization(hstar::star_product(F, G, ctx()), ctx());
    CHECK((lhs - hstar::multiply(MF, MG)).hs_norm() < 1e-12);

    const auto adj = hstar::matrix_realization(hstar::involution(F, ctx()), ctx());
    CHECK((adj - hstar::adjoint(MF)).hs_norm() < 1e-12);

    // Idempotents realize as genuine projections.
    const hstar::Symbol phi = hstar::k_invariant_idempotent(4, ctx()).embed();
    const auto MP = hstar::matrix_realization(phi, ctx());
    CHECK((MP.blocks.at({4, 4}) - Eigen::MatrixXcd::Identity(9, 9)).norm() < 1e-13);
    const Eigen::VectorXcd f = unit(5, 52);
    const auto ME = hstar::matrix_realization(hstar::idempotent_rank_one(2, f, ctx()), ctx());
    CHECK((ME.blocks.at({2, 2}) - f * f.adjoint()).norm() < 1e-13);
}

TEST_CASE("column resolution by idempotents is complete at truncation") {
    hstar::NormalStream rng(61);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 8, rng);
    double resolved = 0.0;
    for (int l = 0; l <= 4; l += 2) {
        const hstar::Symbol phi = hstar::k_invariant_idempotent(l, ctx()).embed();
        resolved += hstar::star_product(F, phi, ctx()).squared_norm();
    }
    double restricted = 0.0;
    for (const auto& [k, b] : F.blocks)
        if (k.second <= 4) restricted += b.squaredNorm();
    CHECK(std::abs(resolved - restricted) < 1e-10);
}

TEST_CASE("rank-one idempotents generate minimal left ideals") {
    const Eigen::VectorXcd f = unit(5, 71);
    const auto rep = hstar::minimal_left_ideal_check(2, f, 20, ctx(), 9001);
    CHECK(rep.column_space_residual < 1e-11);
    CHECK(rep.scalar_multiple_residual < 1e-11);

    // E # R # E with R = E gives back E with scalar exactly one.
    const hstar::Symbol E = hstar::idempotent_rank_one(2, f, ctx());
    const hstar::Symbol ere =
        hstar::star_product(E, hstar::star_product(E, E, ctx()), ctx());
    CHECK((ere - E).norm() < 1e-11);

    // R supported away from the column degree annihilates against E.
    hstar::Symbol R(3, 1.3);
    R.set_block(4, 4, Eigen::MatrixXcd::Random(9, 9));
    CHECK(hstar::star_product(R, E, ctx()).norm() == 0.0);
}

TEST_CASE("empty symbols are legal absorbing elements") {
    const hstar::Symbol zero(3, 1.3);
    CHECK(zero.norm() == 0.0);
    hstar::NormalStream rng(81);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 4, rng);
    CHECK(hstar::star_product(zero, F, ctx()).blocks.empty());
    CHECK(hstar::star_product(F, zero, ctx()).blocks.empty());
    CHECK(hstar::involution(zero, ctx()).blocks.empty());
    CHECK(std::abs(hstar::inner_product(zero, F)) == 0.0);
}

TEST_CASE("simultaneous rotation of both legs commutes with the product") {
    const hstar::HarmonicBasis basis(3);
    const auto grid = hstar::build_grid(3, 16);
    hstar::NormalStream rng(91);
    const Eigen::Matrix3d R = hstar::random_rotation_matrix(rng);
    const hstar::Symbol F = hstar::random_symbol(3, 1.3, 8, rng);
    const hstar::Symbol G = hstar::random_symbol(3, 1.3, 8, rng);

    const hstar::Symbol RF = hstar::rotate_symbol(F, R, basis, grid);
    CHECK(std::abs(RF.norm() - F.norm()) < 1e-10);

    const hstar::Symbol lhs =
        hstar::rotate_symbol(hstar::star_product(F, G, ctx()), R, basis, grid);
    const hstar::Symbol rhs =
        hstar::star_product(RF, hstar::rotate_symbol(G, R, basis, grid), ctx());
    CHECK((lhs - rhs).norm() < 1e-9);

    // K-invariant symbols are fixed points of the rotation action.
    const hstar::Symbol phi = hstar::k_invariant_idempotent(4, ctx()).embed();
    CHECK((hstar::rotate_symbol(phi, R, basis, grid) - phi).norm() < 1e-10);
}
