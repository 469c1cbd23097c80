#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>

#include "hstar/quadrature.hpp"

namespace {

// Normalized-measure monomial moments on S^{n-1}:
//   int x1^{a1} ... xn^{an} ds = prod (ai - 1)!! / prod_{k=0}^{s-1} (n + 2k),
// s = (sum ai)/2, zero when any exponent is odd. This closed form is the
// oracle every grid check below is frozen against.
double sphere_moment(int n, std::array<int, 3> a) {
    int s2 = 0;
    double num = 1.0;
    for (int i = 0; i < 3; ++i) {
        if (a[i] % 2 != 0) return 0.0;
        s2 += a[i];
        for (int j = a[i] - 1; j >= 1; j -= 2) num *= j;
    }
    double den = 1.0;
    for (int k = 0; k < s2 / 2; ++k) den *= n + 2 * k;
    return num / den;
}

double monomial(const std::array<double, 3>& x, std::array<int, 3> a) {
    double v = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < a[i]; ++j) v *= x[i];
    return v;
}

} // namespace

TEST_CASE("moment oracle sanity") {
    CHECK(sphere_moment(3, {0, 0, 0}) == 1.0);
    CHECK(sphere_moment(3, {2, 0, 0}) == 1.0 / 3);
    CHECK(sphere_moment(3, {0, 0, 4}) == 3.0 / 15);
    CHECK(sphere_moment(3, {2, 2, 0}) == 1.0 / 15);
    CHECK(sphere_moment(3, {1, 0, 0}) == 0.0);
}

TEST_CASE("grid weights are positive and sum to one") {
    for (int p : {2, 8, 24}) {
        const auto g = hstar::build_grid(3, p);
        double tot = 0.0;
        for (double w : g.weights) {
            CHECK(w > 0.0);
            tot += w;
        }
        CHECK(std::abs(tot - 1.0) < 1e-14);
        for (const auto& x : g.nodes)
            CHECK(std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1.0) < 1e-14);
    }
}

TEST_CASE("build_grid rejects unsupported dimensions") {
    CHECK_THROWS_AS(hstar::build_grid(4, 8), hstar::UnsupportedDimension);
    CHECK_THROWS_AS(hstar::build_grid(2, 8), hstar::UnsupportedDimension);
}

TEST_CASE("monomial moments are exact up to the stated degree") {
    for (int p : {2, 8, 20}) {
        const auto g = hstar::build_grid(3, p);
        for (int a = 0; a + 0 <= p; a += 2)
            for (int b = 0; a + b <= p; b += 2)
                for (int c = 0; a + b + c <= p; c += 2) {
                    const std::array<int, 3> e{a, b, c};
                    const double got =
                        hstar::integrate(g, [&](const std::array<double, 3>& x) {
                            return monomial(x, e);
                        });
                    CHECK(std::abs(got - sphere_moment(3, e)) < 1e-14);
                }
    }
}

TEST_CASE("odd monomials integrate to zero") {
    const auto g = hstar::build_grid(3, 12);
    for (std::array<int, 3> e : {std::array<int, 3>{1, 0, 0}, {0, 3, 0}, {1, 1, 1},
                                 {2, 1, 0}, {5, 0, 2}}) {
        const double got = hstar::integrate(
            g, [&](const std::array<double, 3>& x) { return monomial(x, e); });
        CHECK(std::abs(got) < 1e-15);
    }
}

TEST_CASE("random even polynomial of degree 20 matches the oracle") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> rc(-1.0, 1.0);
    struct Term {
        std::array<int, 3> e;
        double c;
    };
    std::vector<Term> terms;
    double want = 0.0;
    for (int a = 0; a <= 20; a += 2)
        for (int b = 0; a + b <= 20; b += 2)
            for (int c = 0; a + b + c <= 20; c += 2) {
                const double coef = rc(gen);
                terms.push_back({{a, b, c}, coef});
                want += coef * sphere_moment(3, {a, b, c});
            }
    const auto g = hstar::build_grid(3, 20);
    const double got = hstar::integrate(g, [&](const std::array<double, 3>& x) {
        double v = 0.0;
        for (const auto& t : terms) v += t.c * monomial(x, t.e);
        return v;
    });
    CHECK(std::abs(got - want) < 1e-11);
}

TEST_CASE("non-polynomial integrand converges: integral of |x1| is 1/2") {
    const auto g = hstar::build_grid(3, 768);
    const double got = hstar::integrate(
        g, [](const std::array<double, 3>& x) { return std::abs(x[0]); });
    CHECK(std::abs(got - 0.5) < 1e-6);
}

TEST_CASE("grid is invariant under rotation about the polar axis at matching order") {
    // f(x) and f(R x) integrate identically for a polar rotation by one
    // azimuth step; for a generic rotation the two integrals agree because
    // both equal the exact value for polynomial f.
    const auto g = hstar::build_grid(3, 10);
    const double c = std::cos(0.7), s = std::sin(0.7);
    auto f = [](const std::array<double, 3>& x) {
        return x[0] * x[0] * x[2] * x[2] + x[1] * x[1] * x[1] * x[1];
    };
    auto fr = [&](const std::array<double, 3>& x) {
        const std::array<double, 3> y{c * x[0] - s * x[1], s * x[0] + c * x[1], x[2]};
        return f(y);
    };
    const double a = hstar::integrate(g, f);
    const double b = hstar::integrate(g, fr);
    CHECK(std::abs(a - b) < 1e-14);
}
