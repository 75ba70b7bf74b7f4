#include <doctest.h>

#include <cmath>
#include <numbers>

#include "r13lab/errors.hpp"
#include "r13lab/kinetic_basis.hpp"

using namespace r13;

namespace {

// Expected <psi_A^n, psi_B^m> for the stf blocks, independent of any basis code.
double expected_inner(const BasisIndex& a, const BasisIndex& b)
{
    if (a.l != b.l || a.n != b.n) return 0.0;
    auto d = [](int i, int j) { return i == j ? 1.0 : 0.0; };
    switch (a.l) {
    case 0: return 1.0;
    case 1: return d(a.axes[0], b.axes[0]) / 3.0;
    default: {
        const int i = a.axes[0], j = a.axes[1], k = b.axes[0], l = b.axes[1];
        return (d(i, k) * d(j, l) + d(i, l) * d(j, k) - 2.0 / 3.0 * d(i, j) * d(k, l)) / 15.0;
    }
    }
}

std::vector<BasisIndex> all_indices(int nmax, int lmax)
{
    std::vector<BasisIndex> out;
    for (int n = 0; n <= nmax; ++n)
        for (int l = 0; l <= lmax; ++l) {
            if (l == 0) out.push_back({n, 0, {}});
            if (l == 1)
                for (int i = 0; i < 3; ++i) out.push_back({n, 1, {i}});
            if (l == 2)
                for (int i = 0; i < 3; ++i)
                    for (int j = i; j < 3; ++j) out.push_back({n, 2, {i, j}});
        }
    return out;
}

} // namespace

TEST_CASE("normalized Laguerre polynomials: low orders in closed form")
{
    // With the normalization <psi^n, psi^m> = delta, L^(1/2)_1 = -(x - 3/2) sqrt(2/3).
    for (double x : {0.0, 0.3, 1.7, 4.0}) {
        CHECK(normalized_laguerre(0, 0, x) == doctest::Approx(1.0));
        CHECK(normalized_laguerre(1, 0, x) == doctest::Approx((1.5 - x) * std::sqrt(2.0 / 3.0)));
    }
}

TEST_CASE("basis orthogonality relations for n, m <= 3 and l <= 2")
{
    const auto q = VelocityQuadrature::tensor_hermite(20);
    const auto idx = all_indices(3, 2);
    double worst = 0.0;
    for (const auto& a : idx)
        for (const auto& b : idx) {
            const auto r = weighted_inner([&](const Vec3& x) { return psi_eval(a, x); },
                                          [&](const Vec3& x) { return psi_eval(b, x); }, q, 2 * a.n + a.l,
                                          2 * b.n + b.l);
            CHECK_FALSE(r.inexact);
            worst = std::max(worst, std::abs(r.value - expected_inner(a, b)));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("inner products flag insufficient quadrature")
{
    const auto q = VelocityQuadrature::tensor_hermite(3);
    const auto r = weighted_inner([](const Vec3&) { return 1.0; }, [](const Vec3&) { return 1.0; }, q, 4, 4);
    CHECK(r.inexact);
}

TEST_CASE("kinetic energy equals the mass-weighted state norm")
{
    const auto q = VelocityQuadrature::tensor_hermite(8);
    std::mt19937_64 rng(31);
    for (int n = 0; n < 30; ++n) {
        const StateVector U = StateVector::random(rng);
        CHECK(kinetic_energy(U, q) == doctest::Approx(mass_inner(U, U)).epsilon(1e-12));
    }
}

TEST_CASE("moment extraction inverts the truncated distribution")
{
    const auto q = VelocityQuadrature::tensor_hermite(8);
    std::mt19937_64 rng(32);
    for (int n = 0; n < 10; ++n) {
        const StateVector U = StateVector::random(rng);
        const TruncatedDistribution f = tilde_f_from_state(U);
        const MomentResult m = moment_extract([&](const Vec3& x) { return f(x); }, q, f.degree());
        CHECK_FALSE(m.inexact);
        const auto a = U.to_array(), b = m.U.to_array();
        for (int i = 0; i < 13; ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("closure files: normalization check")
{
    const PhiClosure c = PhiClosure::single_term();
    CHECK(c.c1_norm2() == doctest::Approx(7.5));
    CHECK(c.c2_norm2() == doctest::Approx(15.0));
    const PhiClosure two = PhiClosure::from_json_text(R"({"c1": [-2.0, 1.8708286933869707], "c2": [3.0, 2.449489742783178]})");
    CHECK(two.c1_norm2() == doctest::Approx(7.5));
    CHECK(two.polynomial_degree() == 5);
    CHECK_THROWS_AS(PhiClosure::from_json_text(R"({"c1": [1.0], "c2": [1.0]})"), DataError);

    // Energy equivalence does not depend on how the closure norm is split.
    const auto q = VelocityQuadrature::tensor_hermite(10);
    std::mt19937_64 rng(33);
    const StateVector U = StateVector::random(rng);
    CHECK(kinetic_energy(U, q, two) == doctest::Approx(mass_inner(U, U)).epsilon(1e-12));
}

TEST_CASE("wall density for a pure density perturbation")
{
    const Frame f{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    StateVector U;
    U.rho = 0.8;
    // sqrt(2 pi) <(xi.n)_+, rho> = rho, so rho_W = rho - theta_W / 2.
    CHECK(wall_density(U, 0.4, f) == doctest::Approx(0.8 - 0.2));
    CHECK(wall_density(StateVector{}, 0.0, f) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("stf monomials are trace free")
{
    const Vec3 xi(0.3, -1.2, 2.0);
    double tr = 0.0;
    for (int i = 0; i < 3; ++i) tr += stf_monomial(2, {i, i}, xi);
    CHECK(std::abs(tr) < 1e-14);
    CHECK_THROWS_AS(stf_monomial(3, {0, 0, 0}, xi), ConfigError);
}
