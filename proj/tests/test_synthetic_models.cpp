#include <doctest.h>

#include <random>

#include "r13lab/errors.hpp"
#include "r13lab/onsager_coefficients.hpp"
#include "r13lab/synthetic_models.hpp"
#include "support.hpp"

using namespace r13;

TEST_CASE("published k rows")
{
    const auto k = published_k("10");
    CHECK(k[1] == 8.7436e-3);
    CHECK(k[10] == 1.1896e-6);
    CHECK(k[0] == 1.0);
    CHECK_THROWS_AS(published_k("12"), ConfigError);
    CHECK(maxwell_k()[10] == 0.0);
}

TEST_CASE("bundled files equal a fresh generation")
{
    const SyntheticTargets t;
    const MolecularModel fresh = make_consistent_model("eta7", 7.0, false, published_k("7"), 1.0, 1.0, t);
    const MolecularModel file = test::bundled("eta7");
    for (int j = 1; j <= 8; ++j)
        for (int c = 1; c <= 9; ++c)
            if (MTable::used(j, c)) CHECK(fresh.m(j, c) == file.m(j, c));
}

TEST_CASE("random targets are reproduced exactly")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> d(0.05, 0.9);
    for (int n = 0; n < 25; ++n) {
        SyntheticTargets t;
        for (int i : {1, 2, 3, 4, 6, 8}) t.S[i] = d(rng);
        t.T1 = 0.5 * d(rng);
        t.T2 = 0.5 * d(rng);
        for (int i = 1; i <= 4; ++i) t.R[i] = d(rng) - 0.5;
        for (int i = 1; i <= 7; ++i) t.C[i] = 0.5 + d(rng);
        t.alpha2 = d(rng);
        t.beta2 = d(rng);
        const MolecularModel m = make_consistent_model("r", 7.0, false, identity_test_k(), 1.0, 1.0, t);
        const BoundaryCoeffs c = boundary_coefficients(m);
        for (int i : {1, 2, 3, 4, 6, 8}) CHECK(c.S[i] == doctest::Approx(t.S[i]).epsilon(1e-9));
        for (int i = 1; i <= 4; ++i) CHECK(c.R[i] == doctest::Approx(t.R[i]).epsilon(1e-9).scale(1.0));
        CHECK(c.T1 == doctest::Approx(t.T1).epsilon(1e-9));
        CHECK(c.T2 == doctest::Approx(t.T2).epsilon(1e-9));
        CHECK(audit_duplicates(c).pass());
    }
}

TEST_CASE("unreachable targets are rejected")
{
    SyntheticTargets t;  // S4 != 0 but k1 = k2 = 0
    CHECK_THROWS_AS(make_consistent_model("bad", 5.0, true, maxwell_k(), 1.0, 1.0, t), ConfigError);
}
