#include <doctest.h>

#include <cmath>

#include "r13lab/errors.hpp"
#include "r13lab/onsager_coefficients.hpp"
#include "r13lab/synthetic_models.hpp"
#include "support.hpp"

using namespace r13;

namespace {

const char* kNonMaxwell[] = {"eta7", "eta10", "eta17", "etainf", "synthetic_identity"};

} // namespace

TEST_CASE("coefficients of bundled models reproduce their construction targets")
{
    const SyntheticTargets t;
    for (const char* name : kNonMaxwell) {
        CAPTURE(name);
        const MolecularModel m = test::bundled(name);
        const BoundaryCoeffs c = boundary_coefficients(m);
        for (int i : {1, 2, 3, 4, 6, 8}) CHECK(c.S[i] == doctest::Approx(t.S[i]).epsilon(1e-10));
        for (int i = 1; i <= 4; ++i) CHECK(c.R[i] == doctest::Approx(t.R[i]).epsilon(1e-10));
        CHECK(c.T1 == doctest::Approx(t.T1).epsilon(1e-10));
        CHECK(c.T2 == doctest::Approx(t.T2).epsilon(1e-10));
        // S5 and S7 follow from C1 and C6 alone.
        CHECK(c.S[5] == doctest::Approx(2.0 * t.C[1] / (5.0 * m.chi_tilde)));
        CHECK(c.S[7] == doctest::Approx(t.C[6] / (2.0 * m.chi_tilde)));
        CHECK(c.L1_theta == doctest::Approx(-0.4 * t.C[1] * m.m(1, 1)));
        for (int i = 1; i <= 7; ++i) CHECK(c.constants.C[i] == doctest::Approx(t.C[i]));
        CHECK(c.constants.consistent());
        CHECK(c.matching.consistent());
        CHECK(c.matching.alpha2 == doctest::Approx(t.alpha2));
        CHECK(c.matching.beta2 == doctest::Approx(t.beta2));
    }
}

TEST_CASE("equilibrium compatibility: R1 + k0 = -L1 coefficient")
{
    for (const char* name : {"eta7", "maxwell", "synthetic_identity"}) {
        const MolecularModel m = test::bundled(name);
        const BoundaryCoeffs c = boundary_coefficients(m);
        CHECK(c.R[1] + m.k[0] == doctest::Approx(-c.L1_theta));
    }
}

TEST_CASE("Maxwell limit zeroes the cross coefficients")
{
    const BoundaryCoeffs c = boundary_coefficients(test::bundled("maxwell"));
    for (double v : {c.S[2], c.S[4], c.T1, c.T2, c.R[1], c.R[4]}) CHECK(std::abs(v) < 1e-14);
    CHECK(validate_boundary_psd(c).pass());
    CHECK(audit_duplicates(c).pass());
}

TEST_CASE("positivity and path-agreement audits pass on every bundled model")
{
    for (const char* name : {"eta7", "eta10", "eta17", "etainf", "maxwell", "synthetic_identity"}) {
        CAPTURE(name);
        const BoundaryCoeffs c = boundary_coefficients(test::bundled(name));
        const BoundaryAudit a = validate_boundary_psd(c);
        CHECK(a.pass());
        CHECK(a.items.size() == 12);
        CHECK(audit_duplicates(c).pass());
        // Eigenvalues of the 2x2 blocks, computed independently.
        const double tr = c.S[1] + c.S[2], det = c.S[1] * c.S[2] - c.T1 * c.T1;
        CHECK(a.block1_eigs[0] == doctest::Approx(0.5 * (tr - std::sqrt(tr * tr - 4 * det))).scale(1.0));
    }
}

TEST_CASE("audits detect violations")
{
    BoundaryCoeffs c = boundary_coefficients(test::bundled("eta7"));
    c.T1 = 1.0;  // T1^2 > S1 S2
    const BoundaryAudit a = validate_boundary_psd(c);
    CHECK_FALSE(a.pass());
    c = boundary_coefficients(test::bundled("eta7"));
    c.S[3] = -1e-6;
    CHECK_FALSE(validate_boundary_psd(c).pass());
    c = boundary_coefficients(test::bundled("eta7"));
    c.T2_tilde *= 1.0 + 1e-8;
    CHECK_FALSE(audit_duplicates(c).pass());
}

TEST_CASE("inconsistent data is reported")
{
    MolecularModel m = test::bundled("eta7");
    m.m(2, 4) *= 1.01;  // breaks one of the C4 ratios
    CHECK_FALSE(proportionality_constants(m).consistent());

    MolecularModel s = test::bundled("eta7");
    s.m(4, 7) = 1.0;
    s.m(5, 7) = 1.0;
    s.m(4, 8) = 1.0;
    s.m(5, 8) = 1.0;
    CHECK_THROWS_AS(matching_solve(s), SolverError);

    MolecularModel z = test::bundled("eta7");
    for (int k = 3; k <= 5; ++k) z.m(1, k) = 0.0;
    CHECK_THROWS_AS(proportionality_constants(z), DataError);
}

TEST_CASE("matching system solved by hand")
{
    // Identity tangential block: (alpha1, beta1) = (k4, 24 k7 / 25).
    const MolecularModel m = test::bundled("synthetic_identity");
    const MatchingSolution s = matching_solve(m);
    CHECK(s.alpha1 == doctest::Approx(m.k[4]));
    CHECK(s.beta1 == doctest::Approx(24.0 * m.k[7] / 25.0));
    CHECK(s.alpha3 == doctest::Approx(m.k[3]));
    CHECK(s.beta3 == doctest::Approx(m.k[4]));
    CHECK(s.condition == doctest::Approx(1.0));
}
