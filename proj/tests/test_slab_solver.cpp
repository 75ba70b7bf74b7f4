#include <doctest.h>

#include "r13lab/errors.hpp"
#include "r13lab/slab_solver.hpp"
#include "support.hpp"

using namespace r13;

namespace {

SteadyProblem problem(const std::string& model, int n, WallData w)
{
    SteadyProblem p;
    p.model = test::bundled(model);
    p.mesh = SlabMesh{n, 2};
    p.wall = w;
    return p;
}

double max_flux(const SteadySolution& s)
{
    double m = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const StateVector v = s.at(i / 40.0);
        m = std::max({m, v.u.cwiseAbs().maxCoeff(), v.s.cwiseAbs().maxCoeff(), v.sigma.full().cwiseAbs().maxCoeff()});
    }
    return m;
}

} // namespace

TEST_CASE("uniform wall temperature gives the exact equilibrium")
{
    for (const char* model : {"eta7", "etainf", "maxwell", "synthetic_identity"}) {
        CAPTURE(model);
        const SteadySolution s = solve_steady(problem(model, 16, WallData::uniform_temperature(0.3)));
        CHECK(max_flux(s) <= 1e-10);
        for (double x : {0.0, 0.4, 1.0}) {
            CHECK(s.at(x).theta == doctest::Approx(0.3).epsilon(1e-10));
            CHECK(s.at(x).pressure() == doctest::Approx(0.0).scale(1e-10));
        }
        CHECK(s.monitors.residual <= 1e-8);
    }
}

TEST_CASE("zero data gives the zero solution and zero monitors")
{
    const SteadySolution s = solve_steady(problem("eta7", 8, WallData{}));
    CHECK(s.U.norm() == 0.0);
    CHECK(s.monitors.energy == 0.0);
    CHECK(s.monitors.W1 == 0.0);
    CHECK(s.monitors.I_bdry == 0.0);
}

TEST_CASE("Couette flow: antisymmetric slip profile pinned against a finer solve")
{
    for (const char* model : {"eta7", "maxwell"}) {
        CAPTURE(model);
        const SteadySolution s = solve_steady(problem(model, 32, WallData::couette(0.5)));
        const SteadySolution f = solve_steady(problem(model, 128, WallData::couette(0.5)));
        const double u0 = s.at(0.0).u(1);
        CHECK(std::abs(u0) < 0.5);
        CHECK(u0 < 0.0);
        double num = 0.0, den = 0.0;
        // Sample off the element interfaces, where discontinuous fields are one-sided.
        for (int i = 0; i < 100; ++i) {
            const double x = (i + 0.37) / 100.0;
            CHECK(s.at(x).u(1) == doctest::Approx(-s.at(1.0 - x).u(1)).scale(1.0).epsilon(1e-9));
            num += std::pow(s.at(x).u(1) - f.at(x).u(1), 2);
            den += std::pow(f.at(x).u(1), 2);
        }
        CHECK(std::sqrt(num / den) < 0.02);
        CHECK(s.monitors.identity_defect <= 1e-8 * (1.0 + s.monitors.energy));
    }
}

TEST_CASE("energy identity on random wall data")
{
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (const char* model : {"eta10", "maxwell", "synthetic_identity"}) {
        for (int n = 0; n < 3; ++n) {
            WallData w;
            w.theta = {d(rng), d(rng)};
            w.u[0] = {d(rng), d(rng)};
            w.u[1] = {d(rng), d(rng)};
            const SteadySolution s = solve_steady(problem(model, 12, w));
            CHECK(s.monitors.identity_defect <= 1e-8 * (1.0 + s.monitors.energy));
            CHECK(s.monitors.W1 <= 1e-12);
        }
    }
}

TEST_CASE("formulation selection")
{
    SteadyProblem p = problem("maxwell", 8, WallData::couette(0.5));
    CHECK(solve_steady(p).formulation == Formulation::maxwell);
    p.formulation = Formulation::nonmaxwell;
    // The non-Maxwell grouping loses coercivity for Maxwell data but the
    // saddle system itself may still be solvable; only check it runs or
    // reports a solver failure.
    try {
        (void)solve_steady(p);
    } catch (const SolverError&) {
    }
    CHECK(parse_formulation("auto") == Formulation::automatic);
    CHECK_THROWS_AS(parse_formulation("other"), ConfigError);
    CHECK_THROWS_AS(parse_scheme("rk4"), ConfigError);
}

TEST_CASE("implicit Euler is dissipative, conservative and contracting")
{
    const SlabAssembly as = make_assembly(test::bundled("eta7"), 0.1, SlabMesh{16, 2}, SlabLayout::nonmaxwell);
    const TransientStepper st(as, 0.05, TimeScheme::implicit_euler);
    std::mt19937_64 rng(72);
    Eigen::VectorXd U = random_dofs(as.space, rng);
    const SolveMonitors m0 = st.monitors(U);
    double prev = m0.energy;
    for (int n = 0; n < 50; ++n) {
        U = st.step(U);
        const SolveMonitors m = st.monitors(U);
        CHECK(m.energy <= prev + 1e-12 * m0.energy);
        CHECK(m.W1 <= 1e-12);
        CHECK(m.I_bdry >= -1e-12 * m0.energy);
        CHECK(m.mass == doctest::Approx(m0.mass).epsilon(1e-10).scale(1.0));
        prev = m.energy;
    }
    CHECK(prev < m0.energy);
}

TEST_CASE("Crank-Nicolson energy within slack")
{
    const SlabAssembly as = make_assembly(test::bundled("synthetic_identity"), 0.1, SlabMesh{8, 2},
                                          SlabLayout::nonmaxwell);
    const TransientStepper st(as, 0.02, TimeScheme::crank_nicolson);
    std::mt19937_64 rng(73);
    Eigen::VectorXd U = random_dofs(as.space, rng);
    const double E0 = st.monitors(U).energy;
    double prev = E0;
    for (int n = 0; n < 40; ++n) {
        U = st.step(U);
        const double E = st.monitors(U).energy;
        CHECK(E <= prev + 1e-10 * E0);
        prev = E;
    }
}

TEST_CASE("transient operator: skew coupling does not change the energy form")
{
    const SlabAssembly as = make_assembly(test::bundled("eta17"), 0.1, SlabMesh{6, 2}, SlabLayout::nonmaxwell);
    const Eigen::SparseMatrix<double> K = transient_operator(as), A = steady_bilinear(as);
    std::mt19937_64 rng(74);
    const Eigen::VectorXd U = random_dofs(as.space, rng);
    CHECK(U.dot(K * U) == doctest::Approx(U.dot(A * U)).epsilon(1e-12));
    CHECK_THROWS_AS(TransientStepper(as, 0.0, TimeScheme::implicit_euler), ConfigError);
}

TEST_CASE("coercivity contrast and inf-sup")
{
    const SlabAssembly a7 = make_assembly(test::bundled("eta7"), 0.1, SlabMesh{8, 2}, SlabLayout::nonmaxwell);
    const CoercivityReport c = coercivity_probe(a7);
    CHECK(c.min_eig > 0.0);
    CHECK(c.bubble_value > 0.0);

    const SlabAssembly mx = make_assembly(test::bundled("maxwell"), 0.1, SlabMesh{8, 2}, SlabLayout::nonmaxwell);
    const CoercivityReport cm = coercivity_probe(mx);
    CHECK(cm.bubble_value == 0.0);
    CHECK(cm.bubble_norm > 0.0);

    const InfSupReport is = infsup_probe(a7);
    CHECK(std::abs(is.null_eig) < 1e-10);
    CHECK(is.beta > 0.1);
}

TEST_CASE("self-convergence of the Maxwell Couette problem")
{
    SteadyProblem p = problem("maxwell", 8, WallData::couette(0.5));
    const ConvergenceReport r = convergence_study(p, {4, 8, 16}, 64);
    REQUIRE(r.levels.size() == 3);
    CHECK(r.monotone(1.5));
    CHECK(r.levels[2].rate > 1.5);
    CHECK_THROWS_AS(convergence_study(p, {3}, 64), ConfigError);
}
