#include <doctest.h>

#include "r13lab/errors.hpp"
#include "r13lab/slab_space.hpp"

using namespace r13;

TEST_CASE("dof counts per layout")
{
    const SlabSpace nm(SlabMesh{8, 2}, SlabLayout::nonmaxwell);
    CHECK(nm.field_size(0) == 16);
    CHECK(nm.field_size(1) == 17);
    CHECK(nm.field_size(2) == 15);
    CHECK(nm.n_dofs() == 16 + 15 + 11 * 17);
    const SlabSpace mx(SlabMesh{8, 2}, SlabLayout::maxwell);
    CHECK(mx.kind(1) == FieldKind::discontinuous);
    CHECK(mx.kind(3) == FieldKind::discontinuous);
    CHECK(mx.kind(2) == FieldKind::continuous_zero);
    CHECK(mx.kind(5) == FieldKind::continuous);
    CHECK_THROWS_AS(SlabSpace(SlabMesh{0, 2}, SlabLayout::nonmaxwell), ConfigError);
    CHECK_THROWS_AS(SlabSpace(SlabMesh{4, 3}, SlabLayout::nonmaxwell), ConfigError);
}

TEST_CASE("continuous bases form a partition of unity")
{
    for (int k : {1, 2}) {
        const SlabSpace s(SlabMesh{5, k}, SlabLayout::nonmaxwell);
        for (int e = 0; e < 5; ++e)
            for (double t : {0.0, 0.2, 0.5, 0.9, 1.0}) {
                const LocalBasis b = s.basis(1, e, t);
                double sum = 0.0, dsum = 0.0;
                for (std::size_t i = 0; i < b.dofs.size(); ++i) {
                    sum += b.value[i];
                    dsum += b.deriv[i];
                }
                CHECK(sum == doctest::Approx(1.0));
                CHECK(dsum == doctest::Approx(0.0).scale(1.0));
            }
    }
}

TEST_CASE("interpolation is exact for polynomials in the space")
{
    const SlabSpace s(SlabMesh{6, 2}, SlabLayout::maxwell);
    Eigen::VectorXd U = Eigen::VectorXd::Zero(s.n_dofs());
    auto quad = [](double x) { return 1.0 + 2.0 * x - 3.0 * x * x; };
    auto lin = [](double x) { return 0.5 - x; };
    s.interpolate_field(U, 5, quad);                                   // continuous P2
    s.interpolate_field(U, 1, lin);                                    // discontinuous P1
    s.interpolate_field(U, 2, [](double x) { return x * (1.0 - x); }); // zero at walls
    for (double x : {0.0, 0.13, 0.5, 0.77, 1.0}) {
        const auto [e, t] = s.locate(x);
        StateVector v, d;
        s.evaluate(U, e, t, v, d);
        CHECK(v.s(0) == doctest::Approx(quad(x)));
        CHECK(d.s(0) == doctest::Approx(2.0 - 6.0 * x));
        CHECK(v.theta == doctest::Approx(lin(x)));
        CHECK(d.theta == doctest::Approx(-1.0));
        CHECK(v.u(0) == doctest::Approx(x * (1.0 - x)).scale(1.0));
    }
    const StateVector w0 = s.wall_trace(U, 0), w1 = s.wall_trace(U, 1);
    CHECK(w0.theta == doctest::Approx(0.5));
    CHECK(w1.theta == doctest::Approx(-0.5));
    CHECK(w1.s(0) == doctest::Approx(0.0).scale(1.0));
    CHECK(w0.u(0) == 0.0);
}

TEST_CASE("locate and wall frames")
{
    const SlabSpace s(SlabMesh{4, 1}, SlabLayout::nonmaxwell);
    CHECK(s.locate(0.0).first == 0);
    CHECK(s.locate(1.0).first == 3);
    CHECK(s.locate(0.3).second == doctest::Approx(0.2));
    CHECK(wall_frame(0).n(0) == -1.0);
    CHECK(wall_frame(1).n(0) == 1.0);
    CHECK(wall_frame(1).orthonormality_defect() < 1e-15);
}

TEST_CASE("shifted Legendre polynomials are orthogonal on [0, 1]")
{
    const Rule1D g = gauss_legendre(4, 0.0, 1.0);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            double s = 0.0;
            for (std::size_t q = 0; q < g.size(); ++q) s += g.w[q] * shifted_legendre(i, g.x[q]) * shifted_legendre(j, g.x[q]);
            CHECK(s == doctest::Approx(i == j ? 1.0 / (2 * i + 1) : 0.0).scale(1.0));
        }
}
