#include <doctest.h>

#include "r13lab/slab_forms.hpp"
#include "support.hpp"

using namespace r13;

namespace {

struct Fixture {
    MolecularModel model = test::bundled("synthetic_identity");
    BoundaryCoeffs coeffs = boundary_coefficients(model);
    FormContext ctx{&model, &coeffs, 0.1};
};

double sym_defect(const Eigen::SparseMatrix<double>& A)
{
    return (Eigen::MatrixXd(A) - Eigen::MatrixXd(A).transpose()).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("diagonal forms assemble to symmetric matrices")
{
    Fixture fx;
    const SlabSpace s(SlabMesh{6, 2}, SlabLayout::nonmaxwell);
    const SlabForms F = assemble_forms(s, fx.ctx);
    for (Form f : {Form::a, Form::d, Form::f, Form::h}) {
        CAPTURE(form_name(f));
        CHECK(sym_defect(F[f]) < 1e-12);
    }
    CHECK(sym_defect(F.mass) < 1e-14);
}

TEST_CASE("assembly is bit-identical for any thread count")
{
    Fixture fx;
    const SlabSpace s(SlabMesh{13, 2}, SlabLayout::nonmaxwell);
    const SlabForms one = assemble_forms(s, fx.ctx, 1);
    for (int t : {2, 3, 8}) {
        const SlabForms many = assemble_forms(s, fx.ctx, t);
        for (int f = 0; f < kForms; ++f) {
            const Eigen::MatrixXd a(one.phi[f]), b(many.phi[f]);
            CHECK((a.array() == b.array()).all());
        }
    }
}

TEST_CASE("mass matrix and slot-0 integrals")
{
    Fixture fx;
    const SlabSpace s(SlabMesh{5, 2}, SlabLayout::nonmaxwell);
    const SlabForms F = assemble_forms(s, fx.ctx);
    Eigen::VectorXd U = Eigen::VectorXd::Zero(s.n_dofs());
    s.interpolate_field(U, 0, [](double) { return 1.0; });
    s.interpolate_field(U, 1, [](double) { return 2.0; });
    s.interpolate_field(U, 6, [](double x) { return x; });
    // int (1 + 1.5 * 4 + 0.4 x^2) dx = 7 + 0.4 / 3
    CHECK(U.dot(F.mass * U) == doctest::Approx(7.0 + 0.4 / 3.0));
    CHECK(F.slot0_mean.sum() == doctest::Approx(1.0));  // only P0 modes integrate to nonzero
}

TEST_CASE("volume forms on hand-built jets")
{
    Fixture fx;
    const auto& k = fx.model.k;
    StateVector v, d;
    d.theta = 2.0;
    const PointFeatures T = point_features(v, d);
    CHECK(form_volume(Form::h, T, T, fx.ctx) == doctest::Approx(1.5 * k[1] * 0.1 * 4.0));

    StateVector sv, sd;
    sd.s = Vec3(1.0, 0.0, 0.0);
    const PointFeatures S = point_features(sv, sd);
    // stf grad of s = (x, 0, 0) is diag(2/3, -1/3, -1/3) with norm^2 2/3.
    CHECK(form_volume(Form::a, S, S, fx.ctx) ==
          doctest::Approx(24.0 / 25.0 * k[7] * 0.1 * 2.0 / 3.0 + 0.8 * k[6] * 0.1));
    CHECK(form_volume(Form::b, T, S, fx.ctx) == doctest::Approx(0.0));
    StateVector th;
    th.theta = 3.0;
    CHECK(form_volume(Form::b, point_features(th, StateVector{}), S, fx.ctx) == doctest::Approx(3.0 * k[0]));
}

TEST_CASE("boundary forms use outward frame components")
{
    Fixture fx;
    const auto& c = fx.coeffs;
    StateVector X;
    X.s = Vec3(1.0, 2.0, 0.0);
    const Frame left = wall_frame(0);
    CHECK(form_boundary(Form::a, X, X, left, fx.ctx) == doctest::Approx(c.S[5] * 1.0 + c.S[1] * 4.0));
    StateVector th;
    th.theta = 1.0;
    CHECK(form_boundary(Form::b, th, X, left, fx.ctx) == doctest::Approx(-c.R[1]));
    CHECK(form_boundary(Form::b, th, X, wall_frame(1), fx.ctx) == doctest::Approx(c.R[1]));
    CHECK(form_boundary(Form::g, X, X, left, fx.ctx) == 0.0);
}

TEST_CASE("loads vanish for homogeneous data and match pointwise functionals")
{
    Fixture fx;
    const SlabSpace s(SlabMesh{4, 2}, SlabLayout::nonmaxwell);
    const LoadVectors z = assemble_loads(s, fx.ctx, WallData{});
    CHECK(z.L1.norm() + z.L2.norm() + z.L3.norm() + z.L4.norm() == 0.0);

    const WallData w = WallData::couette(0.5);
    const LoadVectors L = assemble_loads(s, fx.ctx, w);
    std::mt19937_64 rng(61);
    Eigen::VectorXd U(s.n_dofs());
    std::uniform_real_distribution<double> d(-1, 1);
    for (int i = 0; i < U.size(); ++i) U(i) = d(rng);
    WallLoads sum;
    for (int wl = 0; wl < 2; ++wl) {
        const WallLoads p = wall_loads(s.wall_trace(U, wl), wl, fx.ctx, w);
        sum.L1 += p.L1;
        sum.L3 += p.L3;
        sum.L4 += p.L4;
    }
    CHECK(L.L1.dot(U) == doctest::Approx(sum.L1));
    CHECK(L.L3.dot(U) == doctest::Approx(sum.L3));
    CHECK(L.L4.dot(U) == doctest::Approx(sum.L4));
    CHECK(WallData::couette(0.5).u[0][0] == -0.5);
}
