#include <doctest.h>

#include "r13lab/korn_verifier.hpp"

using namespace r13;

TEST_CASE("CK evaluation on hand-checked fields")
{
    CKField a;
    a.a = Vec3(1, 2, 3);
    CHECK((ck_eval(a, Vec3(0.3, 0.1, 0.9)) - a.a).norm() == 0.0);
    CKField b;
    b.b = Vec3(1, 0, 0);
    CHECK((ck_eval(b, Vec3(1, 0, 0)) - Vec3(1, 0, 0)).norm() < 1e-15);
    CHECK((ck_eval(b, Vec3(0, 1, 0)) - Vec3(-1, 0, 0)).norm() < 1e-15);
}

TEST_CASE("CK Jacobian matches central differences and has zero stf part")
{
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int n = 0; n < 20; ++n) {
        const CKField f = CKField::random_unit(rng);
        CHECK((f.A + f.A.transpose()).norm() < 1e-15);
        const Vec3 x(d(rng), d(rng), d(rng));
        const Mat3 J = ck_jacobian(f, x);
        Mat3 fd;
        const double h = 1e-5;
        for (int j = 0; j < 3; ++j) {
            Vec3 e = Vec3::Zero();
            e(j) = h;
            fd.col(j) = (ck_eval(f, x + e) - ck_eval(f, x - e)) / (2 * h);
        }
        CHECK((J - fd).norm() < 1e-8);
        CHECK(stf2(J).full().norm() < 1e-12);
    }
}

TEST_CASE("cube forms reproduce exact integrals")
{
    const CubeMesh mesh(2, 2);
    const CubeForms F = assemble_cube_forms(mesh);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(mesh.n_dofs()), x = c;
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        c(3 * i) = 1.0;
        x(3 * i) = mesh.node(i)(0);
    }
    CHECK(c.dot(F.L2 * c) == doctest::Approx(1.0));
    CHECK(std::abs(c.dot(F.stf * c)) < 1e-13);
    CHECK(c.dot(F.boundary * c) == doctest::Approx(6.0));
    CHECK(x.dot(F.stf * x) == doctest::Approx(2.0 / 3.0));
    CHECK(x.dot(F.H1 * x) == doctest::Approx(1.0 / 3.0 + 1.0));
    for (const Eigen::MatrixXd* m : {&F.L2, &F.boundary, &F.stf, &F.H1}) CHECK((*m - m->transpose()).norm() < 1e-12);

    CKField rot;
    rot.A(0, 1) = 1.0;
    rot.A(1, 0) = -1.0;
    const Eigen::VectorXd r = interpolate(mesh, rot);
    CHECK(std::abs(r.dot(F.stf * r)) < 1e-13);
}

TEST_CASE("interpolated CK fields lie in the discrete stf kernel on Q2")
{
    const CubeMesh mesh(2, 2);
    const CubeForms F = assemble_cube_forms(mesh);
    std::mt19937_64 rng(52);
    for (int n = 0; n < 10; ++n) {
        const Eigen::VectorXd u = interpolate(mesh, CKField::random_unit(rng));
        CHECK(u.dot(F.stf * u) <= 1e-13 * u.dot(F.H1 * u));  // roundoff level
    }
}

TEST_CASE("stf kernel dimension and positive Korn constants")
{
    const CubeMesh q2(2, 2);
    const KornReport r2 = korn_constants(q2, assemble_cube_forms(q2));
    CHECK(r2.stf_kernel_dim == 10);
    CHECK(r2.lambda_min_classical > 0.0);
    CHECK(r2.lambda_min_classical <= 1.0);
    CHECK(r2.lambda_min_boundary > 0.0);
    CHECK(r2.lambda_min_boundary <= 1.0);

    const CubeMesh q1(2, 1);
    const KornReport r1 = korn_constants(q1, assemble_cube_forms(q1));
    CHECK(r1.stf_kernel_dim >= 7);
    CHECK(r1.lambda_min_boundary > 0.0);
}

TEST_CASE("Korn constant does not grow under nested refinement")
{
    double prev = 2.0;
    for (int n : {1, 2, 3}) {
        const CubeMesh m(n, 2);
        const KornReport r = korn_constants(m, assemble_cube_forms(m), false, false);
        CHECK(r.lambda_min_boundary > 0.0);
        if (n != 3) CHECK(r.lambda_min_boundary <= prev + 1e-12);  // 1 -> 2 is nested
        prev = r.lambda_min_boundary;
    }
}

TEST_CASE("no nonzero CK field vanishes on the boundary")
{
    CHECK(ck_vanishing_check(CKField{}).boundary_norm2 == 0.0);
    CKField a;
    a.a = Vec3(1, 0, 0);
    CHECK(ck_vanishing_check(a).boundary_norm2 == doctest::Approx(6.0));
    const CKStudy s = ck_random_study(100, 7);
    CHECK(s.samples == 100);
    CHECK(s.min_boundary_norm2 > 1e-3);
    CHECK(s.max_stf_residual <= 1e-12);
}

TEST_CASE("mesh connectivity")
{
    const CubeMesh m(2, 2);
    CHECK(m.nodes_per_axis() == 5);
    CHECK(m.n_nodes() == 125);
    CHECK(m.element_nodes(1, 1, 1).size() == 27);
    CHECK((m.node(m.n_nodes() - 1) - Vec3(1, 1, 1)).norm() < 1e-15);
}
