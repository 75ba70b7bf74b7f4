#include <doctest.h>

#include <random>

#include "r13lab/tensor_algebra.hpp"

using namespace r13;

namespace {

Mat3 random_mat(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = d(rng);
    return m;
}

Mat3 stf2m(const Mat3& a) { return stf2(a).full(); }

Tensor3 random_t3(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Tensor3 t;
    for (auto& v : t.v) v = d(rng);
    return t;
}

} // namespace

TEST_CASE("stf2 is symmetric, trace free and idempotent")
{
    std::mt19937_64 rng(1);
    for (int n = 0; n < 50; ++n) {
        const Mat3 a = random_mat(rng);
        const Mat3 s = stf2m(a);
        CHECK(std::abs(s.trace()) < 1e-14);
        CHECK((s - s.transpose()).norm() < 1e-14);
        CHECK((stf2m(s) - s).norm() < 1e-14);
    }
}

TEST_CASE("stf2 of the identity vanishes and keeps the deviator of a diagonal")
{
    CHECK(stf2m(Mat3::Identity()).norm() < 1e-15);
    Mat3 d = Mat3::Zero();
    d(0, 0) = 1.0;
    const Mat3 s = stf2m(d);
    CHECK(s(0, 0) == doctest::Approx(2.0 / 3.0));
    CHECK(s(1, 1) == doctest::Approx(-1.0 / 3.0));
    CHECK(s(2, 2) == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("Stf2 round trip through the full matrix")
{
    std::mt19937_64 rng(2);
    for (int n = 0; n < 20; ++n) {
        const Mat3 s = stf2m(random_mat(rng));
        CHECK((Stf2::from_full(s).full() - s).norm() < 1e-14);
    }
    Stf2 a = Stf2::from_full(stf2m(random_mat(rng)));
    Stf2 b = Stf2::from_full(stf2m(random_mat(rng)));
    CHECK(a.frob(b) == doctest::Approx(a.full().cwiseProduct(b.full()).sum()).epsilon(1e-14));
    CHECK((a + b).full().isApprox(a.full() + b.full()));
    CHECK((a - b).full().isApprox(a.full() - b.full()));
    CHECK((2.5 * a).full().isApprox(2.5 * a.full()));
}

TEST_CASE("stf3 is symmetric, traceless in every pair and idempotent")
{
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        const Tensor3 s = stf3(random_t3(rng));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    CHECK(std::abs(s(i, j, k) - s(j, i, k)) < 1e-14);
                    CHECK(std::abs(s(i, j, k) - s(i, k, j)) < 1e-14);
                }
        for (int k = 0; k < 3; ++k) {
            double tr = 0.0;
            for (int i = 0; i < 3; ++i) tr += s(i, i, k);
            CHECK(std::abs(tr) < 1e-14);
        }
        const Tensor3 ss = stf3(s);
        double diff = 0.0;
        for (int i = 0; i < 27; ++i) diff = std::max(diff, std::abs(ss.v[i] - s.v[i]));
        CHECK(diff < 1e-14);
    }
}

TEST_CASE("stf3 of a fully symmetric traceless tensor is the identity map")
{
    // x1 x2 x3 is harmonic, so its third-order coefficient tensor is already stf.
    Tensor3 t;
    const int p[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& q : p) t(q[0], q[1], q[2]) = 1.0 / 6.0;
    const Tensor3 s = stf3(t);
    for (int i = 0; i < 27; ++i) CHECK(s.v[i] == doctest::Approx(t.v[i]));
    CHECK(stf3_components(s).size() == 7);
}

TEST_CASE("slab gradients put the derivative in column 0")
{
    const Vec3 v(1.0, 2.0, 3.0), dv(0.5, -1.0, 2.0);
    const SlabVecGrad g = slab_grad_vec(v, dv);
    CHECK((g.grad.col(0) - dv).norm() == 0.0);
    CHECK(g.grad.col(1).norm() == 0.0);
    CHECK(g.grad.col(2).norm() == 0.0);
    CHECK((g.stf - stf2m(g.grad)).norm() < 1e-15);

    // div of an stf tensor in the slab is the x-derivative of its first row.
    const Stf2 s = Stf2::from_full(stf2m(Mat3::Identity() + Vec3(1, 2, 3) * Vec3(0, 1, 1).transpose()));
    const Stf2 ds = Stf2::from_full(stf2m(Vec3(1, 0, 2) * Vec3(1, 1, 0).transpose()));
    const SlabTensGrad tg = slab_grad_stf2(s, ds);
    CHECK((tg.div - ds.full().row(0).transpose()).norm() < 1e-15);
}

TEST_CASE("frame components at the two slab walls")
{
    const Frame left{Vec3(-1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    CHECK(left.orthonormality_defect() < 1e-15);
    const Vec3 s(1.0, 2.0, 3.0);
    const auto c = frame_components(s, left);
    CHECK(c.n == -1.0);
    CHECK(c.t1 == 2.0);
    CHECK(c.t2 == 3.0);
    CHECK(c.t(0) == 2.0);

    Mat3 m;
    m << 1, 2, 3, 2, -4, 5, 3, 5, 3;
    const auto sc = frame_components(Stf2::from_full(m), left);
    CHECK(sc.nn == doctest::Approx(1.0));
    CHECK(sc.nt1 == doctest::Approx(-2.0));
    CHECK(sc.nt2 == doctest::Approx(-3.0));
    CHECK(sc.t1t1 == doctest::Approx(-4.0));
    CHECK(sc.t2t2 == doctest::Approx(3.0));
    CHECK(sc.t1t2 == doctest::Approx(5.0));
}
