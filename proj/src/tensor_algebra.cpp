#include "r13lab/tensor_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace r13 {

double Tensor3::dot(const Tensor3& other) const
{
    double acc = 0.0;
    for (int i = 0; i < 27; ++i) acc += v[i] * other.v[i];
    return acc;
}

Mat3 Stf2::full() const
{
    Mat3 m;
    m << c[0], c[2], c[3],
         c[2], c[1], c[4],
         c[3], c[4], -c[0] - c[1];
    return m;
}

Stf2 Stf2::from_full(const Mat3& m)
{
    return Stf2{{m(0, 0), m(1, 1), m(0, 1), m(0, 2), m(1, 2)}};
}

double Stf2::frob(const Stf2& o) const
{
    const double s33 = -c[0] - c[1];
    const double o33 = -o.c[0] - o.c[1];
    return c[0] * o.c[0] + c[1] * o.c[1] + s33 * o33
         + 2.0 * (c[2] * o.c[2] + c[3] * o.c[3] + c[4] * o.c[4]);
}

Stf2 operator+(const Stf2& a, const Stf2& b)
{
    Stf2 r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Stf2 operator-(const Stf2& a, const Stf2& b)
{
    Stf2 r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Stf2 operator*(double s, const Stf2& a)
{
    Stf2 r;
    for (int i = 0; i < 5; ++i) r.c[i] = s * a.c[i];
    return r;
}

Stf2 stf2(const Mat3& a)
{
    const Mat3 sym = 0.5 * (a + a.transpose());
    const double tr = a.trace() / 3.0;
    return Stf2::from_full(sym - tr * Mat3::Identity());
}

Tensor3 stf3(const Tensor3& b)
{
    // Full symmetrization over the six index permutations.
    Tensor3 s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                s(i, j, k) = (b(i, j, k) + b(i, k, j) + b(j, i, k)
                              + b(j, k, i) + b(k, i, j) + b(k, j, i)) / 6.0;

    // For a fully symmetric tensor all three single contractions coincide.
    Vec3 tr = Vec3::Zero();
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) tr(i) += s(i, l, l);

    Tensor3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double corr = 0.0;
                if (j == k) corr += tr(i);
                if (i == k) corr += tr(j);
                if (i == j) corr += tr(k);
                out(i, j, k) = s(i, j, k) - corr / 5.0;
            }
    return out;
}

std::array<double, 7> stf3_components(const Tensor3& t)
{
    return {t(0, 0, 0), t(0, 0, 1), t(0, 0, 2), t(0, 1, 1),
            t(0, 1, 2), t(1, 1, 1), t(1, 1, 2)};
}

SlabVecGrad slab_grad_vec(const Vec3& /*values*/, const Vec3& dx)
{
    SlabVecGrad g;
    g.grad.setZero();
    g.grad.col(0) = dx;
    const Stf2 s = stf2(g.grad);
    g.stf = s.full();
    return g;
}

SlabTensGrad slab_grad_stf2(const Stf2& /*values*/, const Stf2& dx)
{
    SlabTensGrad g;
    const Mat3 d = dx.full();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.grad(i, j, 0) = d(i, j);
    g.stf = stf3(g.grad);
    g.div = d.col(0);
    return g;
}

double Frame::orthonormality_defect() const
{
    Mat3 q;
    q.col(0) = n;
    q.col(1) = t1;
    q.col(2) = t2;
    return (q.transpose() * q - Mat3::Identity()).cwiseAbs().maxCoeff();
}

VecFrameComponents frame_components(const Vec3& v, const Frame& f)
{
    return {v.dot(f.n), v.dot(f.t1), v.dot(f.t2)};
}

Stf2FrameComponents frame_components(const Stf2& s, const Frame& f)
{
    const Mat3 m = s.full();
    Stf2FrameComponents c;
    c.nn = f.n.dot(m * f.n);
    c.nt1 = f.n.dot(m * f.t1);
    c.nt2 = f.n.dot(m * f.t2);
    c.t1t1 = f.t1.dot(m * f.t1);
    c.t2t2 = f.t2.dot(m * f.t2);
    c.t1t2 = f.t1.dot(m * f.t2);
    return c;
}

} // namespace r13
