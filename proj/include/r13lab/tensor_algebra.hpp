#pragma once

#include <array>

#include <Eigen/Dense>

namespace r13 {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Dense third-order tensor on R^3, entry (i,j,k) stored at 9i + 3j + k.
struct Tensor3 {
    std::array<double, 27> v{};

    double& operator()(int i, int j, int k) { return v[9 * i + 3 * j + k]; }
    double operator()(int i, int j, int k) const { return v[9 * i + 3 * j + k]; }

    /// Full contraction sum_ijk A_ijk B_ijk.
    double dot(const Tensor3& other) const;
    double norm2() const { return dot(*this); }
};

/// Symmetric trace-free 3x3 tensor held by its five canonical coefficients
/// (s11, s22, s12, s13, s23); s33 = -s11 - s22.
struct Stf2 {
    std::array<double, 5> c{};

    static constexpr int kSize = 5;

    Mat3 full() const;
    /// Reads the canonical coefficients from a matrix that is already
    /// symmetric and trace-free; no projection is applied.
    static Stf2 from_full(const Mat3& m);

    double operator[](int i) const { return c[i]; }
    double& operator[](int i) { return c[i]; }

    /// Frobenius product s:t of the reconstructed matrices.
    double frob(const Stf2& other) const;
};

Stf2 operator+(const Stf2& a, const Stf2& b);
Stf2 operator-(const Stf2& a, const Stf2& b);
Stf2 operator*(double s, const Stf2& a);

/// A_<ij> = A_(ij) - (1/3) A_kk delta_ij.
Stf2 stf2(const Mat3& a);

/// Fully symmetric trace-free part of a third-order tensor.
Tensor3 stf3(const Tensor3& b);

/// The seven independent entries of an stf third-order tensor, in the order
/// (111, 112, 113, 122, 123, 222, 223).
std::array<double, 7> stf3_components(const Tensor3& t);

/// Gradient of a vector field that varies along axis 1 only.
struct SlabVecGrad {
    Mat3 grad;  ///< grad(i, j) = d v_i / d x_j
    Mat3 stf;
};
SlabVecGrad slab_grad_vec(const Vec3& values, const Vec3& dx);

/// Gradient of an stf tensor field that varies along axis 1 only.
struct SlabTensGrad {
    Tensor3 grad;  ///< grad(i, j, k) = d sigma_ij / d x_k
    Tensor3 stf;
    Vec3 div;      ///< (div sigma)_i = d sigma_ij / d x_j
};
SlabTensGrad slab_grad_stf2(const Stf2& values, const Stf2& dx);

/// Boundary-aligned orthonormal frame; n is the outward normal.
struct Frame {
    Vec3 n;
    Vec3 t1;
    Vec3 t2;

    /// Largest deviation of the Gram matrix from the identity.
    double orthonormality_defect() const;
};

struct VecFrameComponents {
    double n = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double t(int i) const { return i == 0 ? t1 : t2; }
};

struct Stf2FrameComponents {
    double nn = 0.0;
    double nt1 = 0.0;
    double nt2 = 0.0;
    double t1t1 = 0.0;
    double t2t2 = 0.0;
    double t1t2 = 0.0;
    double nt(int i) const { return i == 0 ? nt1 : nt2; }
    double tt(int i) const { return i == 0 ? t1t1 : t2t2; }
};

VecFrameComponents frame_components(const Vec3& v, const Frame& f);
Stf2FrameComponents frame_components(const Stf2& s, const Frame& f);

} // namespace r13
