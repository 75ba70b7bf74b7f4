#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "r13lab/tensor_algebra.hpp"

namespace r13 {

/// Conformal Killing field x -> a + lambda x + A x + 2 (b.x) x - |x|^2 b.
struct CKField {
    Vec3 a = Vec3::Zero();
    double lambda = 0.0;
    Mat3 A = Mat3::Zero();  ///< skew-symmetric
    Vec3 b = Vec3::Zero();

    /// Coefficients in [-1, 1], scaled so the 10 parameters have unit norm.
    static CKField random_unit(std::mt19937_64& rng);
};

Vec3 ck_eval(const CKField& f, const Vec3& x);
Mat3 ck_jacobian(const CKField& f, const Vec3& x);  ///< J(i, j) = d f_i / d x_j

/// Uniform hexahedral mesh of the unit cube with Q1 or Q2 elements.
class CubeMesh {
public:
    CubeMesh(int subdivisions, int degree);

    int subdivisions() const { return n_; }
    int degree() const { return p_; }
    int nodes_per_axis() const { return n_ * p_ + 1; }
    int n_nodes() const;
    int n_dofs() const { return 3 * n_nodes(); }
    Vec3 node(int id) const;
    /// Global node ids of element (ex, ey, ez), lexicographic in the local
    /// (i, j, k) node index with i fastest.
    std::vector<int> element_nodes(int ex, int ey, int ez) const;
    double h() const { return 1.0 / n_; }

private:
    int n_;
    int p_;
};

struct CubeForms {
    Eigen::MatrixXd L2;
    Eigen::MatrixXd boundary;
    Eigen::MatrixXd stf;
    Eigen::MatrixXd H1;
};

/// Dense Gram matrices over vector nodal dofs (dof = 3 * node + component).
CubeForms assemble_cube_forms(const CubeMesh& mesh);

/// Nodal interpolant of a vector field.
Eigen::VectorXd interpolate(const CubeMesh& mesh, const CKField& f);

struct KornReport {
    int subdivisions = 0;
    int degree = 0;
    int n_dofs = 0;
    double lambda_min_classical = 0.0;
    double lambda_min_boundary = 0.0;
    int stf_kernel_dim = 0;
    double kernel_threshold = 0.0;
    std::vector<double> stf_spectrum_head;       ///< smallest (stf, L2) eigenvalues
    std::vector<double> classical_spectrum_head;
    std::vector<double> boundary_spectrum_head;
};

KornReport korn_constants(const CubeMesh& mesh, const CubeForms& forms, bool with_classical = true,
                          bool with_kernel = true);

struct CKVanishingReport {
    double boundary_norm2 = 0.0;
};

/// Boundary L2 norm of the analytic field over the six faces.
CKVanishingReport ck_vanishing_check(const CKField& f, int face_points = 6);

struct CKStudy {
    int samples = 0;
    double min_boundary_norm2 = 0.0;
    double max_stf_residual = 0.0;  ///< largest analytic |stf grad| at sample points
};

/// Random unit CK fields: analytic kernel residual and boundary norm.
CKStudy ck_random_study(int samples, std::uint64_t seed);

} // namespace r13
