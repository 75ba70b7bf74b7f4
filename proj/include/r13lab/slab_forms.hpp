#pragma once

#include <array>

#include <Eigen/Sparse>

#include "r13lab/model_params.hpp"
#include "r13lab/onsager_coefficients.hpp"
#include "r13lab/slab_space.hpp"

namespace r13 {

/// The bilinear forms of the weak formulation. `g_theta` is (theta, div v),
/// used only by the transient operator.
enum class Form { a, b, c, d, e, f, g, g_theta, j, z, h };
inline constexpr int kForms = 11;
const char* form_name(Form f);

/// Wall temperature and tangential wall velocity (t1, t2) at both walls.
struct WallData {
    std::array<double, 2> theta{};
    std::array<std::array<double, 2>, 2> u{};

    static WallData uniform_temperature(double theta_w);
    /// u_t1 = -v at x = 0 and +v at x = 1.
    static WallData couette(double v);
};

struct FormContext {
    const MolecularModel* model = nullptr;
    const BoundaryCoeffs* coeffs = nullptr;
    double Kn = 0.1;
};

/// Derived quantities of a state jet at one point under the slab convention.
struct PointFeatures {
    StateVector value;
    double dtheta = 0.0;
    double div_u = 0.0;
    double div_s = 0.0;
    Mat3 stf_grad_u = Mat3::Zero();
    Mat3 stf_grad_s = Mat3::Zero();
    Vec3 div_sigma = Vec3::Zero();
    Tensor3 stf_grad_sigma;
};

PointFeatures point_features(const StateVector& value, const StateVector& deriv);

/// Volume integrand of form(X, Y) at one point.
double form_volume(Form form, const PointFeatures& X, const PointFeatures& Y, const FormContext& ctx);

/// Wall integrand of form(X, Y) in the frame components of `frame`.
double form_boundary(Form form, const StateVector& X, const StateVector& Y, const Frame& frame,
                     const FormContext& ctx);

/// Each form assembled once on the full field space, rows indexed by the
/// first argument and columns by the second.
struct SlabForms {
    std::array<Eigen::SparseMatrix<double>, kForms> phi;
    Eigen::SparseMatrix<double> mass;   ///< <U, M V>
    Eigen::VectorXd slot0_mean;         ///< integral of each slot-0 basis function

    const Eigen::SparseMatrix<double>& operator[](Form f) const { return phi[static_cast<int>(f)]; }
};

SlabForms assemble_forms(const SlabSpace& space, const FormContext& ctx, int threads = 1);

struct LoadVectors {
    Eigen::VectorXd L1, L2, L3, L4;
};

LoadVectors assemble_loads(const SlabSpace& space, const FormContext& ctx, const WallData& wall);

/// Pointwise load functionals at one wall, evaluated on a trace.
struct WallLoads {
    double L1 = 0.0, L2 = 0.0, L3 = 0.0, L4 = 0.0;
};
WallLoads wall_loads(const StateVector& trace, int wall, const FormContext& ctx, const WallData& data);

} // namespace r13
