#pragma once

#include <random>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "r13lab/slab_forms.hpp"

namespace r13 {

/// Which mixed formulation the steady solve uses. `automatic` picks the
/// Maxwell grouping when the model is flagged as Maxwell.
enum class Formulation { nonmaxwell, maxwell, automatic };

Formulation parse_formulation(const std::string& s);
const char* to_string(Formulation f);

/// Discrete space, coefficients and every assembled form for one model.
struct SlabAssembly {
    SlabSpace space;
    MolecularModel model;
    BoundaryCoeffs coeffs;
    double Kn = 0.1;
    SlabForms forms;

    FormContext ctx() const { return {&model, &coeffs, Kn}; }
};

SlabAssembly make_assembly(const MolecularModel& model, double Kn, const SlabMesh& mesh, SlabLayout layout,
                           int threads = 1);

/// Saddle-point operator without the zero-mean row (rows = test functions).
Eigen::SparseMatrix<double> steady_operator(const SlabAssembly& as);
/// The part whose diagonal evaluation is B(U, U): A1 or A2.
Eigen::SparseMatrix<double> steady_bilinear(const SlabAssembly& as);
Eigen::VectorXd steady_rhs(const SlabAssembly& as, const WallData& wall);
/// A1 plus the skew pressure coupling of the evolution equations; rho in slot 0.
Eigen::SparseMatrix<double> transient_operator(const SlabAssembly& as);

struct SolveMonitors {
    double energy = 0.0;        ///< (1/2) int <U, M U>
    double W1 = 0.0;            ///< bulk production, nonpositive
    double I_bdry = 0.0;        ///< wall production minus the data load
    double entropy = 0.0;       ///< int H with H0 = 0
    double mass = 0.0;          ///< int rho
    double residual = 0.0;      ///< relative linear-solve residual
    double bilinear = 0.0;      ///< B(U, U)
    double load = 0.0;          ///< F(U)
    double identity_defect = 0.0;
};

/// Pointwise monitors. `slot0_pressure` selects whether slot 0 holds p or rho.
SolveMonitors compute_monitors(const SlabAssembly& as, const Eigen::VectorXd& U, const WallData& wall,
                               bool slot0_pressure);

/// State at x with rho recovered from p when slot 0 holds the pressure.
void evaluate_state(const SlabAssembly& as, const Eigen::VectorXd& U, double x, bool slot0_pressure,
                    StateVector& value, StateVector& deriv);

struct SteadySolution {
    SlabAssembly assembly;
    Formulation formulation = Formulation::nonmaxwell;
    WallData wall;
    Eigen::VectorXd U;       ///< slot 0 holds p
    double multiplier = 0.0; ///< zero-mean Lagrange multiplier
    SolveMonitors monitors;

    StateVector at(double x) const;
};

struct SteadyProblem {
    MolecularModel model;
    double Kn = 0.1;
    SlabMesh mesh;
    WallData wall;
    Formulation formulation = Formulation::automatic;
    int threads = 1;
};

/// Throws SolverError when the factorization fails.
SteadySolution solve_steady(const SteadyProblem& problem);

enum class TimeScheme { implicit_euler, crank_nicolson };
TimeScheme parse_scheme(const std::string& s);
const char* to_string(TimeScheme s);

/// theta-scheme (M/dt + th K) U1 = (M/dt - (1 - th) K) U0 with homogeneous walls.
class TransientStepper {
public:
    TransientStepper(SlabAssembly assembly, double dt, TimeScheme scheme);

    const SlabAssembly& assembly() const { return as_; }
    Eigen::VectorXd step(const Eigen::VectorXd& U0, double* residual = nullptr) const;
    SolveMonitors monitors(const Eigen::VectorXd& U) const;

private:
    SlabAssembly as_;
    double dt_;
    double th_;
    Eigen::SparseMatrix<double> K_, lhs_, rhs_;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

/// Dof vector with entries uniform in [-1, 1].
Eigen::VectorXd random_dofs(const SlabSpace& space, std::mt19937_64& rng);

struct CoercivityReport {
    double min_eig = 0.0;        ///< smallest generalized eigenvalue of sym(A1) vs H1
    double max_eig = 0.0;
    double bubble_value = 0.0;   ///< A1(U, U) on the theta bubble x(1 - x)
    double bubble_norm = 0.0;    ///< its H1 norm squared
    int size = 0;
};

/// Dense probe of A1 on the non-Maxwell layout (all slots except 0).
CoercivityReport coercivity_probe(const SlabAssembly& as);

struct InfSupReport {
    double beta = 0.0;           ///< square root of the second eigenvalue
    double null_eig = 0.0;       ///< first eigenvalue (constant pressure)
    std::vector<double> eigs;
};

/// Eigenvalues of (B G_u^{-1} B^T, M_p) for the pressure-velocity coupling.
InfSupReport infsup_probe(const SlabAssembly& as);

struct ConvergenceLevel {
    int n_elements = 0;
    double error = 0.0;
    std::array<double, kFields> component_error{};
    double rate = 0.0;    ///< log2 of the error ratio to the previous level
    double ratio = 0.0;
    double seconds = 0.0;
};

struct ConvergenceReport {
    int reference_elements = 0;
    int degree = 0;
    std::vector<ConvergenceLevel> levels;
    bool monotone(double min_ratio) const;
};

/// Self-convergence against a fine solve; error in the M-weighted L2 norm.
ConvergenceReport convergence_study(const SteadyProblem& base, const std::vector<int>& ladder, int reference);

} // namespace r13
