#pragma once

#include <functional>
#include <string>
#include <vector>

#include "r13lab/quadrature.hpp"
#include "r13lab/state_space.hpp"

namespace r13 {

/// Normalized associated Laguerre polynomial L̄_n^{(l+1/2)}(x).
double normalized_laguerre(int n, int l, double x);

/// Radial index n, tensor order l and the l axis indices (0-based).
struct BasisIndex {
    int n = 0;
    int l = 0;
    std::vector<int> axes;
};

/// Trace-free monomial xi_<i1..il> for l <= 2.
double stf_monomial(int l, const std::vector<int>& axes, const Vec3& xi);

double psi_eval(const BasisIndex& idx, const Vec3& xi);

using VelocityFunction = std::function<double(const Vec3&)>;

struct InnerResult {
    double value = 0.0;
    bool inexact = false;  ///< combined degree exceeds the rule's exactness
};

/// Sum_q w_q f(xi_q) g(xi_q). Degrees are optional hints; when both are given
/// and their sum exceeds the rule's exact degree the result is flagged.
InnerResult weighted_inner(const VelocityFunction& f, const VelocityFunction& g,
                           const VelocityQuadrature& quad, int deg_f = -1, int deg_g = -1);

/// Expansion coefficients of the closure functions
///   phi_i^1  = sum_{n>=1} c1[n-1] psi_i^n,   phi_ij^0 = sum_{n>=0} c2[n] psi_ij^n.
struct PhiClosure {
    std::vector<double> c1;
    std::vector<double> c2;

    /// Single-term closure reproducing s_bar = s and sigma_bar = sigma.
    static PhiClosure single_term();

    /// Loads {"c1": [...], "c2": [...]} and checks the normalization sums
    /// (15/2 and 15) to relative 1e-6; throws DataError otherwise.
    static PhiClosure from_file(const std::string& path);
    static PhiClosure from_json_text(const std::string& text);

    double c1_norm2() const;
    double c2_norm2() const;

    double phi1(int i, const Vec3& xi) const;
    double phi0(int i, int j, const Vec3& xi) const;
    int polynomial_degree() const;
};

/// f̃ = rho psi^0 - sqrt(3/2) theta psi^1 + sqrt(3) u_i psi_i^0
///     + (2/5) s_i phi_i^1 + (1/2) sigma_ij phi_ij^0
class TruncatedDistribution {
public:
    TruncatedDistribution(const StateVector& U, PhiClosure closure);
    double operator()(const Vec3& xi) const;
    int degree() const { return degree_; }
    const StateVector& state() const { return U_; }

private:
    StateVector U_;
    PhiClosure closure_;
    int degree_;
};

TruncatedDistribution tilde_f_from_state(const StateVector& U,
                                         const PhiClosure& closure = PhiClosure::single_term());

struct MomentResult {
    StateVector U;
    bool inexact = false;
};

MomentResult moment_extract(const VelocityFunction& f, const VelocityQuadrature& quad,
                            int f_degree = -1,
                            const PhiClosure& closure = PhiClosure::single_term());

/// <f̃, f̃> evaluated by quadrature.
double kinetic_energy(const StateVector& U, const VelocityQuadrature& quad,
                      const PhiClosure& closure = PhiClosure::single_term());

/// rho_W = sqrt(2 pi) <(xi . n)_+, f̃> - theta_W / 2, with the half-space
/// moment taken on a dedicated half-range rule along n.
double wall_density(const StateVector& U_wall, double theta_W, const Frame& frame,
                    const PhiClosure& closure = PhiClosure::single_term(), int n_normal = 8);

} // namespace r13
