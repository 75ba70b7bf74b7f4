#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "r13lab/quadrature.hpp"
#include "r13lab/state_space.hpp"
#include "r13lab/tensor_algebra.hpp"

namespace r13 {

/// Uniform partition of [0, 1] along axis 1 with Lagrange degree 1 or 2.
struct SlabMesh {
    int n_elements = 64;
    int degree = 2;

    double h() const { return 1.0 / n_elements; }
    void validate() const;
};

/// Wall 0 sits at x = 0 with n = -e1, wall 1 at x = 1 with n = +e1;
/// both use t1 = e2, t2 = e3.
Frame wall_frame(int wall);

/// How one scalar component of the state is discretized.
enum class FieldKind {
    continuous,       ///< Lagrange P_k
    continuous_zero,  ///< Lagrange P_k vanishing at both walls
    discontinuous     ///< Legendre P_{k-1} per element
};

/// Variable groupings of the steady mixed formulations. The transient
/// problem shares the non-Maxwell layout with rho in slot 0.
enum class SlabLayout { nonmaxwell, maxwell };

/// Scalar field slots follow StateVector serialization: 0 = rho (or p),
/// 1 = theta, 2-4 = u, 5-7 = s_bar, 8-12 = sigma_bar.
inline constexpr int kFields = StateVector::kComponents;

struct LocalBasis {
    std::vector<int> dofs;        ///< global dof, -1 for eliminated
    std::vector<double> value;
    std::vector<double> deriv;    ///< d/dx
};

class SlabSpace {
public:
    SlabSpace(SlabMesh mesh, SlabLayout layout);

    const SlabMesh& mesh() const { return mesh_; }
    SlabLayout layout() const { return layout_; }
    FieldKind kind(int field) const { return kind_[field]; }
    int offset(int field) const { return offset_[field]; }
    int field_size(int field) const { return size_[field]; }
    int n_dofs() const { return total_; }

    /// Basis functions of `field` on element e at reference coordinate t in [0, 1].
    LocalBasis basis(int field, int e, double t) const;

    /// State value and x-derivative at reference point t of element e.
    void evaluate(const Eigen::VectorXd& U, int e, double t, StateVector& value, StateVector& deriv) const;

    /// Trace at a wall; discontinuous fields use the adjacent element.
    StateVector wall_trace(const Eigen::VectorXd& U, int wall) const;

    /// Element containing x and the local coordinate.
    std::pair<int, double> locate(double x) const;

    /// Nodal coefficients of the interpolant of a function of x for one field.
    /// Discontinuous fields use an L2 projection per element.
    template <class F>
    void interpolate_field(Eigen::VectorXd& U, int field, F&& fn) const;

private:
    void set_field(int field, FieldKind kind, int& next);

    SlabMesh mesh_;
    SlabLayout layout_;
    std::array<FieldKind, kFields> kind_{};
    std::array<int, kFields> offset_{};
    std::array<int, kFields> size_{};
    int total_ = 0;
};

double shifted_legendre(int j, double t);
double shifted_legendre_deriv(int j, double t);

template <class F>
void SlabSpace::interpolate_field(Eigen::VectorXd& U, int field, F&& fn) const
{
    const int k = mesh_.degree;
    const double h = mesh_.h();
    if (kind_[field] == FieldKind::discontinuous) {
        // Orthogonal basis: coefficient j = (2j+1) int_0^1 f P_j dt.
        const Rule1D g = gauss_legendre(k + 3, 0.0, 1.0);
        for (int e = 0; e < mesh_.n_elements; ++e)
            for (int j = 0; j < k; ++j) {
                double acc = 0.0;
                for (std::size_t q = 0; q < g.size(); ++q)
                    acc += g.w[q] * fn((e + g.x[q]) * h) * shifted_legendre(j, g.x[q]);
                U(offset_[field] + e * k + j) = (2 * j + 1) * acc;
            }
        return;
    }
    const int nodes = mesh_.n_elements * k + 1;
    for (int i = 0; i < nodes; ++i) {
        const double x = static_cast<double>(i) / (nodes - 1);
        if (kind_[field] == FieldKind::continuous) U(offset_[field] + i) = fn(x);
        else if (i > 0 && i < nodes - 1) U(offset_[field] + i - 1) = fn(x);
    }
}

} // namespace r13
