#pragma once

#include <vector>

#include "r13lab/tensor_algebra.hpp"

namespace r13 {

struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

/// Golub-Welsch: nodes and weights from the Jacobi matrix with diagonal `a`
/// and off-diagonal `b` (b.size() == a.size() - 1); mu0 is the total mass.
Rule1D golub_welsch(const std::vector<double>& a, const std::vector<double>& b, double mu0);

/// Probabilists' Gauss-Hermite, weight exp(-x^2/2)/sqrt(2 pi); weights sum to 1.
Rule1D gauss_hermite(int n);

/// Gauss-Legendre on [-1, 1].
Rule1D gauss_legendre(int n);

/// Gauss-Legendre mapped to [lo, hi].
Rule1D gauss_legendre(int n, double lo, double hi);

/// Generalized Gauss-Laguerre, weight x^alpha exp(-x) on (0, inf).
Rule1D gauss_laguerre(int n, double alpha);

/// Gauss rule on (0, inf) for the half Gaussian weight exp(-x^2/2)/sqrt(2 pi).
/// Built from the analytic moments through a long-double Cholesky of the
/// Hankel matrix; weights sum to 1/2.
Rule1D half_range_gauss(int n);

/// Tensor-product velocity rule; weights absorb the Maxwellian and sum to 1.
struct VelocityQuadrature {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int exact_degree = 0;  ///< total polynomial degree integrated exactly

    static VelocityQuadrature tensor_hermite(int n_per_axis);

    /// Full Hermite rule on the tangential axes, half-range rule on the normal
    /// axis of `f`; integrates only over xi . n > 0.
    static VelocityQuadrature half_space(const Frame& f, int n_normal, int n_tangential);
};

} // namespace r13
