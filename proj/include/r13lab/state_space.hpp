#pragma once

#include <array>
#include <random>

#include "r13lab/model_params.hpp"
#include "r13lab/tensor_algebra.hpp"

namespace r13 {

/// Macroscopic state (rho, theta, u, s_bar, sigma_bar). Serialized as 13
/// numbers: rho, theta, u1..u3, s1..s3, then the canonical stf components.
struct StateVector {
    double rho = 0.0;
    double theta = 0.0;
    Vec3 u = Vec3::Zero();
    Vec3 s = Vec3::Zero();
    Stf2 sigma;

    static constexpr int kComponents = 13;

    double pressure() const { return rho + theta; }

    std::array<double, kComponents> to_array() const;
    static StateVector from_array(const std::array<double, kComponents>& a);

    /// Components uniform in [-1, 1].
    static StateVector random(std::mt19937_64& rng);
};

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(double c, const StateVector& a);

/// <U1, M U2> with M = diag(1, 3/2, I, 2/5 I, 1/2 I).
double mass_inner(const StateVector& a, const StateVector& b);

/// M-weighted relaxation S U: -(4/15)(l1/Kn) s_bar and -(1/2)(l2/Kn) sigma_bar.
StateVector relaxation_apply(const StateVector& U, const MolecularModel& model, double Kn);

/// Relaxation rates M^{-1} S U as they appear in the evolution equations:
/// -(2 l1 / 3 Kn) s_bar and -(l2 / Kn) sigma_bar.
StateVector relaxation_rates(const StateVector& U, const MolecularModel& model, double Kn);

double entropy_density(const StateVector& U, double H0 = 0.0);

struct PhysicalFluxes {
    Stf2 sigma;
    Vec3 s = Vec3::Zero();
};

/// Physical stress and heat flux from the modified moments and their
/// x-derivatives (slab convention).
PhysicalFluxes physical_fluxes(const StateVector& U, const StateVector& dUdx,
                               const MolecularModel& model, double Kn);

} // namespace r13
