#include "r13lab/state_space.hpp"

#include "r13lab/errors.hpp"

namespace r13 {

std::array<double, StateVector::kComponents> StateVector::to_array() const
{
    return {rho, theta, u(0), u(1), u(2), s(0), s(1), s(2),
            sigma[0], sigma[1], sigma[2], sigma[3], sigma[4]};
}

StateVector StateVector::from_array(const std::array<double, kComponents>& a)
{
    StateVector U;
    U.rho = a[0];
    U.theta = a[1];
    U.u = Vec3(a[2], a[3], a[4]);
    U.s = Vec3(a[5], a[6], a[7]);
    for (int i = 0; i < 5; ++i) U.sigma[i] = a[8 + i];
    return U;
}

StateVector StateVector::random(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::array<double, kComponents> a{};
    for (double& v : a) v = d(rng);
    return from_array(a);
}

StateVector operator+(const StateVector& a, const StateVector& b)
{
    return {a.rho + b.rho, a.theta + b.theta, a.u + b.u, a.s + b.s, a.sigma + b.sigma};
}

StateVector operator-(const StateVector& a, const StateVector& b)
{
    return {a.rho - b.rho, a.theta - b.theta, a.u - b.u, a.s - b.s, a.sigma - b.sigma};
}

StateVector operator*(double c, const StateVector& a)
{
    return {c * a.rho, c * a.theta, c * a.u, c * a.s, c * a.sigma};
}

double mass_inner(const StateVector& a, const StateVector& b)
{
    return a.rho * b.rho + 1.5 * a.theta * b.theta + a.u.dot(b.u) + 0.4 * a.s.dot(b.s)
         + 0.5 * a.sigma.frob(b.sigma);
}

StateVector relaxation_apply(const StateVector& U, const MolecularModel& model, double Kn)
{
    if (!(Kn > 0.0)) throw ConfigError("Kn must be positive");
    StateVector r;
    r.s = -(4.0 / 15.0) * (model.l1 / Kn) * U.s;
    r.sigma = (-0.5 * model.l2 / Kn) * U.sigma;
    return r;
}

StateVector relaxation_rates(const StateVector& U, const MolecularModel& model, double Kn)
{
    if (!(Kn > 0.0)) throw ConfigError("Kn must be positive");
    StateVector r;
    r.s = -(2.0 * model.l1 / (3.0 * Kn)) * U.s;
    r.sigma = (-model.l2 / Kn) * U.sigma;
    return r;
}

double entropy_density(const StateVector& U, double H0) { return H0 - 0.5 * mass_inner(U, U); }

PhysicalFluxes physical_fluxes(const StateVector& U, const StateVector& dUdx,
                               const MolecularModel& model, double Kn)
{
    const auto& k = model.k;
    const SlabVecGrad gs = slab_grad_vec(U.s, dUdx.s);
    const SlabVecGrad gu = slab_grad_vec(U.u, dUdx.u);
    const SlabTensGrad gsig = slab_grad_stf2(U.sigma, dUdx.sigma);

    PhysicalFluxes f;
    f.sigma = k[5] * U.sigma - (k[4] * Kn) * Stf2::from_full(gs.stf) - (k[3] * Kn) * Stf2::from_full(gu.stf);
    const Vec3 grad_theta(dUdx.theta, 0.0, 0.0);
    f.s = k[0] * U.s - 1.5 * k[1] * Kn * grad_theta + 1.5 * k[2] * Kn * gsig.div;
    return f;
}

} // namespace r13
