#include "r13lab/slab_space.hpp"

#include <algorithm>
#include <cmath>

#include "r13lab/errors.hpp"

namespace r13 {

void SlabMesh::validate() const
{
    if (n_elements < 1) throw ConfigError("slab mesh needs at least one element");
    if (degree != 1 && degree != 2) throw ConfigError("slab element degree must be 1 or 2");
}

Frame wall_frame(int wall)
{
    const double sign = wall == 0 ? -1.0 : 1.0;
    return {Vec3(sign, 0.0, 0.0), Vec3(0.0, 1.0, 0.0), Vec3(0.0, 0.0, 1.0)};
}

double shifted_legendre(int j, double t)
{
    const double y = 2.0 * t - 1.0;
    switch (j) {
    case 0: return 1.0;
    case 1: return y;
    case 2: return 1.5 * y * y - 0.5;
    default: throw ConfigError("shifted_legendre: degree above 2");
    }
}

double shifted_legendre_deriv(int j, double t)
{
    const double y = 2.0 * t - 1.0;
    switch (j) {
    case 0: return 0.0;
    case 1: return 2.0;
    case 2: return 6.0 * y;
    default: throw ConfigError("shifted_legendre: degree above 2");
    }
}

SlabSpace::SlabSpace(SlabMesh mesh, SlabLayout layout) : mesh_(mesh), layout_(layout)
{
    mesh_.validate();
    const bool mx = layout == SlabLayout::maxwell;
    int next = 0;
    set_field(0, FieldKind::discontinuous, next);
    set_field(1, mx ? FieldKind::discontinuous : FieldKind::continuous, next);
    set_field(2, FieldKind::continuous_zero, next);
    set_field(3, mx ? FieldKind::discontinuous : FieldKind::continuous, next);
    set_field(4, mx ? FieldKind::discontinuous : FieldKind::continuous, next);
    for (int f = 5; f < kFields; ++f) set_field(f, FieldKind::continuous, next);
    total_ = next;
}

void SlabSpace::set_field(int field, FieldKind kind, int& next)
{
    const int k = mesh_.degree;
    const int n = mesh_.n_elements;
    kind_[field] = kind;
    offset_[field] = next;
    switch (kind) {
    case FieldKind::continuous: size_[field] = n * k + 1; break;
    case FieldKind::continuous_zero: size_[field] = n * k - 1; break;
    case FieldKind::discontinuous: size_[field] = n * k; break;
    }
    next += size_[field];
}

LocalBasis SlabSpace::basis(int field, int e, double t) const
{
    const int k = mesh_.degree;
    const double h = mesh_.h();
    LocalBasis b;
    if (kind_[field] == FieldKind::discontinuous) {
        for (int j = 0; j < k; ++j) {
            b.dofs.push_back(offset_[field] + e * k + j);
            b.value.push_back(shifted_legendre(j, t));
            b.deriv.push_back(shifted_legendre_deriv(j, t) / h);
        }
        return b;
    }
    const int last = mesh_.n_elements * k;
    for (int a = 0; a <= k; ++a) {
        // Lagrange basis on equispaced local nodes.
        const double ta = static_cast<double>(a) / k;
        double v = 1.0, d = 0.0;
        for (int c = 0; c <= k; ++c) {
            if (c == a) continue;
            const double tc = static_cast<double>(c) / k;
            d = d * (t - tc) / (ta - tc) + v / (ta - tc);
            v *= (t - tc) / (ta - tc);
        }
        const int node = e * k + a;
        int dof = offset_[field] + node;
        if (kind_[field] == FieldKind::continuous_zero)
            dof = (node == 0 || node == last) ? -1 : offset_[field] + node - 1;
        b.dofs.push_back(dof);
        b.value.push_back(v);
        b.deriv.push_back(d / h);
    }
    return b;
}

namespace {

void set_component(StateVector& s, int field, double v)
{
    switch (field) {
    case 0: s.rho += v; break;
    case 1: s.theta += v; break;
    case 2: case 3: case 4: s.u(field - 2) += v; break;
    case 5: case 6: case 7: s.s(field - 5) += v; break;
    default: s.sigma[field - 8] += v; break;
    }
}

} // namespace

void SlabSpace::evaluate(const Eigen::VectorXd& U, int e, double t, StateVector& value, StateVector& deriv) const
{
    value = StateVector{};
    deriv = StateVector{};
    for (int f = 0; f < kFields; ++f) {
        const LocalBasis b = basis(f, e, t);
        for (std::size_t i = 0; i < b.dofs.size(); ++i) {
            if (b.dofs[i] < 0) continue;
            set_component(value, f, U(b.dofs[i]) * b.value[i]);
            set_component(deriv, f, U(b.dofs[i]) * b.deriv[i]);
        }
    }
}

StateVector SlabSpace::wall_trace(const Eigen::VectorXd& U, int wall) const
{
    StateVector v, d;
    if (wall == 0) evaluate(U, 0, 0.0, v, d);
    else evaluate(U, mesh_.n_elements - 1, 1.0, v, d);
    return v;
}

std::pair<int, double> SlabSpace::locate(double x) const
{
    const double s = std::clamp(x, 0.0, 1.0) * mesh_.n_elements;
    const int e = std::min(static_cast<int>(std::floor(s)), mesh_.n_elements - 1);
    return {e, s - e};
}

} // namespace r13
