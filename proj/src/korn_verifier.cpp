#include "r13lab/korn_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "r13lab/errors.hpp"
#include "r13lab/quadrature.hpp"

namespace r13 {

CKField CKField::random_unit(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    CKField f;
    f.a = Vec3(d(rng), d(rng), d(rng));
    f.lambda = d(rng);
    const Vec3 w(d(rng), d(rng), d(rng));
    f.A << 0.0, -w(2), w(1),
           w(2), 0.0, -w(0),
           -w(1), w(0), 0.0;
    f.b = Vec3(d(rng), d(rng), d(rng));
    const double norm = std::sqrt(f.a.squaredNorm() + f.lambda * f.lambda + w.squaredNorm() + f.b.squaredNorm());
    f.a /= norm;
    f.lambda /= norm;
    f.A /= norm;
    f.b /= norm;
    return f;
}

Vec3 ck_eval(const CKField& f, const Vec3& x)
{
    return f.a + f.lambda * x + f.A * x + 2.0 * f.b.dot(x) * x - x.squaredNorm() * f.b;
}

Mat3 ck_jacobian(const CKField& f, const Vec3& x)
{
    return (f.lambda + 2.0 * f.b.dot(x)) * Mat3::Identity() + f.A + 2.0 * x * f.b.transpose()
         - 2.0 * f.b * x.transpose();
}

CubeMesh::CubeMesh(int subdivisions, int degree) : n_(subdivisions), p_(degree)
{
    if (n_ < 1) throw ConfigError("cube mesh needs at least one subdivision");
    if (p_ != 1 && p_ != 2) throw ConfigError("cube mesh degree must be 1 or 2");
}

int CubeMesh::n_nodes() const
{
    const int m = nodes_per_axis();
    return m * m * m;
}

Vec3 CubeMesh::node(int id) const
{
    const int m = nodes_per_axis();
    const double step = 1.0 / (m - 1);
    return Vec3((id % m) * step, ((id / m) % m) * step, (id / (m * m)) * step);
}

std::vector<int> CubeMesh::element_nodes(int ex, int ey, int ez) const
{
    const int m = nodes_per_axis();
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>((p_ + 1) * (p_ + 1) * (p_ + 1)));
    for (int k = 0; k <= p_; ++k)
        for (int j = 0; j <= p_; ++j)
            for (int i = 0; i <= p_; ++i)
                ids.push_back((ex * p_ + i) + m * (ey * p_ + j) + m * m * (ez * p_ + k));
    return ids;
}

namespace {

// 1-D Lagrange basis on equispaced nodes of [0, 1]: values and derivatives.
void lagrange_1d(int p, double t, double* val, double* der)
{
    for (int a = 0; a <= p; ++a) {
        const double ta = static_cast<double>(a) / p;
        double v = 1.0, d = 0.0;
        for (int b = 0; b <= p; ++b) {
            if (b == a) continue;
            const double tb = static_cast<double>(b) / p;
            const double fac = (t - tb) / (ta - tb);
            d = d * fac + v / (ta - tb);
            v *= fac;
        }
        val[a] = v;
        der[a] = d;
    }
}

struct ShapeAt {
    std::vector<double> phi;
    std::vector<Vec3> grad;  // physical gradient
};

ShapeAt shape_at(int p, double h, const Vec3& ref)
{
    double v[3][3], d[3][3];
    for (int ax = 0; ax < 3; ++ax) lagrange_1d(p, ref(ax), v[ax], d[ax]);
    ShapeAt s;
    for (int k = 0; k <= p; ++k)
        for (int j = 0; j <= p; ++j)
            for (int i = 0; i <= p; ++i) {
                s.phi.push_back(v[0][i] * v[1][j] * v[2][k]);
                s.grad.emplace_back(d[0][i] * v[1][j] * v[2][k] / h, v[0][i] * d[1][j] * v[2][k] / h,
                                    v[0][i] * v[1][j] * d[2][k] / h);
            }
    return s;
}

} // namespace

CubeForms assemble_cube_forms(const CubeMesh& mesh)
{
    const int N = mesh.n_dofs();
    const int p = mesh.degree();
    const int n = mesh.subdivisions();
    const double h = mesh.h();
    const int nloc = (p + 1) * (p + 1) * (p + 1);

    CubeForms F;
    F.L2 = Eigen::MatrixXd::Zero(N, N);
    F.boundary = Eigen::MatrixXd::Zero(N, N);
    F.stf = Eigen::MatrixXd::Zero(N, N);
    F.H1 = Eigen::MatrixXd::Zero(N, N);

    const Rule1D g = gauss_legendre(p + 1, 0.0, 1.0);
    const int nq = static_cast<int>(g.size());

    // Reference element matrices are identical for every element of the
    // uniform mesh; compute them once.
    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(nloc, nloc);
    Eigen::MatrixXd stiff = Eigen::MatrixXd::Zero(nloc, nloc);
    std::array<std::array<Eigen::MatrixXd, 3>, 3> cross;  // int d_c phi_a d_d phi_b
    for (auto& row : cross)
        for (auto& m : row) m = Eigen::MatrixXd::Zero(nloc, nloc);

    for (int qk = 0; qk < nq; ++qk)
        for (int qj = 0; qj < nq; ++qj)
            for (int qi = 0; qi < nq; ++qi) {
                const ShapeAt s = shape_at(p, h, Vec3(g.x[qi], g.x[qj], g.x[qk]));
                const double w = g.w[qi] * g.w[qj] * g.w[qk] * h * h * h;
                for (int a = 0; a < nloc; ++a)
                    for (int b = 0; b < nloc; ++b) {
                        mass(a, b) += w * s.phi[a] * s.phi[b];
                        stiff(a, b) += w * s.grad[a].dot(s.grad[b]);
                        for (int c = 0; c < 3; ++c)
                            for (int d = 0; d < 3; ++d) cross[c][d](a, b) += w * s.grad[a](c) * s.grad[b](d);
                    }
            }

    for (int ez = 0; ez < n; ++ez)
        for (int ey = 0; ey < n; ++ey)
            for (int ex = 0; ex < n; ++ex) {
                const std::vector<int> ids = mesh.element_nodes(ex, ey, ez);
                for (int a = 0; a < nloc; ++a)
                    for (int b = 0; b < nloc; ++b)
                        for (int c = 0; c < 3; ++c) {
                            const int I = 3 * ids[a] + c;
                            const int Jc = 3 * ids[b] + c;
                            F.L2(I, Jc) += mass(a, b);
                            F.H1(I, Jc) += mass(a, b) + stiff(a, b);
                            for (int d = 0; d < 3; ++d) {
                                const int J = 3 * ids[b] + d;
                                double v = 0.5 * cross[d][c](a, b) - cross[c][d](a, b) / 3.0;
                                if (c == d) v += 0.5 * stiff(a, b);
                                F.stf(I, J) += v;
                            }
                        }

                // Boundary faces of this element.
                for (int ax = 0; ax < 3; ++ax) {
                    const int e_ax = ax == 0 ? ex : (ax == 1 ? ey : ez);
                    for (int side = 0; side < 2; ++side) {
                        if ((side == 0 && e_ax != 0) || (side == 1 && e_ax != n - 1)) continue;
                        const int t1 = (ax + 1) % 3, t2 = (ax + 2) % 3;
                        for (int qa = 0; qa < nq; ++qa)
                            for (int qb = 0; qb < nq; ++qb) {
                                Vec3 ref;
                                ref(ax) = side;
                                ref(t1) = g.x[qa];
                                ref(t2) = g.x[qb];
                                const ShapeAt s = shape_at(p, h, ref);
                                const double w = g.w[qa] * g.w[qb] * h * h;
                                for (int a = 0; a < nloc; ++a) {
                                    if (s.phi[a] == 0.0) continue;
                                    for (int b = 0; b < nloc; ++b) {
                                        const double v = w * s.phi[a] * s.phi[b];
                                        for (int c = 0; c < 3; ++c) F.boundary(3 * ids[a] + c, 3 * ids[b] + c) += v;
                                    }
                                }
                            }
                    }
                }
            }
    return F;
}

Eigen::VectorXd interpolate(const CubeMesh& mesh, const CKField& f)
{
    Eigen::VectorXd u(mesh.n_dofs());
    for (int i = 0; i < mesh.n_nodes(); ++i) u.segment<3>(3 * i) = ck_eval(f, mesh.node(i));
    return u;
}

namespace {

Eigen::VectorXd generalized_eigenvalues(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B)
{
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (es.info() != Eigen::Success) throw SolverError("generalized eigensolver failed");
    return es.eigenvalues();
}

std::vector<double> head(const Eigen::VectorXd& v, int n)
{
    std::vector<double> out;
    for (int i = 0; i < std::min<int>(n, static_cast<int>(v.size())); ++i) out.push_back(v(i));
    return out;
}

} // namespace

KornReport korn_constants(const CubeMesh& mesh, const CubeForms& forms, bool with_classical, bool with_kernel)
{
    KornReport r;
    r.subdivisions = mesh.subdivisions();
    r.degree = mesh.degree();
    r.n_dofs = mesh.n_dofs();

    if (with_kernel) {
        const Eigen::VectorXd ev = generalized_eigenvalues(forms.stf, forms.L2);
        r.kernel_threshold = 1e-10 * ev.cwiseAbs().maxCoeff();
        r.stf_kernel_dim = static_cast<int>((ev.array().abs() <= r.kernel_threshold).count());
        r.stf_spectrum_head = head(ev, 14);
    }
    if (with_classical) {
        const Eigen::VectorXd ev = generalized_eigenvalues(forms.L2 + forms.stf, forms.H1);
        r.lambda_min_classical = ev(0);
        r.classical_spectrum_head = head(ev, 8);
    }
    const Eigen::VectorXd ev = generalized_eigenvalues(forms.boundary + forms.stf, forms.H1);
    r.lambda_min_boundary = ev(0);
    r.boundary_spectrum_head = head(ev, 8);
    return r;
}

CKVanishingReport ck_vanishing_check(const CKField& f, int face_points)
{
    const Rule1D g = gauss_legendre(face_points, 0.0, 1.0);
    CKVanishingReport r;
    for (int ax = 0; ax < 3; ++ax)
        for (int side = 0; side < 2; ++side) {
            const int t1 = (ax + 1) % 3, t2 = (ax + 2) % 3;
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b) {
                    Vec3 x;
                    x(ax) = side;
                    x(t1) = g.x[a];
                    x(t2) = g.x[b];
                    r.boundary_norm2 += g.w[a] * g.w[b] * ck_eval(f, x).squaredNorm();
                }
        }
    return r;
}

CKStudy ck_random_study(int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CKStudy s;
    s.samples = samples;
    s.min_boundary_norm2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const CKField f = CKField::random_unit(rng);
        s.min_boundary_norm2 = std::min(s.min_boundary_norm2, ck_vanishing_check(f).boundary_norm2);
        for (int q = 0; q < 4; ++q) {
            const Vec3 x(unit(rng), unit(rng), unit(rng));
            const Stf2 st = stf2(ck_jacobian(f, x));
            s.max_stf_residual = std::max(s.max_stf_residual, std::sqrt(st.frob(st)));
        }
    }
    return s;
}

} // namespace r13
