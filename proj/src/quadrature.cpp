#include "r13lab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "r13lab/errors.hpp"

namespace r13 {

Rule1D golub_welsch(const std::vector<double>& a, const std::vector<double>& b, double mu0)
{
    const int n = static_cast<int>(a.size());
    if (n < 1 || static_cast<int>(b.size()) != n - 1)
        throw ConfigError("golub_welsch: inconsistent recurrence lengths");

    Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag(i) = a[i];
    for (int i = 0; i + 1 < n; ++i) off(i) = b[i];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw SolverError("golub_welsch: eigensolver failed");

    // Eigenvector components lose relative accuracy in the small tail weights.
    // Polish each node by Newton on the monic recurrence and take the weight
    // from the Christoffel function of the orthonormal polynomials instead.
    auto recur = [&](long double x, long double& q, long double& dq) {
        long double p_prev = 0.0L, p = 1.0L, d_prev = 0.0L, d = 0.0L, sum = 1.0L;
        for (int k = 0; k < n; ++k) {
            long double pn = (x - a[k]) * p - (k > 0 ? b[k - 1] * p_prev : 0.0L);
            long double dn = p + (x - a[k]) * d - (k > 0 ? b[k - 1] * d_prev : 0.0L);
            if (k + 1 < n) {
                pn /= b[k];
                dn /= b[k];
                sum += pn * pn;
            }
            p_prev = p;
            p = pn;
            d_prev = d;
            d = dn;
        }
        q = p;
        dq = d;
        return sum;
    };

    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = es.eigenvalues()(i), q = 0.0L, dq = 0.0L;
        for (int it = 0; it < 3; ++it) {
            recur(x, q, dq);
            if (dq == 0.0L) break;
            x -= q / dq;
        }
        const long double sum = recur(x, q, dq);
        r.x[i] = static_cast<double>(x);
        r.w[i] = static_cast<double>(mu0 / sum);
    }
    return r;
}

Rule1D gauss_hermite(int n)
{
    std::vector<double> a(n, 0.0), b(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) b[i - 1] = std::sqrt(static_cast<double>(i));
    return golub_welsch(a, b, 1.0);
}

Rule1D gauss_legendre(int n)
{
    std::vector<double> a(n, 0.0), b(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) {
        const double k = i;
        b[i - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    }
    Rule1D r = golub_welsch(a, b, 2.0);
    // Symmetrize: the eigensolver leaves nodes asymmetric at the 1e-16 level,
    // which would break exact cancellations in odd integrands.
    for (int i = 0; i < n / 2; ++i) {
        const double xm = 0.5 * (r.x[n - 1 - i] - r.x[i]);
        const double wm = 0.5 * (r.w[n - 1 - i] + r.w[i]);
        r.x[i] = -xm;
        r.x[n - 1 - i] = xm;
        r.w[i] = r.w[n - 1 - i] = wm;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return r;
}

Rule1D gauss_legendre(int n, double lo, double hi)
{
    Rule1D r = gauss_legendre(n);
    const double h = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r.x[i] = lo + h * (r.x[i] + 1.0);
        r.w[i] *= h;
    }
    return r;
}

Rule1D gauss_laguerre(int n, double alpha)
{
    std::vector<double> a(n), b(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) a[i] = 2.0 * i + alpha + 1.0;
    for (int i = 1; i < n; ++i) b[i - 1] = std::sqrt(i * (i + alpha));
    return golub_welsch(a, b, std::tgamma(alpha + 1.0));
}

Rule1D half_range_gauss(int n)
{
    if (n < 1 || n > 20) throw ConfigError("half_range_gauss: n must lie in [1, 20]");

    // mu_k = int_0^inf x^k exp(-x^2/2) dx / sqrt(2 pi)
    const int m = n + 1;
    std::vector<long double> mu(2 * m);
    const long double inv_sqrt_2pi = 1.0L / std::sqrt(2.0L * std::numbers::pi_v<long double>);
    for (int k = 0; k < 2 * m; ++k)
        mu[k] = std::pow(2.0L, (k - 1) / 2.0L) * std::tgamma((k + 1) / 2.0L) * inv_sqrt_2pi;

    // Upper Cholesky factor of the (n+1)x(n+1) Hankel matrix.
    std::vector<std::vector<long double>> r(m, std::vector<long double>(m, 0.0L));
    for (int i = 0; i < m; ++i) {
        long double s = mu[2 * i];
        for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][i];
        if (s <= 0.0L) throw SolverError("half_range_gauss: Hankel matrix lost definiteness");
        r[i][i] = std::sqrt(s);
        for (int j = i + 1; j < m; ++j) {
            long double t = mu[i + j];
            for (int k = 0; k < i; ++k) t -= r[k][i] * r[k][j];
            r[i][j] = t / r[i][i];
        }
    }

    std::vector<double> a(n), b(std::max(n - 1, 0));
    for (int j = 0; j < n; ++j) {
        long double aj = r[j][j + 1] / r[j][j];
        if (j > 0) aj -= r[j - 1][j] / r[j - 1][j - 1];
        a[j] = static_cast<double>(aj);
        if (j + 1 < n) b[j] = static_cast<double>(r[j + 1][j + 1] / r[j][j]);
    }
    return golub_welsch(a, b, static_cast<double>(mu[0]));
}

VelocityQuadrature VelocityQuadrature::tensor_hermite(int n)
{
    const Rule1D g = gauss_hermite(n);
    VelocityQuadrature q;
    q.exact_degree = 2 * n - 1;
    q.nodes.reserve(static_cast<std::size_t>(n) * n * n);
    q.weights.reserve(q.nodes.capacity());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                q.nodes.emplace_back(g.x[i], g.x[j], g.x[k]);
                q.weights.push_back(g.w[i] * g.w[j] * g.w[k]);
            }
    return q;
}

VelocityQuadrature VelocityQuadrature::half_space(const Frame& f, int n_normal, int n_tangential)
{
    const Rule1D hn = half_range_gauss(n_normal);
    const Rule1D gt = gauss_hermite(n_tangential);
    VelocityQuadrature q;
    q.exact_degree = std::min(2 * n_normal - 1, 2 * n_tangential - 1);
    for (std::size_t i = 0; i < hn.size(); ++i)
        for (std::size_t j = 0; j < gt.size(); ++j)
            for (std::size_t k = 0; k < gt.size(); ++k) {
                q.nodes.push_back(hn.x[i] * f.n + gt.x[j] * f.t1 + gt.x[k] * f.t2);
                q.weights.push_back(hn.w[i] * gt.w[j] * gt.w[k]);
            }
    return q;
}

} // namespace r13
