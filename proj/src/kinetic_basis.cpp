#include "r13lab/kinetic_basis.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "r13lab/errors.hpp"

namespace r13 {

double normalized_laguerre(int n, int l, double x)
{
    if (n < 0 || l < 0) throw ConfigError("normalized_laguerre: indices must be nonnegative");
    const double alpha = l + 0.5;
    const double pref = std::sqrt(std::sqrt(std::numbers::pi)
                                  / (std::ldexp(1.0, l + 1) * std::tgamma(n + 1.0) * std::tgamma(n + l + 1.5)));
    // Expanded Rodrigues form:
    //   sum_k C(n,k) (-1)^(n-k) Gamma(n+alpha+1)/Gamma(n+alpha+1-k) x^(n-k)
    double sum = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * (n - k + 1) / k;
        const double ratio = std::tgamma(n + alpha + 1.0) / std::tgamma(n + alpha + 1.0 - k);
        const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
        sum += binom * sign * ratio * std::pow(x, n - k);
    }
    return pref * sum;
}

double stf_monomial(int l, const std::vector<int>& axes, const Vec3& xi)
{
    switch (l) {
    case 0: return 1.0;
    case 1: return xi(axes.at(0));
    case 2: {
        const int i = axes.at(0), j = axes.at(1);
        return xi(i) * xi(j) - (i == j ? xi.squaredNorm() / 3.0 : 0.0);
    }
    default: throw ConfigError("stf_monomial: only l <= 2 is supported");
    }
}

double psi_eval(const BasisIndex& idx, const Vec3& xi)
{
    if (static_cast<int>(idx.axes.size()) != idx.l)
        throw ConfigError("psi_eval: axis count must equal the tensor order");
    return normalized_laguerre(idx.n, idx.l, 0.5 * xi.squaredNorm()) * stf_monomial(idx.l, idx.axes, xi);
}

InnerResult weighted_inner(const VelocityFunction& f, const VelocityFunction& g,
                           const VelocityQuadrature& quad, int deg_f, int deg_g)
{
    InnerResult r;
    for (std::size_t q = 0; q < quad.nodes.size(); ++q)
        r.value += quad.weights[q] * f(quad.nodes[q]) * g(quad.nodes[q]);
    if (deg_f >= 0 && deg_g >= 0 && deg_f + deg_g > quad.exact_degree) r.inexact = true;
    return r;
}

PhiClosure PhiClosure::single_term()
{
    return {{-std::sqrt(7.5)}, {std::sqrt(15.0)}};
}

double PhiClosure::c1_norm2() const
{
    double s = 0.0;
    for (double c : c1) s += c * c;
    return s;
}

double PhiClosure::c2_norm2() const
{
    double s = 0.0;
    for (double c : c2) s += c * c;
    return s;
}

PhiClosure PhiClosure::from_json_text(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(fmt::format("closure document is not valid JSON: {}", e.what()));
    }
    if (!doc.contains("c1") || !doc.contains("c2"))
        throw ConfigError("closure document needs arrays 'c1' and 'c2'");
    PhiClosure c;
    c.c1 = doc.at("c1").get<std::vector<double>>();
    c.c2 = doc.at("c2").get<std::vector<double>>();
    if (c.c1.empty() || c.c2.empty()) throw ConfigError("closure arrays must be nonempty");
    const double r1 = std::abs(c.c1_norm2() / 7.5 - 1.0);
    const double r2 = std::abs(c.c2_norm2() / 15.0 - 1.0);
    if (r1 > 1e-6 || r2 > 1e-6)
        throw DataError(fmt::format("closure normalization violated: sum c1^2 = {:.10g} (want 7.5), "
                                    "sum c2^2 = {:.10g} (want 15)", c.c1_norm2(), c.c2_norm2()));
    return c;
}

PhiClosure PhiClosure::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open closure file '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

double PhiClosure::phi1(int i, const Vec3& xi) const
{
    const double x = 0.5 * xi.squaredNorm();
    double r = 0.0;
    for (std::size_t k = 0; k < c1.size(); ++k)
        r += c1[k] * normalized_laguerre(static_cast<int>(k) + 1, 1, x);
    return r * xi(i);
}

double PhiClosure::phi0(int i, int j, const Vec3& xi) const
{
    const double x = 0.5 * xi.squaredNorm();
    double r = 0.0;
    for (std::size_t k = 0; k < c2.size(); ++k) r += c2[k] * normalized_laguerre(static_cast<int>(k), 2, x);
    return r * stf_monomial(2, {i, j}, xi);
}

int PhiClosure::polynomial_degree() const
{
    const int d1 = 1 + 2 * static_cast<int>(c1.size());
    const int d2 = 2 + 2 * (static_cast<int>(c2.size()) - 1);
    return std::max({2, d1, d2});
}

TruncatedDistribution::TruncatedDistribution(const StateVector& U, PhiClosure closure)
    : U_(U), closure_(std::move(closure)), degree_(closure_.polynomial_degree())
{
}

double TruncatedDistribution::operator()(const Vec3& xi) const
{
    const double x = 0.5 * xi.squaredNorm();
    double f = U_.rho - std::sqrt(1.5) * U_.theta * normalized_laguerre(1, 0, x)
             + std::sqrt(3.0) * normalized_laguerre(0, 1, x) * U_.u.dot(xi);
    for (int i = 0; i < 3; ++i) f += 0.4 * U_.s(i) * closure_.phi1(i, xi);
    const Mat3 sig = U_.sigma.full();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f += 0.5 * sig(i, j) * closure_.phi0(i, j, xi);
    return f;
}

TruncatedDistribution tilde_f_from_state(const StateVector& U, const PhiClosure& closure)
{
    return TruncatedDistribution(U, closure);
}

MomentResult moment_extract(const VelocityFunction& f, const VelocityQuadrature& quad, int f_degree,
                            const PhiClosure& closure)
{
    MomentResult r;
    const int dphi = closure.polynomial_degree();
    auto inner = [&](const VelocityFunction& g, int dg) {
        const InnerResult ir = weighted_inner(f, g, quad, f_degree, dg);
        r.inexact = r.inexact || ir.inexact;
        return ir.value;
    };

    r.U.rho = inner([](const Vec3&) { return 1.0; }, 0);
    r.U.theta = -std::sqrt(2.0 / 3.0)
              * inner([](const Vec3& xi) { return normalized_laguerre(1, 0, 0.5 * xi.squaredNorm()); }, 2);
    for (int i = 0; i < 3; ++i) {
        r.U.u(i) = std::sqrt(3.0) * inner([i](const Vec3& xi) { return xi(i) / std::sqrt(3.0); }, 1);
        r.U.s(i) = inner([&closure, i](const Vec3& xi) { return closure.phi1(i, xi); }, dphi);
    }
    Mat3 sig;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            sig(i, j) = inner([&closure, i, j](const Vec3& xi) { return closure.phi0(i, j, xi); }, dphi);
            sig(j, i) = sig(i, j);
        }
    r.U.sigma = Stf2::from_full(sig);
    return r;
}

double kinetic_energy(const StateVector& U, const VelocityQuadrature& quad, const PhiClosure& closure)
{
    const TruncatedDistribution f(U, closure);
    double e = 0.0;
    for (std::size_t q = 0; q < quad.nodes.size(); ++q) {
        const double v = f(quad.nodes[q]);
        e += quad.weights[q] * v * v;
    }
    return e;
}

double wall_density(const StateVector& U_wall, double theta_W, const Frame& frame,
                    const PhiClosure& closure, int n_normal)
{
    const TruncatedDistribution f(U_wall, closure);
    const int n_tan = (f.degree() + 2) / 2 + 1;
    const VelocityQuadrature half = VelocityQuadrature::half_space(frame, n_normal, n_tan);
    double flux = 0.0;
    for (std::size_t q = 0; q < half.nodes.size(); ++q)
        flux += half.weights[q] * half.nodes[q].dot(frame.n) * f(half.nodes[q]);
    return std::sqrt(2.0 * std::numbers::pi) * flux - 0.5 * theta_W;
}

} // namespace r13
