#include "r13lab/synthetic_models.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "r13lab/errors.hpp"

namespace r13 {

SyntheticTargets SyntheticTargets::maxwell()
{
    SyntheticTargets t;
    t.S[2] = 0.0;
    t.S[4] = 0.0;
    t.T1 = 0.0;
    t.T2 = 0.0;
    t.R[1] = 0.0;
    t.R[4] = 0.0;
    return t;
}

MolecularModel make_consistent_model(const std::string& name, std::optional<double> eta, bool maxwell,
                                     const std::array<double, 11>& k, double l1, double l2,
                                     const SyntheticTargets& t, const std::string& provenance)
{
    MolecularModel md;
    md.name = name;
    md.eta = eta;
    md.maxwell = maxwell;
    md.k = k;
    md.l1 = l1;
    md.l2 = l2;
    md.chi = t.chi;
    md.provenance = provenance;
    validate_model(md);

    const double ct = md.chi_tilde;
    const auto& C = t.C;
    auto& m = md.m;

    // Tangential block. With the identity matching block the two momentum
    // paths share K = [[k3, k4], [k4, 24 k7 / 25]].
    m(4, 7) = 1.0;
    m(5, 8) = 1.0;
    m(4, 8) = 0.0;
    m(5, 7) = 0.0;
    Eigen::Matrix2d K;
    K << k[3], k[4],
         k[4], 24.0 / 25.0 * k[7];
    const Eigen::Matrix2d Kp = K.completeOrthogonalDecomposition().pseudoInverse();
    auto check = [&](const Eigen::Vector2d& rhs, const char* what) {
        const Eigen::Vector2d x = Kp * rhs;
        if ((K * x - rhs).norm() > 1e-12 * std::max(1.0, rhs.norm()))
            throw ConfigError(fmt::format("synthetic targets for {} are not reachable with these k", what));
        return x;
    };
    const Eigen::Vector2d ab1 = -check(Eigen::Vector2d(t.S[2], t.T1), "(S2, T1)");
    const Eigen::Vector2d ab2 = -check(Eigen::Vector2d(t.T1, t.S[1]), "(T1, S1)");
    const Eigen::Vector2d ab3 = check(Eigen::Vector2d(-t.R[4], t.R[2]), "(R4, R2)");

    m(3, 1) = 2.0 * (t.R[4] + k[5]) / C[6];
    m(3, 2) = 2.0 * (0.4 * k[8] - t.R[2]) / C[6];
    m(3, 3) = k[10] / C[6];
    m(3, 4) = 4.0 * k[9] / C[6];
    m(3, 5) = 3.0 * k[2] / C[6];
    m(4, 1) = ab1(0) / ct + C[2] * m(3, 1);
    m(4, 2) = -ab2(0) / ct - C[2] * m(3, 2);
    m(4, 6) = C[2] - ab3(0);
    m(5, 1) = ab1(1) / ct + C[3] * m(3, 1);
    m(5, 2) = -ab2(1) / ct - C[3] * m(3, 2);
    m(5, 6) = C[3] - ab3(1);
    for (int j = 3; j <= 5; ++j) {
        m(4, j) = C[2] * m(3, j);
        m(5, j) = C[3] * m(3, j);
    }

    // Normal block.
    m(1, 3) = 2.0 * k[6] / C[1];
    m(1, 4) = 2.4 * k[7] / C[1];
    m(1, 5) = 2.5 * k[4] / C[1];
    for (int j = 3; j <= 5; ++j) {
        m(2, j) = C[4] * m(1, j);
        m(6, j) = C[7] * m(1, j);
    }
    double C5 = C[5];
    if (k[1] == 0.0 && k[2] == 0.0) {
        m(2, 7) = 1.0;
        m(2, 8) = 1.0;
        C5 = 0.0;
    } else {
        m(2, 7) = k[1] / C5;
        m(2, 8) = k[2] / C5;
    }
    m(1, 1) = 2.5 * (t.R[1] + k[0]) / C[1];
    m(1, 2) = 2.5 * t.R[3] / C[1];
    if (C5 != 0.0) {
        m(2, 6) = t.R[1] / (1.5 * C5) - C[4];
        m(2, 1) = t.S[4] / (1.5 * C5 * ct) + C[4] * m(1, 1);
        m(2, 2) = -t.T2 / (1.5 * C5 * ct) - C[4] * m(1, 2);
    } else {
        if (t.S[4] != 0.0 || t.T2 != 0.0 || t.R[1] != 0.0)
            throw ConfigError("synthetic targets: S4, T2 and R1 must vanish when k1 = k2 = 0");
        m(2, 6) = -C[4];
        m(2, 1) = C[4] * m(1, 1);
        m(2, 2) = -C[4] * m(1, 2);
    }
    const double a2 = t.alpha2, b2 = t.beta2;
    m(6, 1) = C[7] * m(1, 1) - (t.T2 - a2 * ct * (C[4] * m(1, 1) - m(2, 1))) / (b2 * ct);
    m(6, 2) = (t.S[3] - a2 * ct * (C[4] * m(1, 2) + m(2, 2))) / (b2 * ct) - C[7] * m(1, 2);
    m(6, 6) = C[7] + (t.R[3] - 0.4 * k[8] + a2 * (m(2, 6) + C[4])) / b2;
    m(6, 7) = 1.5 * k[9] / b2;
    m(6, 8) = (0.5 * k[10] - a2 * m(2, 8)) / b2;
    m(6, 9) = (a2 * m(2, 7) - 1.5 * k[2]) / b2;

    if (k[9] == 0.0 && (t.S[6] != 0.0 || t.S[8] != 0.0))
        throw ConfigError("synthetic targets: S6 and S8 must vanish when k9 = 0");
    m(7, 1) = k[9] == 0.0 ? 0.0 : t.S[6] / (k[9] * ct);
    m(8, 1) = k[9] == 0.0 ? 0.0 : t.S[8] / (2.0 * k[9] * ct);
    return md;
}

std::array<double, 11> maxwell_k() { return {1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0}; }

std::array<double, 11> identity_test_k() { return {1, 0.5, 0.1, 0.4, 0.2, 1, 1, 0.8, 1, 1, 0.3}; }

std::array<double, 11> published_k(const std::string& eta_label)
{
    struct Row {
        const char* eta;
        double k1, k2, k10, k3, k4, k7;
    };
    static constexpr Row rows[] = {
        {"7", 3.0773e-3, 1.2550e-5, 2.8590e-7, 2.6072e-3, 4.8885e-2, 9.7119e-1},
        {"10", 8.7436e-3, 4.5818e-5, 1.1896e-6, 7.4080e-3, 8.1805e-2, 9.5624e-1},
        {"17", 1.6341e-2, 1.0021e-4, 2.8475e-6, 1.3840e-2, 1.1124e-1, 9.4576e-1},
        {"infinity", 3.0261e-2, 2.0798e-4, 6.3621e-6, 2.5607e-2, 1.5056e-1, 9.3584e-1},
    };
    for (const Row& r : rows) {
        if (eta_label != r.eta) continue;
        std::array<double, 11> k = maxwell_k();
        k[1] = r.k1;
        k[2] = r.k2;
        k[3] = r.k3;
        k[4] = r.k4;
        k[7] = r.k7;
        k[10] = r.k10;
        return k;
    }
    throw ConfigError(fmt::format("no published coefficient row for eta = {}", eta_label));
}

} // namespace r13
