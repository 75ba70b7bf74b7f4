#include "r13lab/onsager_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "r13lab/errors.hpp"

namespace r13 {

bool ProportionalityConstants::consistent() const
{
    for (int i = 1; i <= 7; ++i)
        if (residual[i] > tolerance) return false;
    return true;
}

namespace {

struct Ratio {
    double num;
    double den;
    std::string label;
};

double rel_diff(double a, double b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

} // namespace

ProportionalityConstants proportionality_constants(const MolecularModel& model, double tolerance)
{
    const auto& k = model.k;
    const auto& m = model.m;
    const std::array<std::vector<Ratio>, 8> ratios = {{
        {},
        {{2.5 * k[4], m(1, 5), "5/2 k4 / m15"}, {2.0 * k[6], m(1, 3), "2 k6 / m13"},
         {2.4 * k[7], m(1, 4), "12/5 k7 / m14"}},
        {{m(4, 3), m(3, 3), "m43 / m33"}, {m(4, 4), m(3, 4), "m44 / m34"}, {m(4, 5), m(3, 5), "m45 / m35"}},
        {{m(5, 3), m(3, 3), "m53 / m33"}, {m(5, 4), m(3, 4), "m54 / m34"}, {m(5, 5), m(3, 5), "m55 / m35"}},
        {{m(2, 3), m(1, 3), "m23 / m13"}, {m(2, 4), m(1, 4), "m24 / m14"}, {m(2, 5), m(1, 5), "m25 / m15"}},
        {{k[1], m(2, 7), "k1 / m27"}, {k[2], m(2, 8), "k2 / m28"}},
        {{3.0 * k[2], m(3, 5), "3 k2 / m35"}, {4.0 * k[9], m(3, 4), "4 k9 / m34"},
         {k[10], m(3, 3), "k10 / m33"}},
        {{m(6, 3), m(1, 3), "m63 / m13"}, {m(6, 4), m(1, 4), "m64 / m14"}, {m(6, 5), m(1, 5), "m65 / m15"}},
    }};

    ProportionalityConstants pc;
    pc.tolerance = tolerance;
    for (int c = 1; c <= 7; ++c) {
        std::vector<double> vals;
        for (const Ratio& r : ratios[c]) {
            if (r.den == 0.0) {
                pc.skipped.push_back(fmt::format("C{}: {}", c, r.label));
                continue;
            }
            vals.push_back(r.num / r.den);
        }
        if (vals.empty()) throw DataError(fmt::format("C{} is undefined: every defining ratio has a zero denominator", c));
        pc.C[c] = vals.front();
        pc.defined_ratios[c] = static_cast<int>(vals.size());
        double res = 0.0;
        for (std::size_t a = 0; a < vals.size(); ++a)
            for (std::size_t b = a + 1; b < vals.size(); ++b) res = std::max(res, rel_diff(vals[a], vals[b]));
        pc.residual[c] = res;
    }
    return pc;
}

MatchingSolution matching_solve(const MolecularModel& model)
{
    const auto& k = model.k;
    const auto& m = model.m;
    Eigen::Matrix2d T;
    T << m(4, 7), m(5, 7),
         m(4, 8), m(5, 8);
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(T);
    const double smax = svd.singularValues()(0), smin = svd.singularValues()(1);
    MatchingSolution s;
    s.condition = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(s.condition <= 1e12))
        throw SolverError(fmt::format("tangential matching block [[m47, m57], [m48, m58]] is singular "
                                      "(condition {:.3g})", s.condition));

    const Eigen::PartialPivLU<Eigen::Matrix2d> lu(T);
    const Eigen::Vector2d ab1 = lu.solve(Eigen::Vector2d(k[4], 24.0 / 25.0 * k[7]));
    const Eigen::Vector2d ab3 = lu.solve(Eigen::Vector2d(k[3], k[4]));
    s.alpha1 = ab1(0);
    s.beta1 = ab1(1);
    s.alpha3 = ab3(0);
    s.beta3 = ab3(1);

    Eigen::Matrix<double, 3, 2> N;
    N << m(2, 7), -m(6, 9),
         0.0,     -m(6, 7),
         -m(2, 8), -m(6, 8);
    const Eigen::Vector3d rhs = 0.5 * Eigen::Vector3d(3.0 * k[2], -3.0 * k[9], -k[10]);
    const Eigen::Vector2d ab2 = N.colPivHouseholderQr().solve(rhs);
    s.alpha2 = ab2(0);
    s.beta2 = ab2(1);
    s.lsq_residual = (N * ab2 - rhs).norm();
    s.rhs_norm = rhs.norm();
    return s;
}

IntermediateAB intermediate_AB(const MolecularModel& model, double C2, double C3)
{
    const auto& m = model.m;
    const double ct = model.chi_tilde;
    IntermediateAB r;
    r.A1 = ct * (m(4, 1) - C2 * m(3, 1));
    r.A2 = ct * (-m(4, 2) - C2 * m(3, 2));
    r.A3 = -m(4, 6) + C2;
    r.B1 = ct * (m(5, 1) - C3 * m(3, 1));
    r.B2 = ct * (-m(5, 2) - C3 * m(3, 2));
    r.B3 = -m(5, 6) + C3;
    return r;
}

double BoundaryCoeffs::scale() const
{
    double s = 0.0;
    for (int i = 1; i <= 8; ++i) s = std::max(s, std::abs(S[i]));
    for (int i = 1; i <= 4; ++i) s = std::max({s, std::abs(R[i]), std::abs(R_alt[i])});
    return std::max({s, std::abs(T1), std::abs(T2), std::abs(T1_tilde), std::abs(T2_tilde)});
}

BoundaryCoeffs boundary_coefficients(const MolecularModel& model, double ratio_tolerance)
{
    BoundaryCoeffs b;
    b.constants = proportionality_constants(model, ratio_tolerance);
    b.matching = matching_solve(model);
    const auto& C = b.constants.C;
    const auto& k = model.k;
    const auto& m = model.m;
    const double ct = model.chi_tilde;
    const MatchingSolution& ms = b.matching;
    b.chi_tilde = ct;
    b.ab = intermediate_AB(model, C[2], C[3]);
    const IntermediateAB& ab = b.ab;

    // Heat-flux balance.
    b.S[5] = 2.0 * C[1] / (5.0 * ct);
    b.R[1] = 0.4 * C[1] * m(1, 1) - k[0];
    b.R[3] = 0.4 * C[1] * m(1, 2);
    b.L1_theta = -0.4 * C[1] * m(1, 1);
    b.S[1] = -(ms.alpha1 * ab.A2 + ms.beta1 * ab.B2);
    b.T1 = -(ms.alpha1 * ab.A1 + ms.beta1 * ab.B1);
    b.R[2] = ms.alpha1 * ab.A3 + ms.beta1 * ab.B3;

    // Energy balance.
    b.R_alt[1] = 1.5 * C[5] * (C[4] + m(2, 6));
    b.T2 = -1.5 * C[5] * ct * (m(2, 2) + C[4] * m(1, 2));
    b.S[4] = 1.5 * C[5] * ct * (m(2, 1) - C[4] * m(1, 1));

    // Stress balance.
    b.S[6] = k[9] * ct * m(7, 1);
    b.S[8] = 2.0 * k[9] * ct * m(8, 1);
    b.S[7] = C[6] / (2.0 * ct);
    b.R[4] = 0.5 * C[6] * m(3, 1) - k[5];
    b.R_alt[2] = -0.5 * C[6] * m(3, 2) + 0.4 * k[8];
    b.Y1 = ms.alpha2 * ct * (C[4] * m(1, 1) - m(2, 1)) + ms.beta2 * ct * (C[7] * m(1, 1) - m(6, 1));
    b.Y2 = ms.alpha2 * ct * (C[4] * m(1, 2) + m(2, 2)) + ms.beta2 * ct * (C[7] * m(1, 2) + m(6, 2));
    b.Y3 = -ms.alpha2 * (m(2, 6) + C[4]) + ms.beta2 * (m(6, 6) - C[7]);
    b.R_alt[3] = b.Y3 + 0.4 * k[8];
    b.T2_tilde = b.Y1;
    b.S[3] = b.Y2;

    // Momentum balance.
    b.S[2] = -(ms.alpha3 * ab.A1 + ms.beta3 * ab.B1);
    b.T1_tilde = -(ms.alpha3 * ab.A2 + ms.beta3 * ab.B2);
    b.R_alt[4] = -(ms.alpha3 * ab.A3 + ms.beta3 * ab.B3);
    return b;
}

bool BoundaryAudit::pass() const
{
    return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.pass; });
}

namespace {

std::array<double, 2> sym2_eigs(double a, double b, double c)
{
    const double mean = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    return {mean - rad, mean + rad};
}

} // namespace

BoundaryAudit validate_boundary_psd(const BoundaryCoeffs& c, double tol)
{
    BoundaryAudit a;
    for (int i = 1; i <= 8; ++i)
        a.items.push_back({fmt::format("S{} >= 0", i), c.S[i], c.S[i] >= -tol});
    const double d1 = c.S[1] * c.S[2] - c.T1 * c.T1;
    const double d2 = c.S[3] * c.S[4] - c.T2 * c.T2;
    a.items.push_back({"T1^2 <= S1 S2", d1, d1 >= -tol});
    a.items.push_back({"T2^2 <= S3 S4", d2, d2 >= -tol});
    a.block1_eigs = sym2_eigs(c.S[1], c.T1, c.S[2]);
    a.block2_eigs = sym2_eigs(c.S[3], c.T2, c.S[4]);
    a.items.push_back({"[[S1,T1],[T1,S2]] PSD", a.block1_eigs[0], a.block1_eigs[0] >= -tol});
    a.items.push_back({"[[S3,T2],[T2,S4]] PSD", a.block2_eigs[0], a.block2_eigs[0] >= -tol});
    return a;
}

bool DuplicateAudit::pass() const
{
    return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.pass; });
}

DuplicateAudit audit_duplicates(const BoundaryCoeffs& c, double rel_tol)
{
    // Values at roundoff level relative to the coefficient scale count as zero
    // on both paths; a relative comparison between them is meaningless.
    const double zero = 1e-14 * std::max(c.scale(), 1.0);
    auto item = [&](const std::string& name, double x, double y) {
        double rel = rel_diff(x, y);
        if (std::abs(x) <= zero && std::abs(y) <= zero) rel = 0.0;
        return AuditItem{name, rel_tol - rel, rel <= rel_tol};
    };
    DuplicateAudit d;
    d.items.push_back(item("T1 = T1~", c.T1, c.T1_tilde));
    d.items.push_back(item("T2 = T2~", c.T2, c.T2_tilde));
    for (int i = 1; i <= 4; ++i)
        d.items.push_back(item(fmt::format("R{} paths agree", i), c.R[i], c.R_alt[i]));
    return d;
}

} // namespace r13
