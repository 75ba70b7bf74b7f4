#pragma once

#include <array>
#include <string>
#include <vector>

#include "r13lab/model_params.hpp"

namespace r13 {

/// Proportionality constants C1..C7 (index 0 unused) with the spread of the
/// alternative defining ratios.
struct ProportionalityConstants {
    std::array<double, 8> C{};
    std::array<double, 8> residual{};
    std::array<int, 8> defined_ratios{};
    std::vector<std::string> skipped;  ///< ratios with a vanishing denominator
    double tolerance = 1e-8;

    bool consistent() const;
};

ProportionalityConstants proportionality_constants(const MolecularModel& model, double tolerance = 1e-8);

struct MatchingSolution {
    double alpha1 = 0.0, beta1 = 0.0;
    double alpha2 = 0.0, beta2 = 0.0;
    double alpha3 = 0.0, beta3 = 0.0;
    double lsq_residual = 0.0;  ///< Euclidean residual of the 3x2 system
    double rhs_norm = 0.0;
    double condition = 0.0;     ///< condition number of the tangential 2x2 block

    bool consistent(double rel_tol = 1e-8) const { return lsq_residual <= rel_tol * rhs_norm; }
};

/// Throws SolverError when the tangential 2x2 block has condition number above 1e12.
MatchingSolution matching_solve(const MolecularModel& model);

struct IntermediateAB {
    double A1 = 0.0, A2 = 0.0, A3 = 0.0;
    double B1 = 0.0, B2 = 0.0, B3 = 0.0;
};

IntermediateAB intermediate_AB(const MolecularModel& model, double C2, double C3);

struct BoundaryCoeffs {
    std::array<double, 9> S{};  ///< S1..S8 (index 0 unused)
    std::array<double, 5> R{};  ///< R1..R4
    double T1 = 0.0, T2 = 0.0;
    double T1_tilde = 0.0, T2_tilde = 0.0;
    /// The same R coefficients reached through the other balance equation.
    std::array<double, 5> R_alt{};
    double Y1 = 0.0, Y2 = 0.0, Y3 = 0.0;
    IntermediateAB ab;
    ProportionalityConstants constants;
    MatchingSolution matching;
    double chi_tilde = 0.0;
    /// Load coefficient -(2/5) C1 m11 multiplying theta_W r_n.
    double L1_theta = 0.0;

    double scale() const;
};

BoundaryCoeffs boundary_coefficients(const MolecularModel& model, double ratio_tolerance = 1e-8);

struct AuditItem {
    std::string name;
    double margin = 0.0;  ///< >= 0 passes
    bool pass = false;
};

struct BoundaryAudit {
    std::vector<AuditItem> items;
    std::array<double, 2> block1_eigs{};  ///< [[S1, T1], [T1, S2]]
    std::array<double, 2> block2_eigs{};  ///< [[S3, T2], [T2, S4]]
    bool pass() const;
};

/// Sign and semidefiniteness conditions on the boundary quadratic form.
BoundaryAudit validate_boundary_psd(const BoundaryCoeffs& c, double tol = 1e-12);

/// Agreement of each coefficient reached along two derivation paths.
struct DuplicateAudit {
    std::vector<AuditItem> items;  ///< margin = tol - relative difference
    bool pass() const;
};

DuplicateAudit audit_duplicates(const BoundaryCoeffs& c, double rel_tol = 1e-10);

} // namespace r13
