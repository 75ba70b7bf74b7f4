#pragma once

#include <array>
#include <optional>
#include <string>

#include "r13lab/model_params.hpp"

namespace r13 {

/// Target boundary coefficients from which a consistent m-table is solved.
/// The tangential matching block is fixed to the identity (m47 = m58 = 1,
/// m48 = m57 = 0). Indices are 1-based; slot 0 is unused.
struct SyntheticTargets {
    double chi = 1.0;
    std::array<double, 8> C{0.0, 1.25, 0.5, 0.25, 0.3, 0.8, 2.0, 0.4};
    double alpha2 = 0.5;
    double beta2 = 0.7;
    std::array<double, 9> S{0.0, 0.3, 0.5, 0.4, 0.6, 0.0, 0.25, 0.0, 0.35};  ///< S5, S7 follow from C
    double T1 = 0.1;
    double T2 = 0.2;
    std::array<double, 5> R{0.0, 0.2, 0.15, 0.1, -0.3};

    /// Zeroes S2, S4, T1, T2, R1, R4 as the Maxwell limit requires.
    static SyntheticTargets maxwell();
};

/// Builds a model whose m-table reproduces `targets` exactly along every
/// derivation path. Throws ConfigError if the targets are incompatible with k.
MolecularModel make_consistent_model(const std::string& name, std::optional<double> eta, bool maxwell,
                                     const std::array<double, 11>& k, double l1, double l2,
                                     const SyntheticTargets& targets, const std::string& provenance = {});

/// k-vectors used by the bundled model files. Only k1, k2, k3, k4, k7, k10
/// have published values; the rest are filled with the Maxwell values.
std::array<double, 11> published_k(const std::string& eta_label);
std::array<double, 11> maxwell_k();
/// Well-conditioned non-Maxwell coefficients for tests.
std::array<double, 11> identity_test_k();

} // namespace r13
