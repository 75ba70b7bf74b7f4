#pragma once

#include <array>
#include <optional>
#include <string>

namespace r13 {

/// Boundary coefficient table m_jk, rows 1..8 and columns 1..9, 1-based.
class MTable {
public:
    double operator()(int j, int k) const { return v_[idx(j, k)]; }
    double& operator()(int j, int k) { return v_[idx(j, k)]; }

    /// True for the (j, k) pairs that appear in the wall conditions.
    static bool used(int j, int k);
    static std::string key(int j, int k);

private:
    static std::size_t idx(int j, int k);
    std::array<double, 72> v_{};
};

struct MolecularModel {
    std::string name;
    std::optional<double> eta;  ///< empty means "infinity" (hard spheres)
    bool maxwell = false;
    double chi = 1.0;
    double chi_tilde = 2.0;
    std::array<double, 11> k{};
    double l1 = 1.0;
    double l2 = 1.0;
    MTable m;
    std::string provenance;

    std::string eta_label() const;
};

/// Recomputes chi_tilde and enforces the parameter invariants; throws
/// ConfigError naming the offending field.
void validate_model(MolecularModel& model);

/// Parses a JSON model document (schema in the README).
MolecularModel load_model_text(const std::string& json_text);
MolecularModel load_model_file(const std::string& path);

/// Serializes with %.17g so that a load round trip is bit-exact.
std::string model_to_json(const MolecularModel& model);

enum class ConstraintStatus { strict, boundary, violated, degenerate };
std::string to_string(ConstraintStatus s);

struct ConstraintReport {
    double z1 = 0.0;  ///< k1 k10 - 3 k2^2
    double w1 = 0.0;  ///< 3 k2^2 / (k1 k10)
    double z2 = 0.0;  ///< 24 k3 k7 - 25 k4^2
    double w2 = 0.0;  ///< 25 k4^2 / (24 k3 k7)
    ConstraintStatus status1 = ConstraintStatus::degenerate;
    ConstraintStatus status2 = ConstraintStatus::degenerate;

    bool strict() const
    {
        return status1 == ConstraintStatus::strict && status2 == ConstraintStatus::strict;
    }
};

ConstraintReport thermo_discriminants(const MolecularModel& model);

/// Maxwell-molecule limit: k0 = k5 = 1 and k1..k4 = 0, everything else kept.
MolecularModel maxwell_specialize(const MolecularModel& model);

} // namespace r13
